#include "becscat/radial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "becscat/error.hpp"

namespace becscat {

RadialGrid::RadialGrid(std::size_t n, double r_max) : n_(n), r_max_(r_max), dr_(0.0) {
  if (n < kMinGridNodes) {
    throw Error(ErrorKind::invalid_config,
                "radial grid needs at least 16 nodes, got " + std::to_string(n));
  }
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw Error(ErrorKind::invalid_config, "radial grid r_max must be positive and finite");
  }
  dr_ = r_max / static_cast<double>(n - 1);
}

std::vector<double> RadialGrid::nodes() const {
  std::vector<double> r(n_);
  for (std::size_t j = 0; j < n_; ++j) r[j] = (*this)[j];
  return r;
}

RadialGrid build_grid(std::size_t n, double r_max) { return RadialGrid(n, r_max); }

double default_r_max(double gamma) {
  if (gamma <= 0.0) return 8.0;
  return std::max(8.0, 2.0 * std::pow(15.0 * gamma, 0.2));
}

RadialGrid default_grid(double gamma) {
  return build_grid(kDefaultGridNodes, default_r_max(gamma));
}

}  // namespace becscat
