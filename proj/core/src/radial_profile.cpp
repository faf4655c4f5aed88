#include "becscat/radial_profile.hpp"

#include <cmath>
#include <numbers>

#include "becscat/error.hpp"
#include "becscat/quadrature.hpp"

namespace becscat {

RadialProfile::RadialProfile(RadialGrid grid, std::vector<double> u)
    : grid_(grid), u_(std::move(u)) {
  if (u_.size() != grid_.size()) {
    throw Error(ErrorKind::invalid_input, "profile size does not match its grid");
  }
  for (double v : u_) {
    if (!std::isfinite(v)) throw Error(ErrorKind::invalid_input, "profile has non-finite samples");
  }
  if (u_.front() != 0.0 || u_.back() != 0.0) {
    throw Error(ErrorKind::invalid_input, "profile must vanish at r = 0 and r = r_max");
  }
}

double RadialProfile::norm_squared() const {
  std::vector<double> sq(u_.size());
  for (std::size_t j = 0; j < u_.size(); ++j) sq[j] = u_[j] * u_[j];
  return simpson(sq, grid_.spacing());
}

double RadialProfile::origin_slope() const noexcept {
  // u1 = c h + d h^3, u2 = 2 c h + 8 d h^3.
  return (8.0 * u_[1] - u_[2]) / (6.0 * grid_.spacing());
}

double RadialProfile::density(std::size_t j) const noexcept {
  const double ratio = j == 0 ? origin_slope() : u_[j] / grid_[j];
  return ratio * ratio / (4.0 * std::numbers::pi);
}

RadialProfile normalize(const RadialProfile& profile) {
  const double norm2 = profile.norm_squared();
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw Error(ErrorKind::degenerate_profile, "cannot normalize a profile with zero norm");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  std::vector<double> u(profile.values().begin(), profile.values().end());
  for (double& v : u) v *= scale;
  return RadialProfile(profile.grid(), std::move(u));
}

double l2_distance(const RadialProfile& a, const RadialProfile& b) {
  if (!(a.grid() == b.grid())) {
    throw Error(ErrorKind::invalid_input, "l2_distance needs profiles on the same grid");
  }
  std::vector<double> d2(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    d2[j] = d * d;
  }
  return std::sqrt(simpson(d2, a.grid().spacing()));
}

RadialProfile make_profile(const RadialGrid& grid, std::vector<double> u) {
  if (u.size() == grid.size()) {
    u.front() = 0.0;
    u.back() = 0.0;
  }
  return RadialProfile(grid, std::move(u));
}

}  // namespace becscat
