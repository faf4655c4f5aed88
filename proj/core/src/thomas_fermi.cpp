#include "becscat/thomas_fermi.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "becscat/error.hpp"

namespace becscat {

namespace {

void require_positive_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::unsupported_regime,
                "Thomas-Fermi limit needs gamma > 0, got " + std::to_string(gamma));
  }
}

}  // namespace

TfState tf_state(double gamma) {
  const double radius = tf_radius(gamma);
  return {gamma, 0.5 * radius * radius, radius};
}

double tf_chemical_potential(double gamma) {
  const double radius = tf_radius(gamma);
  return 0.5 * radius * radius;
}

double tf_radius(double gamma) {
  require_positive_gamma(gamma);
  return std::pow(15.0 * gamma, 0.2);
}

double cutoff_radius_from_mu(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorKind::invalid_input, "cutoff radius needs mu > 0");
  }
  return std::sqrt(2.0 * mu);
}

RadialProfile tf_profile(double gamma, const RadialGrid& grid) {
  const TfState tf = tf_state(gamma);
  if (grid.r_max() < tf.radius) {
    throw Error(ErrorKind::truncated_support,
                "grid r_max " + std::to_string(grid.r_max()) + " is inside the TF radius " +
                    std::to_string(tf.radius));
  }
  const double amplitude2 = tf.mu / gamma;
  std::vector<double> u(grid.size(), 0.0);
  for (std::size_t j = 1; j + 1 < grid.size(); ++j) {
    const double r = grid[j];
    const double x = r / tf.radius;
    if (x < 1.0) u[j] = r * std::sqrt(amplitude2 * (1.0 - x * x));
  }
  return RadialProfile(grid, std::move(u));
}

double tf_form_factor(double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::invalid_input, "tf_form_factor needs t >= 0");
  const double t2 = t * t;
  if (t <= kTfSeriesSwitch) {
    // sum_k 15 (-1)^k t^(2k) / ((2k+1)! (2k+3) (2k+5)), Horner in t^2.
    double sum = 0.0;
    for (int k = kTfSeriesTerms - 1; k >= 0; --k) {
      double factorial = 1.0;
      for (int i = 2; i <= 2 * k + 1; ++i) factorial *= i;
      const double c = (k % 2 == 0 ? 15.0 : -15.0) / (factorial * (2 * k + 3) * (2 * k + 5));
      sum = sum * t2 + c;
    }
    return sum;
  }
  const double t5 = t2 * t2 * t;
  return 15.0 * ((3.0 - t2) * std::sin(t) - 3.0 * t * std::cos(t)) / t5;
}

}  // namespace becscat
