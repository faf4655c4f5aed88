#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {

using boost::math::quadrature::gauss_kronrod;

double j0(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

double closed_form(long double t) {
  const long double s = std::sin(t), c = std::cos(t);
  return static_cast<double>(15.0L * ((3.0L - t * t) * s - 3.0L * t * c) / std::pow(t, 5.0L));
}

}  // namespace

double tf_form_factor_quadrature(double t) {
  auto f = [t](double x) { return (1.0 - x * x) * x * x * j0(t * x); };
  // Fixed 30-point Gauss-Legendre on pieces holding under half a period of j0.
  const int pieces = 2 + static_cast<int>(t / 2.0);
  double sum = 0.0;
  for (int p = 0; p < pieces; ++p) {
    const double a = static_cast<double>(p) / pieces;
    const double b = static_cast<double>(p + 1) / pieces;
    sum += boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
  }
  return 7.5 * sum;
}

double tf_first_zero() {
  auto f = [](double t) { return (3.0 - t * t) * std::sin(t) - 3.0 * t * std::cos(t); };
  double lo = 4.5, hi = 6.5;
  if (f(lo) * f(hi) > 0.0) throw std::logic_error("zero not bracketed");
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double tf_sigma_constant() {
  const double split = 40.0;
  double head = 0.0;
  for (int p = 0; p < 40; ++p) {
    const double a = p, b = p + 1;
    head += gauss_kronrod<double, 31>::integrate(
        [](double t) {
          const double s = tf_form_factor_quadrature(t);
          return s * s * t;
        },
        a * split / 40.0, b * split / 40.0, 0, 0);
  }
  // Beyond t = 40 the closed form is well conditioned; integrate period by
  // period out to 4000 and add the mean tail 225/2 * integral t^-5.
  double mid = 0.0;
  const double pi = std::numbers::pi;
  double a = split;
  while (a < 4000.0) {
    const double b = a + pi;
    mid += gauss_kronrod<double, 31>::integrate(
        [](double t) {
          const double s = closed_form(t);
          return s * s * t;
        },
        a, b, 0, 0);
    a = b;
  }
  const double tail = 112.5 / (4.0 * std::pow(a, 4.0));
  return head + mid + tail;
}

double harmonic_u(double r) {
  return 2.0 * std::pow(std::numbers::pi, -0.25) * r * std::exp(-0.5 * r * r);
}

double perturbative_mu(double gamma) {
  // u^4 / r^2 = r^2 (u / r)^4 with u / r = 2 pi^(-1/4) exp(-r^2 / 2)
  auto f = [](double r) {
    const double ratio = 2.0 * std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * r * r);
    return r * r * ratio * ratio * ratio * ratio;
  };
  return 1.5 + gamma * gauss_kronrod<double, 61>::integrate(f, 0.0, 12.0, 10, 1e-14);
}

double gaussian_form_factor(double q) { return std::exp(-0.25 * q * q); }

double gaussian_total_cross_section(double gamma, double k) {
  return 8.0 * std::numbers::pi * gamma * gamma * -std::expm1(-2.0 * k * k) / (k * k);
}

double cartesian_form_factor(const becscat::RadialProfile& profile, double q,
                             double half_width, std::size_t points) {
  const auto& grid = profile.grid();
  const double dr = grid.spacing();
  auto ratio = [&](double r) {  // u(r) / r
    if (r >= grid.r_max()) return 0.0;
    const double x = r / dr;
    const auto j = static_cast<std::size_t>(x);
    auto at = [&](std::size_t i) { return i == 0 ? profile.origin_slope() : profile[i] / grid[i]; };
    const double w = x - static_cast<double>(j);
    return (1.0 - w) * at(j) + w * at(j + 1);
  };
  const double h = 2.0 * half_width / static_cast<double>(points);
  const double four_pi = 4.0 * std::numbers::pi;
  double sum = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = -half_width + (i + 0.5) * h;
    for (std::size_t j = 0; j < points; ++j) {
      const double y = -half_width + (j + 0.5) * h;
      for (std::size_t k = 0; k < points; ++k) {
        const double z = -half_width + (k + 0.5) * h;
        const double v = ratio(std::sqrt(x * x + y * y + z * z));
        sum += v * v / four_pi * std::cos(q * z);
      }
    }
  }
  return sum * h * h * h;
}

double trap_length(double mass, double omega) {
  const double hbar = 6.62607015e-34 / (2.0 * std::numbers::pi);
  return std::sqrt(hbar / (mass * omega));
}

}  // namespace oracle
