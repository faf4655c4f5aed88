#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "becscat/curve_analysis.hpp"
#include "becscat/error.hpp"

using namespace becscat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::file_error;
}

CrossSectionCurve sampled(double lo, double hi, std::size_t n, auto f) {
  CrossSectionCurve c;
  c.abscissa = Abscissa::q;
  c.ordinate = Ordinate::dsigma_domega;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n - 1);
    c.x.push_back(x);
    c.y.push_back(f(x));
  }
  return c;
}

}  // namespace

TEST_CASE("power law fit recovers its generator") {
  const auto c = sampled(1.0, 20.0, 20, [](double x) { return 7.0 * std::pow(x, -2.0); });
  const PowerLawFit f = fit_power_law(c, {0.5, 25.0});
  CHECK_THAT(f.exponent, WithinAbs(-2.0, 1e-12));
  CHECK_THAT(f.prefactor, WithinRel(7.0, 1e-12));
  CHECK(f.rms <= 1e-12);
  CHECK(f.points == 20);
}

TEST_CASE("log-linear fit recovers its generator") {
  const auto c = sampled(0.0, 10.0, 50, [](double x) { return 3.0 * std::exp(-1.7 * x); });
  const ExponentialFit f = fit_log_linear(c, {2.0, 9.0});
  CHECK_THAT(f.rate, WithinAbs(-1.7, 1e-12));
  CHECK_THAT(f.prefactor, WithinRel(3.0, 1e-10));
  CHECK(f.rms <= 1e-12);
  CHECK(f.points == 35);
}

TEST_CASE("fits reject thin or non-positive data") {
  const auto c = sampled(1.0, 2.0, 7, [](double x) { return x; });
  CHECK(kind_of([&] { fit_power_law(c, {0.0, 3.0}); }) == ErrorKind::insufficient_data);
  CHECK(kind_of([&] { fit_log_linear(c, {0.0, 3.0}); }) == ErrorKind::insufficient_data);
  auto z = sampled(1.0, 2.0, 20, [](double x) { return x; });
  z.y[5] = 0.0;
  CHECK(kind_of([&] { fit_power_law(z, {0.0, 3.0}); }) == ErrorKind::invalid_input);
  CHECK(kind_of([&] { fit_log_linear(z, {0.0, 3.0}); }) == ErrorKind::invalid_input);
  const auto neg = sampled(-2.0, -1.0, 20, [](double) { return 1.0; });
  CHECK(kind_of([&] { fit_power_law(neg, {-3.0, 0.0}); }) == ErrorKind::invalid_input);
}

TEST_CASE("oscillation period of a sine-squared signal") {
  for (double p : {0.459, 1.0, 2.5}) {
    const auto c = sampled(0.013, 20.0 * p, 4003, [p](double x) {
      const double s = std::sin(std::numbers::pi * x / p);
      return s * s;
    });
    CAPTURE(p);
    CHECK_THAT(detect_oscillation_period(c, {0.0, 20.0 * p}), WithinRel(p, 1e-6));
  }
}

TEST_CASE("oscillation detection needs four minima") {
  const auto c = sampled(0.1, 3.4, 500, [](double x) { return std::pow(std::sin(x), 2) + 0.1; });
  CHECK(local_minima(c, {0.0, 3.4}).size() == 1);
  CHECK(kind_of([&] { detect_oscillation_period(c, {0.0, 3.4}); }) == ErrorKind::insufficient_data);
  const auto d = sampled(0.1, 12.6, 2000, [](double x) { return std::pow(std::sin(x), 2) + 0.1; });
  CHECK(local_minima(d, {0.0, 12.6}).size() == 4);
  CHECK_THAT(detect_oscillation_period(d, {0.0, 12.6}), WithinRel(std::numbers::pi, 1e-5));
}

TEST_CASE("envelope through the maxima of a damped oscillation") {
  const auto c = sampled(5.0, 100.0, 40001, [](double x) {
    return std::abs(std::sin(x)) / (x * x * x);
  });
  const CrossSectionCurve env = envelope(c, {10.0, 100.0});
  CHECK(env.x.size() >= 28);
  for (double x : env.x) REQUIRE(x >= 10.0);
  // maxima sit where tan x = x / 3, slightly below |sin x| = 1
  const PowerLawFit f = fit_power_law(env, {10.0, 100.0});
  CHECK_THAT(f.exponent, WithinAbs(-3.0, 0.02));
}

TEST_CASE("exponential tails look curved on log-log axes") {
  const auto c = sampled(0.0, 60.0, 60001, [](double x) {
    const double s = std::cos(3.0 * x);
    return std::exp(-0.8 * x) * (s * s + 1e-3);
  });
  double previous_rms = 0.0;
  for (double hi : {20.0, 40.0, 60.0}) {
    const CrossSectionCurve env = envelope(c, {5.0, hi});
    const double loglog = fit_power_law(env, {5.0, hi}).rms;
    const double loglin = fit_log_linear(env, {5.0, hi}).rms;
    CAPTURE(hi, loglog, loglin);
    CHECK(loglog > previous_rms);
    CHECK(loglin < 1e-3);
    CHECK(loglog > 5.0 * loglin);
    previous_rms = loglog;
  }
}
