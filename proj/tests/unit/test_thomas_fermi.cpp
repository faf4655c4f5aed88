#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "becscat/error.hpp"
#include "becscat/quadrature.hpp"
#include "becscat/thomas_fermi.hpp"
#include "oracles.hpp"

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

}  // namespace

TEST_CASE("chemical potential and radius closed forms") {
  CHECK_THAT(tf_chemical_potential(1.0 / 15.0), WithinRel(0.5, 1e-14));
  CHECK_THAT(tf_radius(1.0 / 15.0), WithinRel(1.0, 1e-14));
  CHECK_THAT(tf_chemical_potential(10.0), WithinAbs(3.7103, 5e-5));
  CHECK_THAT(tf_chemical_potential(1000.0), WithinAbs(23.41, 5e-3));
  // 15000^0.2 = 6.84255...; the commonly quoted 6.8438 is off in the fourth decimal.
  CHECK_THAT(tf_radius(1000.0), WithinRel(std::exp(std::log(15000.0) / 5.0), 1e-14));
  CHECK_THAT(tf_radius(1000.0), WithinAbs(6.8438, 2e-3));
  CHECK_THAT(tf_chemical_potential(0.1), WithinAbs(0.5 * std::pow(1.5, 0.4), 1e-14));
  const TfState s = tf_state(42.0);
  CHECK(s.gamma == 42.0);
  CHECK(s.mu == tf_chemical_potential(42.0));
  CHECK(s.radius == tf_radius(42.0));
}

TEST_CASE("non-positive gamma is outside the TF regime") {
  CHECK(kind_of([] { tf_radius(0.0); }) == ErrorKind::unsupported_regime);
  CHECK(kind_of([] { tf_chemical_potential(-1.0); }) == ErrorKind::unsupported_regime);
  CHECK(kind_of([] { tf_state(0.0); }) == ErrorKind::unsupported_regime);
}

TEST_CASE("cutoff radius from a chemical potential") {
  CHECK_THAT(cutoff_radius_from_mu(0.5), WithinRel(1.0, 1e-15));
  CHECK_THAT(cutoff_radius_from_mu(2.0), WithinRel(2.0, 1e-15));
  CHECK_THAT(cutoff_radius_from_mu(23.41), WithinAbs(6.8425, 1e-3));
  CHECK_THAT(cutoff_radius_from_mu(tf_chemical_potential(1000.0)),
             WithinRel(tf_radius(1000.0), 1e-14));
  CHECK(kind_of([] { cutoff_radius_from_mu(0.0); }) == ErrorKind::invalid_input);
}

TEST_CASE("profile has a hard edge and unit continuum norm") {
  const double gamma = 1000.0;
  const RadialGrid g(4096, default_r_max(gamma));
  const RadialProfile p = tf_profile(gamma, g);
  const double radius = tf_radius(gamma);
  CHECK(p[0] == 0.0);
  CHECK_THAT(p.density(0),
             WithinRel(tf_chemical_potential(gamma) / (4.0 * std::numbers::pi * gamma), 1e-9));
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] >= radius) REQUIRE(p[j] == 0.0);
  }
  CHECK_THAT(p.norm_squared(), WithinAbs(1.0, 1e-3));
}

TEST_CASE("truncated box is rejected") {
  const RadialGrid g(512, 5.0);
  CHECK(kind_of([&] { tf_profile(1000.0, g); }) == ErrorKind::truncated_support);
}

TEST_CASE("form factor against direct quadrature of the density") {
  CHECK(tf_form_factor(0.0) == 1.0);
  double worst = 0.0;
  for (double t = 0.0; t <= 50.0; t += 0.0625) {
    worst = std::max(worst, std::abs(tf_form_factor(t) - oracle::tf_form_factor_quadrature(t)));
  }
  CHECK(worst <= 1e-6);
  // around the branch switch
  for (double t : {1e-8, 1e-4, 1e-2, 0.49, 0.5, 0.51, 0.75}) {
    CAPTURE(t);
    CHECK_THAT(tf_form_factor(t), WithinAbs(oracle::tf_form_factor_quadrature(t), 1e-12));
  }
}

TEST_CASE("small argument series") {
  for (double t : {1e-3, 1e-2, 0.1}) {
    CHECK_THAT(tf_form_factor(t), WithinAbs(1.0 - t * t / 14.0 + std::pow(t, 4) / 504.0,
                                            std::pow(t, 6) / 1000.0 + 1e-16));
  }
  CHECK(kind_of([] { tf_form_factor(-1e-9); }) == ErrorKind::invalid_input);
}

TEST_CASE("first zero of the form factor") {
  const double zero = oracle::tf_first_zero();
  CHECK_THAT(zero, WithinAbs(5.7635, 1e-3));
  CHECK(std::abs(tf_form_factor(5.7635)) <= 1e-4);
  CHECK(std::abs(tf_form_factor(zero)) <= 1e-12);
}

TEST_CASE("large argument behaviour") {
  // Leading term is -15 sin t / t^3; the next term is of order 45 / t^4.
  for (double t : {100.0, 237.5, 1000.0}) {
    const double lead = -15.0 * std::sin(t) / (t * t * t);
    CAPTURE(t);
    CHECK(std::abs(tf_form_factor(t) - lead) <= 15.0 * (3.0 * t + 3.0) / std::pow(t, 5));
  }
}
