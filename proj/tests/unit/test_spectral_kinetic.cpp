#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "becscat/error.hpp"
#include "becscat/gpe_solver.hpp"
#include "becscat/spectral_kinetic.hpp"
#include "oracles.hpp"

using namespace becscat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> sine_mode(const RadialGrid& g, int m) {
  std::vector<double> u(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    u[j] = std::sin(std::numbers::pi * m * static_cast<double>(j) / (g.size() - 1));
  }
  u.front() = u.back() = 0.0;
  return u;
}

}  // namespace

TEST_CASE("eigenvalues of the Dirichlet sine modes") {
  const RadialGrid g(257, 5.0);
  SpectralKinetic t(g);
  for (int m : {1, 2, 17, 255}) {
    const double k = std::numbers::pi * m / 5.0;
    CHECK_THAT(t.eigenvalue(m), WithinRel(0.5 * k * k, 1e-15));
  }
}

TEST_CASE("sine modes are exact eigenvectors of apply and propagate") {
  const RadialGrid g(513, 6.0);
  SpectralKinetic t(g);
  for (int m : {1, 3, 40}) {
    const auto u = sine_mode(g, m);
    std::vector<double> tu(g.size());
    t.apply(u, tu);
    const double lambda = t.eigenvalue(m);
    // rounding scales with the top of the spectrum
    const double tol = 1e-14 * t.eigenvalue(g.size() - 2);
    for (std::size_t j = 0; j < g.size(); ++j) REQUIRE_THAT(tu[j], WithinAbs(lambda * u[j], tol));

    auto v = u;
    t.propagate(v, 0.01);
    const double decay = std::exp(-lambda * 0.01);
    for (std::size_t j = 0; j < g.size(); ++j) REQUIRE_THAT(v[j], WithinAbs(decay * u[j], 1e-13));
  }
}

TEST_CASE("second derivative of the harmonic ground state") {
  // -u''/2 = (3/2 - r^2/2) u for u = r exp(-r^2/2)
  const RadialGrid g(4096, 8.0);
  SpectralKinetic t(g);
  std::vector<double> u(g.size()), tu(g.size());
  for (std::size_t j = 0; j + 1 < g.size(); ++j) u[j] = oracle::harmonic_u(g[j]);
  t.apply(u, tu);
  // Rounding is amplified by the largest eigenvalue, about 1.3e6 here.
  double worst = 0.0;
  double sum = 0.0;
  for (std::size_t j = 1; j + 1 < g.size(); ++j) {
    const double r = g[j];
    const double d = tu[j] - (1.5 - 0.5 * r * r) * u[j];
    worst = std::max(worst, std::abs(d));
    sum += d * d * g.spacing();
  }
  CHECK(worst < 1e-7);
  CHECK(std::sqrt(sum) < 1e-8);
  CHECK(tu.front() == 0.0);
  CHECK(tu.back() == 0.0);
}

TEST_CASE("propagation damps high modes") {
  const RadialGrid g(129, 4.0);
  SpectralKinetic t(g);
  auto u = sine_mode(g, 1);
  auto high = sine_mode(g, 60);
  for (std::size_t j = 0; j < u.size(); ++j) u[j] += high[j];
  t.propagate(u, 1.0);
  const auto low = sine_mode(g, 1);
  const double d = std::exp(-t.eigenvalue(1));
  for (std::size_t j = 0; j < u.size(); ++j) REQUIRE_THAT(u[j], WithinAbs(d * low[j], 1e-12));
}

TEST_CASE("size mismatch is an input error") {
  const RadialGrid g(64, 4.0);
  SpectralKinetic t(g);
  std::vector<double> u(63), out(64);
  CHECK_THROWS_AS(t.apply(u, out), Error);
}

TEST_CASE("moved-from instances keep working in the destination") {
  const RadialGrid g(64, 4.0);
  SpectralKinetic a(g);
  SpectralKinetic b = std::move(a);
  CHECK(b.grid() == g);
  auto u = sine_mode(g, 2);
  std::vector<double> out(64);
  b.apply(u, out);
  CHECK_THAT(out[10], WithinAbs(b.eigenvalue(2) * u[10], 1e-12));
}

TEST_CASE("independent instances on separate threads agree bitwise") {
  const RadialGrid g(4096, 8.0);
  auto run = [&] {
    SpectralKinetic t(g);
    auto u = sine_mode(g, 7);
    for (int i = 0; i < 20; ++i) t.propagate(u, 1e-3);
    return u;
  };
  std::vector<double> a, b;
  {
    std::jthread ta([&] { a = run(); });
    std::jthread tb([&] { b = run(); });
  }
  CHECK(a == b);
  CHECK(a == run());
}
