#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "becscat/quadrature.hpp"

using namespace becscat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> sample(std::size_t n, double a, double b, double (*f)(double)) {
  std::vector<double> y(n);
  const double h = (b - a) / static_cast<double>(n - 1);
  for (std::size_t j = 0; j < n; ++j) y[j] = f(a + h * static_cast<double>(j));
  return y;
}

double cubic(double x) { return 2.0 * x * x * x - x + 0.5; }
double sine(double x) { return std::sin(x); }

}  // namespace

TEST_CASE("cubics are integrated exactly for any node count") {
  // integral_0^2 (2x^3 - x + 1/2) dx = 8 - 2 + 1 = 7
  for (std::size_t n : {3u, 4u, 5u, 6u, 7u, 10u, 11u, 64u, 65u}) {
    const auto y = sample(n, 0.0, 2.0, cubic);
    CAPTURE(n);
    CHECK_THAT(simpson(y, 2.0 / static_cast<double>(n - 1)), WithinAbs(7.0, 1e-13));
  }
}

TEST_CASE("two samples fall back to the trapezoid") {
  const std::vector<double> y{1.0, 3.0};
  CHECK(simpson(y, 0.5) == 1.0);
}

TEST_CASE("fourth order convergence on a smooth integrand") {
  const double exact = 2.0;
  double previous = 0.0;
  for (std::size_t n : {33u, 65u, 129u}) {
    const auto y = sample(n, 0.0, std::numbers::pi, sine);
    const double err = std::abs(simpson(y, std::numbers::pi / static_cast<double>(n - 1)) - exact);
    if (previous > 0.0) CHECK(previous / err > 14.0);
    previous = err;
  }
}

TEST_CASE("weights reproduce the rule") {
  for (std::size_t n : {2u, 3u, 4u, 9u, 10u, 4096u}) {
    const double h = 0.01;
    const auto w = simpson_weights(n, h);
    std::vector<double> y(n);
    for (std::size_t j = 0; j < n; ++j) y[j] = std::cos(0.37 * static_cast<double>(j));
    const double direct = simpson(y, h);
    const double weighted = std::inner_product(w.begin(), w.end(), y.begin(), 0.0);
    CAPTURE(n);
    CHECK_THAT(weighted, WithinAbs(direct, 1e-13));
    CHECK_THAT(std::accumulate(w.begin(), w.end(), 0.0),
               WithinRel(h * static_cast<double>(n - 1), 1e-13));
  }
}
