#include <catch_amalgamated.hpp>

#include <cmath>

#include "becscat/error.hpp"
#include "becscat/radial_grid.hpp"

using namespace becscat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("uniform spacing and pinned endpoints") {
  const RadialGrid g = build_grid(16, 1.5);
  CHECK(g.size() == 16);
  CHECK_THAT(g.spacing(), WithinRel(0.1, 1e-15));
  CHECK(g[0] == 0.0);
  CHECK(g[15] == 1.5);
  CHECK_THAT(g[7], WithinRel(0.7, 1e-15));
}

TEST_CASE("default production grid spacing") {
  const RadialGrid g = build_grid(4096, 16.0);
  CHECK(g.spacing() == 16.0 / 4095.0);
  CHECK(g[4095] == 16.0);
}

TEST_CASE("nodes strictly increase") {
  const RadialGrid g = build_grid(1000, 7.3);
  const auto r = g.nodes();
  REQUIRE(r.size() == 1000);
  for (std::size_t j = 1; j < r.size(); ++j) REQUIRE(r[j] > r[j - 1]);
  CHECK(r.front() == 0.0);
  CHECK(r.back() == 7.3);
}

TEST_CASE("too few nodes or a bad radius are config errors") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::file_error;
  };
  CHECK(kind_of([] { build_grid(8, 1.0); }) == ErrorKind::invalid_config);
  CHECK(kind_of([] { build_grid(15, 1.0); }) == ErrorKind::invalid_config);
  CHECK(kind_of([] { build_grid(64, 0.0); }) == ErrorKind::invalid_config);
  CHECK(kind_of([] { build_grid(64, -2.0); }) == ErrorKind::invalid_config);
  CHECK(kind_of([] { build_grid(64, std::nan("")); }) == ErrorKind::invalid_config);
  CHECK_NOTHROW(build_grid(16, 1.0));
}

TEST_CASE("default box radius") {
  CHECK(default_r_max(0.0) == 8.0);
  CHECK(default_r_max(1.0 / 15.0) == 8.0);
  CHECK_THAT(default_r_max(1000.0), WithinAbs(2.0 * std::pow(15000.0, 0.2), 1e-12));
  CHECK_THAT(default_r_max(1000.0), WithinAbs(13.68, 1e-2));
  const RadialGrid g = default_grid(1000.0);
  CHECK(g.size() == kDefaultGridNodes);
  CHECK(g.r_max() == default_r_max(1000.0));
}
