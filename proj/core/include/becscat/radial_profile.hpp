#pragma once

#include <span>
#include <vector>

#include "becscat/radial_grid.hpp"

namespace becscat {

/// Reduced radial function u(r) = sqrt(4 pi) r psi(r) sampled on a RadialGrid.
///
/// The Dirichlet ends u(0) = u(r_max) = 0 are a construction invariant:
/// the constructor rejects samples that violate them. Normalization is not
/// enforced here; see normalize().
class RadialProfile {
 public:
  /// Throws Error(invalid_input) on a size mismatch, non-finite samples or
  /// nonzero endpoints.
  RadialProfile(RadialGrid grid, std::vector<double> u);

  const RadialGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return u_; }
  std::size_t size() const noexcept { return u_.size(); }
  double operator[](std::size_t j) const noexcept { return u_[j]; }

  /// Integral of u^2 dr by composite Simpson.
  double norm_squared() const;

  /// Limit of u(r)/r at the origin, from the odd expansion u = c r + d r^3.
  double origin_slope() const noexcept;

  /// psi(r)^2 = u^2 / (4 pi r^2); the origin uses origin_slope().
  double density(std::size_t j) const noexcept;

  friend bool operator==(const RadialProfile&, const RadialProfile&) = default;

 private:
  RadialGrid grid_;
  std::vector<double> u_;
};

/// Rescales to unit norm. Throws Error(degenerate_profile) on a zero norm.
RadialProfile normalize(const RadialProfile& profile);

/// sqrt(integral (u - v)^2 dr); both profiles must share a grid.
double l2_distance(const RadialProfile& a, const RadialProfile& b);

/// Zeroes the endpoints of raw samples before wrapping them.
RadialProfile make_profile(const RadialGrid& grid, std::vector<double> u);

}  // namespace becscat
