#pragma once

#include <memory>
#include <span>
#include <vector>

#include "becscat/radial_grid.hpp"

namespace becscat {

/// T = -1/2 d^2/dr^2 with u(0) = u(r_max) = 0, diagonalized by the type-I
/// discrete sine transform over the n - 2 interior nodes. Sine mode m has
/// eigenvalue (pi m / r_max)^2 / 2.
///
/// Owns FFTW plans and scratch buffers, so one instance must not be used from
/// two threads at once. Distinct instances are independent.
class SpectralKinetic {
 public:
  explicit SpectralKinetic(const RadialGrid& grid);
  ~SpectralKinetic();

  SpectralKinetic(const SpectralKinetic&) = delete;
  SpectralKinetic& operator=(const SpectralKinetic&) = delete;
  SpectralKinetic(SpectralKinetic&&) noexcept;
  SpectralKinetic& operator=(SpectralKinetic&&) noexcept;

  const RadialGrid& grid() const noexcept;

  /// out = T u. Endpoints of out are set to zero.
  void apply(std::span<const double> u, std::span<double> out);

  /// u <- exp(-T dtau) u in place.
  void propagate(std::span<double> u, double dtau);

  /// Eigenvalue of T for sine mode m = 1 .. n - 2.
  double eigenvalue(std::size_t mode) const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace becscat
