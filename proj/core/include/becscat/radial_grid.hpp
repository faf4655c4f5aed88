#pragma once

#include <cstddef>
#include <vector>

namespace becscat {

inline constexpr std::size_t kMinGridNodes = 16;

/// Uniform mesh r_j = j * dr on [0, r_max], lengths in trap units.
class RadialGrid {
 public:
  /// Throws Error(invalid_config) for n < 16 or r_max <= 0.
  RadialGrid(std::size_t n, double r_max);

  std::size_t size() const noexcept { return n_; }
  double r_max() const noexcept { return r_max_; }
  double spacing() const noexcept { return dr_; }

  /// The last node is pinned to r_max exactly.
  double operator[](std::size_t j) const noexcept {
    return j + 1 == n_ ? r_max_ : static_cast<double>(j) * dr_;
  }

  std::vector<double> nodes() const;

  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;

 private:
  std::size_t n_;
  double r_max_;
  double dr_;
};

RadialGrid build_grid(std::size_t n, double r_max);

/// Box radius that keeps the Thomas-Fermi edge well inside: max(8, 2 (15 gamma)^(1/5)).
double default_r_max(double gamma);

inline constexpr std::size_t kDefaultGridNodes = 4096;

/// build_grid(4096, default_r_max(gamma)).
RadialGrid default_grid(double gamma);

}  // namespace becscat
