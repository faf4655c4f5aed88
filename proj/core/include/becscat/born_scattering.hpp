#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "becscat/radial_profile.hpp"

// First-Born elastic scattering of a same-species atom off the condensate.
// In trap units the amplitude is F(q) = -2 gamma s(q), where s is the
// normalized Fourier transform of the density and q = 2 k sin(theta / 2).

namespace becscat {

enum class FormFactorSource { numerical_profile, tf_analytic, gaussian_analytic };

std::string_view to_string(FormFactorSource source) noexcept;

/// s(q) on a uniform grid q_j = j h starting at zero.
class FormFactorTable {
 public:
  /// Throws Error(invalid_input) unless q starts at 0, is uniform and
  /// ascending, and |s| <= 1 (with 1e-12 slack for rounding).
  FormFactorTable(std::vector<double> q, std::vector<double> s, FormFactorSource source);

  std::span<const double> q() const noexcept { return q_; }
  std::span<const double> s() const noexcept { return s_; }
  FormFactorSource source() const noexcept { return source_; }
  std::size_t size() const noexcept { return q_.size(); }
  double spacing() const noexcept { return h_; }
  double q_max() const noexcept { return q_.back(); }

  /// Linear interpolation; Error(out_of_range) outside [0, q_max].
  double interpolate(double q) const;

 private:
  std::vector<double> q_;
  std::vector<double> s_;
  FormFactorSource source_;
  double h_;
};

/// s(q) = integral j0(q r) u^2 dr / integral u^2 dr, composite Simpson on
/// the profile grid; j0(x) = 1 - x^2/6 below x = 1e-3. s(0) == 1 exactly.
/// Error(invalid_input) for q < 0.
double form_factor(const RadialProfile& profile, double q);

/// form_factor on q_j = j q_max / (n_q - 1); node values are bit-identical
/// to pointwise calls. Error(invalid_input) for q_max <= 0 or n_q < 2.
FormFactorTable form_factor_table(const RadialProfile& profile, double q_max, std::size_t n_q);

/// Thomas-Fermi table built on a gamma-independent grid in t = qR:
/// q_j = t_j / R with t_j = j t_max / (n - 1).
FormFactorTable tf_form_factor_table(double gamma, double t_max, std::size_t n);

/// exp(-q^2/4), the transform of the noninteracting density.
FormFactorTable gaussian_form_factor_table(double q_max, std::size_t n_q);

struct QGrid {
  double q_max;
  std::size_t n_q;
};

/// q_max = max(10, 4 k_max, 60 / radius); n_q = max(2001, ceil(16 radius q_max / pi) + 1)
/// so the oscillation period pi/radius always spans at least 16 nodes.
QGrid default_q_grid(double k_max, double radius);

/// F = -2 gamma s (units a_omega); the factor 2 is the projectile seeing every
/// condensed atom through the full contact interaction.
double born_amplitude(double gamma, double s);

/// dsigma/dOmega = 4 gamma^2 s(q)^2 with s linearly interpolated.
double differential_cross_section(double gamma, const FormFactorTable& table, double q);

/// sigma(k) = (8 pi gamma^2 / k^2) integral_0^{2k} s^2 q dq. Composite
/// Simpson over whole table panels; the partial panel ending at 2k uses
/// three-point Gauss-Legendre on a local cubic interpolant of s^2.
/// Errors: invalid_input for k <= 0, out_of_range when 2k > q_max.
double total_cross_section(double gamma, const FormFactorTable& table, double k);

struct ScaledPoint {
  double k_tilde;
  double sigma_tilde;
};

/// (k cutoff, sigma / gamma^2). Error(invalid_input) for gamma <= 0 or cutoff <= 0.
ScaledPoint scaled_point(double sigma, double gamma, double cutoff, double k);

enum class Abscissa { k, q, k_scaled };
enum class Ordinate { sigma, dsigma_domega, sigma_scaled };
enum class Method { numerical, tf };

std::string_view to_string(Method method) noexcept;

struct CrossSectionCurve {
  Abscissa abscissa = Abscissa::k;
  Ordinate ordinate = Ordinate::sigma;
  Method method = Method::numerical;
  double gamma = 0.0;
  std::vector<double> x;
  std::vector<double> y;
  std::map<std::string, std::string> metadata;

  /// Equal lengths, strictly ascending x, nonnegative y; Error(invalid_input) otherwise.
  void validate() const;
};

CrossSectionCurve total_cross_section_curve(double gamma, const FormFactorTable& table,
                                            std::span<const double> ks, Method method);

CrossSectionCurve differential_cross_section_curve(double gamma, const FormFactorTable& table,
                                                   std::span<const double> qs, Method method);

/// Maps a sigma(k) curve onto (kR, sigma/gamma^2).
CrossSectionCurve scale_curve(const CrossSectionCurve& curve, double cutoff);

}  // namespace becscat
