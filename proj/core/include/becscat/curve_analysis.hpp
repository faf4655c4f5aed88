#pragma once

#include <cstddef>
#include <vector>

#include "becscat/born_scattering.hpp"

// Tail and oscillation diagnostics for cross-section curves.

namespace becscat {

/// Closed interval on a curve's abscissa.
struct Window {
  double lo;
  double hi;
};

/// y = prefactor * x^exponent, fitted as a line in (log x, log y).
struct PowerLawFit {
  double exponent;
  double prefactor;
  double rms;  // RMS of log y residuals
  std::size_t points;
};

/// y = prefactor * exp(rate * x), fitted as a line in (x, log y).
struct ExponentialFit {
  double rate;
  double prefactor;
  double rms;
  std::size_t points;
};

inline constexpr std::size_t kMinFitPoints = 8;
inline constexpr std::size_t kMinOscillationMinima = 4;

/// Errors: insufficient_data below 8 points in the window, invalid_input for
/// non-positive values there.
PowerLawFit fit_power_law(const CrossSectionCurve& curve, Window window);
ExponentialFit fit_log_linear(const CrossSectionCurve& curve, Window window);

/// Local maxima inside the window, each refined by the vertex of the parabola
/// through the neighbouring samples.
CrossSectionCurve envelope(const CrossSectionCurve& curve, Window window);

/// Parabola-refined abscissae of local minima inside the window.
std::vector<double> local_minima(const CrossSectionCurve& curve, Window window);

/// Mean spacing of successive local minima in the window.
/// Error(insufficient_data) with fewer than four minima.
double detect_oscillation_period(const CrossSectionCurve& curve, Window window);

}  // namespace becscat
