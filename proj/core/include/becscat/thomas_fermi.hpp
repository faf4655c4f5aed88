#pragma once

#include "becscat/radial_grid.hpp"
#include "becscat/radial_profile.hpp"

// Closed-form Thomas-Fermi limit of the radial Gross-Pitaevskii equation.
//
// Dropping the kinetic term leaves u(r)/r = sqrt(mu/gamma (1 - (r/R)^2)) inside
// the radius R, with mu fixed by the unit norm of u. The length rescaling
// r = gamma^(1/4) x shows the kinetic term shrinking like 1/gamma, which is
// why these expressions only describe large gamma.

namespace becscat {

struct TfState {
  double gamma;
  double mu;      // hbar omega
  double radius;  // a_omega; mu == radius^2 / 2
};

/// Throws Error(unsupported_regime) for gamma <= 0.
TfState tf_state(double gamma);

/// (15 gamma)^(2/5) / 2.
double tf_chemical_potential(double gamma);

/// (15 gamma)^(1/5).
double tf_radius(double gamma);

/// R_mu = sqrt(2 mu); Error(invalid_input) for mu <= 0.
double cutoff_radius_from_mu(double mu);

/// Hard-edged TF profile sampled on the grid, not renormalized.
/// Error(truncated_support) when the grid ends inside R.
RadialProfile tf_profile(double gamma, const RadialGrid& grid);

inline constexpr double kTfSeriesSwitch = 0.5;
inline constexpr int kTfSeriesTerms = 7;

/// Normalized Fourier transform of the TF density as a function of t = qR:
/// 15 [(3 - t^2) sin t - 3 t cos t] / t^5. The closed form cancels badly for
/// small t (about 1e-7 absolute at t = 1e-2), so t <= 0.5 uses the Taylor
/// series 1 - t^2/14 + t^4/504 - ... to seven terms. Error(invalid_input) for t < 0.
double tf_form_factor(double t);

}  // namespace becscat
