#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "becscat/error.hpp"
#include "becscat/radial_grid.hpp"
#include "becscat/radial_profile.hpp"
#include "becscat/spectral_kinetic.hpp"

// Ground state of the scaled radial Gross-Pitaevskii equation
//
//   (-1/2 d^2/dr^2 + r^2/2 + gamma u^2/r^2 - mu) u = 0,   integral u^2 dr = 1,
//
// in trap units (lengths a_omega, energies hbar omega), found by imaginary-time
// Strang splitting with a spectral kinetic factor.

namespace becscat {

struct SolverConfig {
  double dtau_initial = 1e-2;
  double dtau_min = 1e-4;
  double tol_mu = 1e-10;
  double tol_residual = 1e-8;
  std::size_t max_steps = 200000;
  std::size_t check_interval = 50;

  /// Throws Error(invalid_config) when an invariant is violated.
  void validate() const;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// Energies per particle in hbar omega.
struct EnergyBreakdown {
  double kinetic = 0.0;      // integral (u')^2 / 2
  double trap = 0.0;         // integral r^2 u^2 / 2
  double interaction = 0.0;  // integral gamma u^4 / (2 r^2)

  double total() const noexcept { return kinetic + trap + interaction; }
  double chemical_potential() const noexcept { return kinetic + trap + 2.0 * interaction; }
  /// 2 E_kin - 2 E_trap + 3 E_int, zero for an exact ground state.
  double virial() const noexcept { return 2.0 * kinetic - 2.0 * trap + 3.0 * interaction; }
};

struct GroundState {
  double gamma = 0.0;
  RadialProfile profile;
  double mu = 0.0;
  EnergyBreakdown energy;
  double residual = 0.0;
  std::size_t steps_taken = 0;
  double final_dtau = 0.0;
  bool converged = false;
};

/// Snapshot handed to an observer at every convergence check.
struct IterationRecord {
  std::size_t step;
  double dtau;
  double mu;
  EnergyBreakdown energy;
};

using IterationObserver = std::function<void(const IterationRecord&)>;

/// Raised when max_steps runs out; carries the lowest-residual iterate seen.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& message, GroundState best);
  const GroundState& best() const noexcept { return best_; }

 private:
  GroundState best_;
};

/// Seed for the relaxation: harmonic ground state r exp(-r^2/2) for gamma < 1,
/// otherwise the TF profile with one binomial [1 2 1]/4 smoothing pass.
/// Always normalized.
RadialProfile initial_profile(double gamma, const RadialGrid& grid);

/// Exact noninteracting ground state 2 pi^(-1/4) r exp(-r^2/2), grid-normalized.
RadialProfile harmonic_ground_state(const RadialGrid& grid);

/// Reusable propagator: holds the sine-transform plan and scratch space for
/// one grid and one gamma.
class ImaginaryTimePropagator {
 public:
  ImaginaryTimePropagator(const RadialGrid& grid, double gamma);

  /// One Strang step exp(-W dtau/2) exp(-T dtau) exp(-W dtau/2) with W from
  /// the pre-step density, then renormalization.
  void step(std::vector<double>& u, double dtau);

  /// W(r) = r^2/2 + gamma u^2/r^2; the origin uses gamma (u'(0))^2.
  void potential(std::span<const double> u, std::span<double> w) const;

  SpectralKinetic& kinetic() noexcept { return kinetic_; }

 private:
  RadialGrid grid_;
  double gamma_;
  SpectralKinetic kinetic_;
  std::vector<double> w_;
  std::vector<double> half_;
  std::vector<double> square_;
};

/// Error(invalid_config) for dtau <= 0.
RadialProfile apply_imaginary_time_step(const RadialProfile& profile, double dtau, double gamma);

/// Terms of the energy functional. Derivatives use 4th-order centered
/// differences with odd reflection through both Dirichlet ends, independent
/// of the spectral propagator.
EnergyBreakdown energy_breakdown(const RadialProfile& profile, double gamma);

/// mu = E_kin + E_trap + 2 E_int.
double chemical_potential(const RadialProfile& profile, double gamma);

/// sqrt(integral [(T + W - mu) u]^2 dr) over interior nodes, T spectral.
double gpe_residual(const RadialProfile& profile, double mu, double gamma);

/// Runs the relaxation from initial_profile. dtau starts at dtau_initial;
/// each time mu plateaus (|dmu| < tol_mu between checks) the residual is
/// evaluated: at or below tol_residual the state is returned, otherwise dtau
/// is halved down to dtau_min.
///
/// Errors: unsupported_regime for gamma < 0, invalid_config for a bad config,
/// NonConvergenceError after max_steps.
GroundState solve_ground_state(double gamma, const RadialGrid& grid, const SolverConfig& config,
                               const IterationObserver& observer = {});

}  // namespace becscat
