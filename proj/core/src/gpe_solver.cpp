#include "becscat/gpe_solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "becscat/format.hpp"
#include "becscat/quadrature.hpp"
#include "becscat/thomas_fermi.hpp"

namespace becscat {

namespace {

void require_nonnegative_gamma(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::unsupported_regime,
                "only repulsive or free condensates (gamma >= 0) are supported, got " +
                    std::to_string(gamma));
  }
}

double normalize_in_place(std::vector<double>& u, double h) {
  std::vector<double> sq(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) sq[j] = u[j] * u[j];
  const double norm2 = simpson(sq, h);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw Error(ErrorKind::degenerate_profile, "profile norm collapsed during propagation");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (double& v : u) v *= scale;
  return norm2;
}

// 4th-order centered first derivative; samples beyond either end are odd
// reflections, matching u(0) = u(r_max) = 0.
std::vector<double> centered_derivative(std::span<const double> u, double h) {
  const auto n = static_cast<std::ptrdiff_t>(u.size());
  auto at = [&](std::ptrdiff_t j) {
    if (j < 0) return -u[static_cast<std::size_t>(-j)];
    if (j >= n) return -u[static_cast<std::size_t>(2 * (n - 1) - j)];
    return u[static_cast<std::size_t>(j)];
  };
  std::vector<double> d(u.size());
  const double inv = 1.0 / (12.0 * h);
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    d[static_cast<std::size_t>(j)] =
        (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2)) * inv;
  }
  return d;
}

}  // namespace

void SolverConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::invalid_config, what); };
  if (!(dtau_initial > 0.0)) fail("dtau_initial must be positive");
  if (!(dtau_min > 0.0)) fail("dtau_min must be positive");
  if (dtau_min > dtau_initial) fail("dtau_min must not exceed dtau_initial");
  if (!(tol_mu > 0.0)) fail("tol_mu must be positive");
  if (!(tol_residual > 0.0)) fail("tol_residual must be positive");
  if (max_steps < 1) fail("max_steps must be at least 1");
  if (check_interval < 1) fail("check_interval must be at least 1");
}

NonConvergenceError::NonConvergenceError(const std::string& message, GroundState best)
    : Error(ErrorKind::non_convergence, message), best_(std::move(best)) {}

RadialProfile harmonic_ground_state(const RadialGrid& grid) {
  const double c = 2.0 / std::pow(std::numbers::pi, 0.25);
  std::vector<double> u(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double r = grid[j];
    u[j] = c * r * std::exp(-0.5 * r * r);
  }
  return normalize(make_profile(grid, std::move(u)));
}

RadialProfile initial_profile(double gamma, const RadialGrid& grid) {
  require_nonnegative_gamma(gamma);
  if (gamma < 1.0) return harmonic_ground_state(grid);

  const RadialProfile tf = tf_profile(gamma, grid);
  std::vector<double> u(grid.size(), 0.0);
  for (std::size_t j = 1; j + 1 < grid.size(); ++j) {
    u[j] = 0.25 * tf[j - 1] + 0.5 * tf[j] + 0.25 * tf[j + 1];
  }
  return normalize(RadialProfile(grid, std::move(u)));
}

ImaginaryTimePropagator::ImaginaryTimePropagator(const RadialGrid& grid, double gamma)
    : grid_(grid),
      gamma_(gamma),
      kinetic_(grid),
      w_(grid.size()),
      half_(grid.size()),
      square_(grid.size()) {
  require_nonnegative_gamma(gamma);
}

void ImaginaryTimePropagator::potential(std::span<const double> u, std::span<double> w) const {
  const double h = grid_.spacing();
  const double slope = (8.0 * u[1] - u[2]) / (6.0 * h);
  w[0] = gamma_ * slope * slope;
  for (std::size_t j = 1; j < grid_.size(); ++j) {
    const double r = grid_[j];
    const double ratio = u[j] / r;
    w[j] = 0.5 * r * r + gamma_ * ratio * ratio;
  }
}

void ImaginaryTimePropagator::step(std::vector<double>& u, double dtau) {
  if (!(dtau > 0.0)) throw Error(ErrorKind::invalid_config, "dtau must be positive");
  if (u.size() != grid_.size()) {
    throw Error(ErrorKind::invalid_input, "propagator: sample count does not match grid");
  }
  potential(u, w_);
  for (std::size_t j = 0; j < u.size(); ++j) {
    half_[j] = std::exp(-0.5 * dtau * w_[j]);
    u[j] *= half_[j];
  }
  kinetic_.propagate(u, dtau);
  for (std::size_t j = 0; j < u.size(); ++j) u[j] *= half_[j];
  normalize_in_place(u, grid_.spacing());
}

RadialProfile apply_imaginary_time_step(const RadialProfile& profile, double dtau, double gamma) {
  if (!(dtau > 0.0)) throw Error(ErrorKind::invalid_config, "dtau must be positive");
  ImaginaryTimePropagator propagator(profile.grid(), gamma);
  std::vector<double> u(profile.values().begin(), profile.values().end());
  propagator.step(u, dtau);
  return RadialProfile(profile.grid(), std::move(u));
}

EnergyBreakdown energy_breakdown(const RadialProfile& profile, double gamma) {
  const RadialGrid& grid = profile.grid();
  const double h = grid.spacing();
  const auto u = profile.values();
  const std::vector<double> du = centered_derivative(u, h);

  std::vector<double> kin(u.size()), trap(u.size()), inter(u.size());
  const double slope = profile.origin_slope();
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double r = grid[j];
    kin[j] = du[j] * du[j];
    trap[j] = r * r * u[j] * u[j];
    const double ratio = j == 0 ? slope : u[j] / r;
    inter[j] = ratio * ratio * u[j] * u[j];
  }
  EnergyBreakdown e;
  e.kinetic = 0.5 * simpson(kin, h);
  e.trap = 0.5 * simpson(trap, h);
  e.interaction = 0.5 * gamma * simpson(inter, h);
  return e;
}

double chemical_potential(const RadialProfile& profile, double gamma) {
  return energy_breakdown(profile, gamma).chemical_potential();
}

namespace {

double residual_with(SpectralKinetic& kinetic, const ImaginaryTimePropagator& propagator,
                     const RadialProfile& profile, double mu) {
  const auto u = profile.values();
  std::vector<double> tu(u.size()), w(u.size());
  kinetic.apply(u, tu);
  propagator.potential(u, w);
  std::vector<double> sq(u.size(), 0.0);
  for (std::size_t j = 1; j + 1 < u.size(); ++j) {
    const double v = tu[j] + (w[j] - mu) * u[j];
    sq[j] = v * v;
  }
  return std::sqrt(simpson(sq, profile.grid().spacing()));
}

}  // namespace

double gpe_residual(const RadialProfile& profile, double mu, double gamma) {
  ImaginaryTimePropagator propagator(profile.grid(), gamma);
  return residual_with(propagator.kinetic(), propagator, profile, mu);
}

GroundState solve_ground_state(double gamma, const RadialGrid& grid, const SolverConfig& config,
                               const IterationObserver& observer) {
  require_nonnegative_gamma(gamma);
  config.validate();

  ImaginaryTimePropagator propagator(grid, gamma);
  const RadialProfile seed = initial_profile(gamma, grid);
  std::vector<double> u(seed.values().begin(), seed.values().end());

  double dtau = config.dtau_initial;
  double previous_mu = std::numeric_limits<double>::quiet_NaN();
  std::optional<GroundState> best;

  auto snapshot = [&](std::size_t steps, const RadialProfile& profile, const EnergyBreakdown& e,
                      double residual) {
    return GroundState{gamma,    profile, e.chemical_potential(), e, residual, steps,
                       dtau,     false};
  };

  std::size_t step = 0;
  while (step < config.max_steps) {
    propagator.step(u, dtau);
    ++step;
    if (step % config.check_interval != 0 && step != config.max_steps) continue;

    RadialProfile profile(grid, u);
    const EnergyBreakdown energy = energy_breakdown(profile, gamma);
    const double mu = energy.chemical_potential();
    if (observer) observer(IterationRecord{step, dtau, mu, energy});

    const bool plateau = std::abs(mu - previous_mu) < config.tol_mu;
    const bool last = step == config.max_steps;
    if (plateau || last) {
      const double residual = residual_with(propagator.kinetic(), propagator, profile, mu);
      if (!best || residual < best->residual) best = snapshot(step, profile, energy, residual);
      if (residual <= config.tol_residual) {
        GroundState result = snapshot(step, profile, energy, residual);
        result.converged = true;
        return result;
      }
      if (plateau && dtau > config.dtau_min) {
        dtau = std::max(0.5 * dtau, config.dtau_min);
        previous_mu = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
    }
    previous_mu = mu;
  }

  throw NonConvergenceError("ground state for gamma = " + format_number(gamma) +
                                " did not converge in " + std::to_string(config.max_steps) +
                                " steps (best residual " + format_number(best->residual) + ")",
                            std::move(*best));
}

}  // namespace becscat
