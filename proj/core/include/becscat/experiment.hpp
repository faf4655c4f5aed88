#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "becscat/born_scattering.hpp"
#include "becscat/dataset.hpp"
#include "becscat/gpe_solver.hpp"

// Sweep orchestration: solves the condensate for a list of interaction
// strengths and turns the results into figure datasets.

namespace becscat {

inline constexpr double kHbar = 1.054571817e-34;  // J s

/// Laboratory parameters in SI units.
struct PhysicalParams {
  double atom_mass;          // kg
  double trap_frequency;     // rad/s
  double scattering_length;  // m
  double atom_count;
};

struct GammaConversion {
  double gamma;        // N0 a_s / a_omega
  double trap_length;  // a_omega = sqrt(hbar / (m omega)), m
};

/// Error(invalid_input) for non-positive parameters.
GammaConversion gamma_from_physical(const PhysicalParams& params);

/// Log-spaced momenta for sigma(k) curves.
struct KGrid {
  double min = 1e-2;
  double max = 1e2;
  std::size_t count = 200;

  std::vector<double> values() const;
  friend bool operator==(const KGrid&, const KGrid&) = default;
};

struct SweepConfig {
  std::vector<double> gammas{0.1, 1.0, 10.0, 100.0, 1000.0};
  std::vector<double> ks{0.2, 1.2, 5.0};
  std::vector<double> figure4_gammas{0.1, 10.0, 1000.0};
  double q_max = 10.0;
  std::size_t n_q = 2001;
  KGrid k_grid;
  std::size_t grid_n = kDefaultGridNodes;
  std::optional<double> r_max;  // default_r_max(gamma) when unset
  SolverConfig solver;
  std::filesystem::path output_dir = ".";
  Format format = Format::csv;

  /// Error(invalid_config): lists empty, non-positive or not strictly ascending, etc.
  void validate() const;

  /// Key/value echo of every field, used as dataset provenance.
  std::vector<std::pair<std::string, std::string>> provenance() const;

  std::string to_json() const;
  /// Fields absent from the text keep their defaults; unknown keys are rejected.
  static SweepConfig from_json(std::string_view text);
  static SweepConfig load(const std::filesystem::path& path);

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

RadialGrid sweep_grid(const SweepConfig& config, double gamma);

/// Ground states keyed by gamma.
using StateTable = std::map<double, GroundState>;

/// Solves every gamma (in parallel, see worker_count()) and returns them keyed
/// by value. Non-convergence propagates as NonConvergenceError naming gamma.
StateTable solve_states(std::span<const double> gammas, const SweepConfig& config);

/// TF table on the gamma-independent t grid t_j = j pi / 32 covering t_needed.
FormFactorTable tf_table_for(double gamma, double t_needed);

/// Numerical table sized by default_q_grid for momenta up to k_max.
FormFactorTable numerical_table_for(const GroundState& state, double k_max);

/// sigma/gamma^2 of the TF family as a function of kR; identical for every gamma.
double tf_universal_sigma(double k_tilde);
std::vector<double> tf_universal_curve(std::span<const double> k_tilde);

/// Figure 1: order parameter normalized to 1 at the origin (figure1a) and
/// chemical potential versus gamma (figure1b).
std::vector<Dataset> run_figure1(const SweepConfig& config);
std::vector<Dataset> run_figure1(const SweepConfig& config, const StateTable& states);

/// Figure 2: total cross sections versus gamma at the configured momenta.
std::vector<Dataset> run_figure2(const SweepConfig& config);
std::vector<Dataset> run_figure2(const SweepConfig& config, const StateTable& states);

/// Figure 3: sigma(k) per gamma (figure3a), scaled curves using R for TF and
/// R_mu = sqrt(2 mu) for the numerical states (figure3b), and the universal
/// TF curve (figure3_universal).
std::vector<Dataset> run_figure3(const SweepConfig& config);
std::vector<Dataset> run_figure3(const SweepConfig& config, const StateTable& states);

/// Figure 4: dsigma/dOmega versus q on [0, q_max] for figure4_gammas.
std::vector<Dataset> run_figure4(const SweepConfig& config);
std::vector<Dataset> run_figure4(const SweepConfig& config, const StateTable& states);

/// All figures from one shared set of ground states.
std::vector<Dataset> run_all(const SweepConfig& config);

/// Writes each dataset to output_dir/<name><ext>; returns the paths.
std::vector<std::filesystem::path> write_datasets(const std::vector<Dataset>& datasets,
                                                  const SweepConfig& config);

}  // namespace becscat
