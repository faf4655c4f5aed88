// becscat: condensate ground states and first-Born elastic cross sections.
//
//   becscat ground-state --gamma 100 --out gs.csv
//   becscat cross-section --gamma 10 --k 0.2 --k 1.2
//   becscat all --config sweep.json --out results/
//
// Exit codes: 0 success, 2 solver non-convergence, 1 configuration or I/O error.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "becscat/born_scattering.hpp"
#include "becscat/dataset.hpp"
#include "becscat/error.hpp"
#include "becscat/experiment.hpp"
#include "becscat/format.hpp"
#include "becscat/gpe_solver.hpp"
#include "becscat/thomas_fermi.hpp"
#include "becscat/version.hpp"

namespace {

using namespace becscat;

struct Options {
  std::string config_path;
  std::vector<double> gammas;
  std::vector<double> ks;
  std::optional<double> q_max;
  std::optional<std::size_t> n_q;
  std::optional<std::size_t> grid_n;
  std::optional<double> r_max;
  std::optional<double> dtau;
  std::optional<double> tol_residual;
  std::optional<std::size_t> max_steps;
  std::string out;
  std::string format;
};

// Single-state commands take --gamma directly; only figure sweeps copy it into the config.
SweepConfig resolve_config(const Options& o, bool sweep) {
  SweepConfig c = o.config_path.empty() ? SweepConfig{} : SweepConfig::load(o.config_path);
  if (sweep && !o.gammas.empty()) {
    c.gammas = o.gammas;
    c.figure4_gammas = o.gammas;
  }
  if (!o.ks.empty()) c.ks = o.ks;
  if (o.q_max) c.q_max = *o.q_max;
  if (o.n_q) c.n_q = *o.n_q;
  if (o.grid_n) c.grid_n = *o.grid_n;
  if (o.r_max) c.r_max = *o.r_max;
  if (o.dtau) {
    c.solver.dtau_initial = *o.dtau;
    c.solver.dtau_min = std::min(c.solver.dtau_min, *o.dtau);
  }
  if (o.tol_residual) c.solver.tol_residual = *o.tol_residual;
  if (o.max_steps) c.solver.max_steps = *o.max_steps;
  if (!o.out.empty()) c.output_dir = o.out;
  if (!o.format.empty()) c.format = parse_format(o.format);
  c.validate();
  return c;
}

double single_gamma(const SweepConfig& c, const Options& o) {
  if (o.gammas.size() > 1) {
    throw Error(ErrorKind::invalid_config, "this command takes exactly one --gamma");
  }
  const double gamma = o.gammas.empty() ? c.gammas.front() : o.gammas.front();
  if (!std::isfinite(gamma) || gamma < 0.0) {
    throw Error(ErrorKind::invalid_config, "--gamma must be finite and non-negative");
  }
  return gamma;
}

void write_single(const Dataset& d, const Options& o, const SweepConfig& c) {
  if (o.out.empty()) {
    std::cout << render_dataset(d, c.format);
  } else {
    emit_dataset(d, c.format, o.out);
    std::cerr << "wrote " << o.out << "\n";
  }
}

Dataset with_provenance(std::string name, const SweepConfig& c) {
  Dataset d;
  d.name = std::move(name);
  for (auto& [k, v] : c.provenance()) d.add_provenance(k, v);
  return d;
}

void add_state(Dataset& d, const GroundState& s) {
  d.add_provenance("gamma", format_number(s.gamma));
  d.add_provenance("mu", format_number(s.mu));
  d.add_provenance("energy.kinetic", format_number(s.energy.kinetic));
  d.add_provenance("energy.trap", format_number(s.energy.trap));
  d.add_provenance("energy.interaction", format_number(s.energy.interaction));
  d.add_provenance("residual", format_number(s.residual));
  d.add_provenance("steps", std::to_string(s.steps_taken));
  d.add_provenance("final_dtau", format_number(s.final_dtau));
  d.add_provenance("r_mu", format_number(cutoff_radius_from_mu(s.mu)));
}

int run_ground_state(const Options& o) {
  const SweepConfig c = resolve_config(o, false);
  const double gamma = single_gamma(c, o);
  const GroundState s = solve_ground_state(gamma, sweep_grid(c, gamma), c.solver);
  Dataset d = with_provenance("ground_state", c);
  add_state(d, s);
  const RadialGrid& grid = s.profile.grid();
  std::vector<double> r, u, psi, density;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    r.push_back(grid[j]);
    u.push_back(s.profile[j]);
    density.push_back(s.profile.density(j));
    psi.push_back(std::sqrt(density.back()));
  }
  d.add_column("r", "a_omega", std::move(r));
  d.add_column("u", "a_omega^-1/2", std::move(u));
  d.add_column("psi", "a_omega^-3/2", std::move(psi));
  d.add_column("density", "a_omega^-3", std::move(density));
  write_single(d, o, c);
  return 0;
}

int run_form_factor(const Options& o) {
  const SweepConfig c = resolve_config(o, false);
  const double gamma = single_gamma(c, o);
  const GroundState s = solve_ground_state(gamma, sweep_grid(c, gamma), c.solver);
  const FormFactorTable table = form_factor_table(s.profile, c.q_max, c.n_q);
  Dataset d = with_provenance("form_factor", c);
  add_state(d, s);
  std::vector<double> s_tf;
  if (gamma > 0.0) {
    const double radius = tf_radius(gamma);
    for (double q : table.q()) s_tf.push_back(tf_form_factor(q * radius));
  }
  d.add_column("q", "1/a_omega", {table.q().begin(), table.q().end()});
  d.add_column("s_num", "1", {table.s().begin(), table.s().end()});
  if (!s_tf.empty()) d.add_column("s_tf", "1", std::move(s_tf));
  write_single(d, o, c);
  return 0;
}

int run_cross_section(const Options& o) {
  const SweepConfig c = resolve_config(o, false);
  const double gamma = single_gamma(c, o);
  if (!(gamma > 0.0)) throw Error(ErrorKind::invalid_config, "cross sections need --gamma > 0");
  const std::vector<double> ks = o.ks.empty() ? c.k_grid.values() : c.ks;
  const GroundState s = solve_ground_state(gamma, sweep_grid(c, gamma), c.solver);
  const double radius = tf_radius(gamma);
  const FormFactorTable num = numerical_table_for(s, ks.back());
  const FormFactorTable tf = tf_table_for(gamma, 2.0 * ks.back() * radius);
  Dataset d = with_provenance("cross_section", c);
  add_state(d, s);
  const double r_mu = cutoff_radius_from_mu(s.mu);
  std::vector<double> sn, st, ktn, stn, ktt, stt;
  for (double k : ks) {
    sn.push_back(total_cross_section(gamma, num, k));
    st.push_back(total_cross_section(gamma, tf, k));
    const ScaledPoint pn = scaled_point(sn.back(), gamma, r_mu, k);
    const ScaledPoint pt = scaled_point(st.back(), gamma, radius, k);
    ktn.push_back(pn.k_tilde);
    stn.push_back(pn.sigma_tilde);
    ktt.push_back(pt.k_tilde);
    stt.push_back(pt.sigma_tilde);
  }
  d.add_column("k", "1/a_omega", ks);
  d.add_column("sigma_num", "a_omega^2", std::move(sn));
  d.add_column("sigma_tf", "a_omega^2", std::move(st));
  d.add_column("k_tilde_num", "1", std::move(ktn));
  d.add_column("sigma_tilde_num", "1", std::move(stn));
  d.add_column("k_tilde_tf", "1", std::move(ktt));
  d.add_column("sigma_tilde_tf", "1", std::move(stt));
  write_single(d, o, c);
  return 0;
}

template <typename Run>
int run_figures(const Options& o, Run&& run) {
  const SweepConfig c = resolve_config(o, true);
  for (const auto& path : write_datasets(run(c), c)) std::cout << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bose-Einstein condensate ground states and Born elastic cross sections"};
  app.set_version_flag("--version", std::string(becscat::kVersionString));
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--config", o.config_path, "Sweep configuration (JSON); flags override it")
      ->check(CLI::ExistingFile);
  app.add_option("--gamma", o.gammas, "Interaction parameter(s) N0 a_s / a_omega");
  app.add_option("--k", o.ks, "Incident momenta (1/a_omega)");
  app.add_option("--q-max", o.q_max, "Largest momentum transfer in q tables");
  app.add_option("--n-q", o.n_q, "Number of q nodes");
  app.add_option("--grid-n", o.grid_n, "Radial grid nodes");
  app.add_option("--r-max", o.r_max, "Radial box size (a_omega)");
  app.add_option("--dtau", o.dtau, "Initial imaginary-time step");
  app.add_option("--tol-residual", o.tol_residual, "Residual threshold for convergence");
  app.add_option("--max-steps", o.max_steps, "Iteration cap for the solver");
  app.add_option("--out", o.out, "Output file (single datasets) or directory (figures)");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help, std::function<int()> fn) {
    app.add_subcommand(name, help)->callback([&action, fn] { action = fn; });
  };
  sub("ground-state", "Solve one ground state", [&] { return run_ground_state(o); });
  sub("form-factor", "Numerical and TF form factors for one gamma",
      [&] { return run_form_factor(o); });
  sub("cross-section", "Total cross sections for one gamma", [&] { return run_cross_section(o); });
  sub("figure1", "Order parameter and chemical potential",
      [&] { return run_figures(o, [](const SweepConfig& c) { return run_figure1(c); }); });
  sub("figure2", "Total cross section versus gamma",
      [&] { return run_figures(o, [](const SweepConfig& c) { return run_figure2(c); }); });
  sub("figure3", "Cross sections versus k and the universal curve",
      [&] { return run_figures(o, [](const SweepConfig& c) { return run_figure3(c); }); });
  sub("figure4", "Differential cross sections versus q",
      [&] { return run_figures(o, [](const SweepConfig& c) { return run_figure4(c); }); });
  sub("all", "Every figure from one set of ground states",
      [&] { return run_figures(o, [](const SweepConfig& c) { return run_all(c); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return action();
  } catch (const becscat::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const becscat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
