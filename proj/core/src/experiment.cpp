#include "becscat/experiment.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "becscat/error.hpp"
#include "becscat/format.hpp"
#include "becscat/parallel.hpp"
#include "becscat/thomas_fermi.hpp"
#include "becscat/version.hpp"

namespace becscat {

GammaConversion gamma_from_physical(const PhysicalParams& p) {
  for (double v : {p.atom_mass, p.trap_frequency, p.scattering_length, p.atom_count}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::invalid_input, "physical parameters must be positive and finite");
    }
  }
  const double trap_length = std::sqrt(kHbar / (p.atom_mass * p.trap_frequency));
  return {p.atom_count * p.scattering_length / trap_length, trap_length};
}

std::vector<double> KGrid::values() const {
  std::vector<double> k(count);
  const double lo = std::log(min);
  const double hi = std::log(max);
  for (std::size_t j = 0; j < count; ++j) {
    const double f = count == 1 ? 0.0 : static_cast<double>(j) / static_cast<double>(count - 1);
    k[j] = j + 1 == count && count > 1 ? max : std::exp(lo + f * (hi - lo));
  }
  if (!k.empty()) k.front() = min;
  return k;
}

namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorKind::invalid_config, what);
}

void require_ascending_positive(const std::vector<double>& values, const std::string& name) {
  if (values.empty()) config_error(name + " must not be empty");
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!(values[j] > 0.0) || !std::isfinite(values[j])) {
      config_error(name + " entries must be positive");
    }
    if (j > 0 && !(values[j] > values[j - 1])) config_error(name + " must be strictly ascending");
  }
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j > 0) out += ';';
    out += format_number(values[j]);
  }
  return out;
}

}  // namespace

void SweepConfig::validate() const {
  require_ascending_positive(gammas, "gammas");
  require_ascending_positive(ks, "ks");
  require_ascending_positive(figure4_gammas, "figure4_gammas");
  if (!(q_max > 0.0)) config_error("q_max must be positive");
  if (n_q < 2) config_error("n_q must be at least 2");
  if (!(k_grid.min > 0.0) || !(k_grid.max > k_grid.min) || k_grid.count < 2) {
    config_error("k_grid needs 0 < min < max and count >= 2");
  }
  if (grid_n < kMinGridNodes) config_error("grid_n must be at least 16");
  if (r_max && !(*r_max > 0.0)) config_error("r_max must be positive");
  solver.validate();
}

std::vector<std::pair<std::string, std::string>> SweepConfig::provenance() const {
  return {
      {"code_version", kVersionString},
      {"config.gammas", join(gammas)},
      {"config.ks", join(ks)},
      {"config.figure4_gammas", join(figure4_gammas)},
      {"config.q_max", format_number(q_max)},
      {"config.n_q", std::to_string(n_q)},
      {"config.k_grid.min", format_number(k_grid.min)},
      {"config.k_grid.max", format_number(k_grid.max)},
      {"config.k_grid.count", std::to_string(k_grid.count)},
      {"config.grid_n", std::to_string(grid_n)},
      {"config.r_max", r_max ? format_number(*r_max) : std::string("auto")},
      {"config.solver.dtau_initial", format_number(solver.dtau_initial)},
      {"config.solver.dtau_min", format_number(solver.dtau_min)},
      {"config.solver.tol_mu", format_number(solver.tol_mu)},
      {"config.solver.tol_residual", format_number(solver.tol_residual)},
      {"config.solver.max_steps", std::to_string(solver.max_steps)},
      {"config.solver.check_interval", std::to_string(solver.check_interval)},
      {"config.format", std::string(to_string(format))},
  };
}

std::string SweepConfig::to_json() const {
  nlohmann::ordered_json j;
  j["gammas"] = gammas;
  j["ks"] = ks;
  j["figure4_gammas"] = figure4_gammas;
  j["q_max"] = q_max;
  j["n_q"] = n_q;
  j["k_grid"] = {{"min", k_grid.min}, {"max", k_grid.max}, {"count", k_grid.count}};
  j["grid_n"] = grid_n;
  j["r_max"] = r_max ? nlohmann::ordered_json(*r_max) : nlohmann::ordered_json(nullptr);
  j["solver"] = {{"dtau_initial", solver.dtau_initial}, {"dtau_min", solver.dtau_min},
                 {"tol_mu", solver.tol_mu},             {"tol_residual", solver.tol_residual},
                 {"max_steps", solver.max_steps},       {"check_interval", solver.check_interval}};
  j["output_dir"] = output_dir.string();
  j["format"] = std::string(to_string(format));
  return j.dump(2) + "\n";
}

SweepConfig SweepConfig::from_json(std::string_view text) {
  SweepConfig c;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) config_error("sweep config must be a JSON object");
    static const std::set<std::string> known{"gammas", "ks",     "figure4_gammas", "q_max",
                                             "n_q",    "k_grid", "grid_n",         "r_max",
                                             "solver", "output_dir", "format"};
    for (const auto& [key, value] : j.items()) {
      if (!known.contains(key)) config_error("unknown sweep config key '" + key + "'");
    }
    auto read = [&](const char* key, auto& field) {
      if (j.contains(key)) field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
    };
    read("gammas", c.gammas);
    read("ks", c.ks);
    read("figure4_gammas", c.figure4_gammas);
    read("q_max", c.q_max);
    read("n_q", c.n_q);
    read("grid_n", c.grid_n);
    if (j.contains("k_grid")) {
      const auto& k = j.at("k_grid");
      for (const auto& [key, value] : k.items()) {
        if (key != "min" && key != "max" && key != "count") {
          config_error("unknown k_grid key '" + key + "'");
        }
      }
      if (k.contains("min")) c.k_grid.min = k.at("min").get<double>();
      if (k.contains("max")) c.k_grid.max = k.at("max").get<double>();
      if (k.contains("count")) c.k_grid.count = k.at("count").get<std::size_t>();
    }
    if (j.contains("r_max") && !j.at("r_max").is_null()) c.r_max = j.at("r_max").get<double>();
    if (j.contains("solver")) {
      const auto& s = j.at("solver");
      static const std::set<std::string> solver_keys{"dtau_initial", "dtau_min",  "tol_mu",
                                                     "tol_residual", "max_steps", "check_interval"};
      for (const auto& [key, value] : s.items()) {
        if (!solver_keys.contains(key)) config_error("unknown solver key '" + key + "'");
      }
      if (s.contains("dtau_initial")) c.solver.dtau_initial = s.at("dtau_initial").get<double>();
      if (s.contains("dtau_min")) c.solver.dtau_min = s.at("dtau_min").get<double>();
      if (s.contains("tol_mu")) c.solver.tol_mu = s.at("tol_mu").get<double>();
      if (s.contains("tol_residual")) c.solver.tol_residual = s.at("tol_residual").get<double>();
      if (s.contains("max_steps")) c.solver.max_steps = s.at("max_steps").get<std::size_t>();
      if (s.contains("check_interval")) {
        c.solver.check_interval = s.at("check_interval").get<std::size_t>();
      }
    }
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    config_error(std::string("malformed sweep config: ") + e.what());
  }
  c.validate();
  return c;
}

SweepConfig SweepConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::file_error, "cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

RadialGrid sweep_grid(const SweepConfig& config, double gamma) {
  return build_grid(config.grid_n, config.r_max ? *config.r_max : default_r_max(gamma));
}

StateTable solve_states(std::span<const double> gammas, const SweepConfig& config) {
  std::vector<double> unique(gammas.begin(), gammas.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  auto states = parallel_map(unique.size(), [&](std::size_t i) {
    return solve_ground_state(unique[i], sweep_grid(config, unique[i]), config.solver);
  });
  StateTable table;
  for (std::size_t i = 0; i < unique.size(); ++i) table.emplace(unique[i], std::move(states[i]));
  return table;
}

namespace {

constexpr double kTfStep = std::numbers::pi / 32.0;

const GroundState& state_for(const StateTable& states, double gamma) {
  const auto it = states.find(gamma);
  if (it == states.end()) {
    throw Error(ErrorKind::invalid_input, "no ground state for gamma = " + format_number(gamma));
  }
  return it->second;
}

double cutoff_of(const GroundState& state) { return cutoff_radius_from_mu(state.mu); }

Dataset start_dataset(std::string name, const SweepConfig& config) {
  Dataset d;
  d.name = std::move(name);
  for (auto& [k, v] : config.provenance()) d.add_provenance(k, v);
  return d;
}

void add_state_provenance(Dataset& d, const GroundState& s) {
  const std::string g = format_number(s.gamma);
  d.add_provenance("state." + g + ".mu", format_number(s.mu));
  d.add_provenance("state." + g + ".residual", format_number(s.residual));
  d.add_provenance("state." + g + ".steps", std::to_string(s.steps_taken));
  d.add_provenance("state." + g + ".r_max", format_number(s.profile.grid().r_max()));
}

}  // namespace

FormFactorTable tf_table_for(double gamma, double t_needed) {
  if (!(t_needed > 0.0)) throw Error(ErrorKind::invalid_input, "TF table range must be positive");
  const auto panels = static_cast<std::size_t>(std::ceil(t_needed / kTfStep));
  // two spare nodes keep the cubic stencil at 2k the same for every table length
  const std::size_t n = std::max<std::size_t>(panels, 4) + 3;
  return tf_form_factor_table(gamma, static_cast<double>(n - 1) * kTfStep, n);
}

FormFactorTable numerical_table_for(const GroundState& state, double k_max) {
  const QGrid grid = default_q_grid(k_max, cutoff_of(state));
  return form_factor_table(state.profile, grid.q_max, grid.n_q);
}

std::vector<double> tf_universal_curve(std::span<const double> k_tilde) {
  // Any member of the TF family gives the same scaled curve; gamma = 1/15 has R = 1.
  constexpr double gamma = 1.0 / 15.0;
  const double radius = tf_radius(gamma);
  double largest = 0.0;
  for (double x : k_tilde) largest = std::max(largest, x);
  const FormFactorTable table = tf_table_for(gamma, 2.0 * largest);
  std::vector<double> sigma;
  sigma.reserve(k_tilde.size());
  for (double x : k_tilde) sigma.push_back(total_cross_section(gamma, table, x / radius) / (gamma * gamma));
  return sigma;
}

double tf_universal_sigma(double k_tilde) {
  return tf_universal_curve(std::span<const double>(&k_tilde, 1)).front();
}

std::vector<Dataset> run_figure1(const SweepConfig& config) {
  config.validate();
  return run_figure1(config, solve_states(config.gammas, config));
}

std::vector<Dataset> run_figure1(const SweepConfig& config, const StateTable& states) {
  config.validate();
  Dataset profiles = start_dataset("figure1a", config);
  profiles.add_provenance("description", "order parameter psi0(r)/psi0(0); numerical and TF");
  std::vector<double> g_col, r_col, num_col, tf_col;
  Dataset mu = start_dataset("figure1b", config);
  mu.add_provenance("description", "chemical potential versus gamma");
  std::vector<double> mg, mnum, mtf, gap, rmu, rtf;

  for (double gamma : config.gammas) {
    const GroundState& s = state_for(states, gamma);
    add_state_provenance(profiles, s);
    add_state_provenance(mu, s);
    const RadialGrid& grid = s.profile.grid();
    const TfState tf = tf_state(gamma);
    const double slope = s.profile.origin_slope();
    const std::size_t stride = std::max<std::size_t>(1, grid.size() / 512);
    for (std::size_t j = 0; j < grid.size(); j += stride) {
      const double r = grid[j];
      const double x = r / tf.radius;
      g_col.push_back(gamma);
      r_col.push_back(r);
      num_col.push_back(j == 0 ? 1.0 : s.profile[j] / r / slope);
      tf_col.push_back(x < 1.0 ? std::sqrt(1.0 - x * x) : 0.0);
    }
    mg.push_back(gamma);
    mnum.push_back(s.mu);
    mtf.push_back(tf.mu);
    gap.push_back((s.mu - tf.mu) / s.mu);
    rmu.push_back(cutoff_of(s));
    rtf.push_back(tf.radius);
  }
  profiles.add_column("gamma", "1", std::move(g_col));
  profiles.add_column("r", "a_omega", std::move(r_col));
  profiles.add_column("psi_num", "psi0(0)", std::move(num_col));
  profiles.add_column("psi_tf", "psi0(0)", std::move(tf_col));
  mu.add_column("gamma", "1", std::move(mg));
  mu.add_column("mu_num", "hbar_omega", std::move(mnum));
  mu.add_column("mu_tf", "hbar_omega", std::move(mtf));
  mu.add_column("relative_gap", "1", std::move(gap));
  mu.add_column("r_mu", "a_omega", std::move(rmu));
  mu.add_column("r_tf", "a_omega", std::move(rtf));
  return {std::move(profiles), std::move(mu)};
}

std::vector<Dataset> run_figure2(const SweepConfig& config) {
  config.validate();
  return run_figure2(config, solve_states(config.gammas, config));
}

std::vector<Dataset> run_figure2(const SweepConfig& config, const StateTable& states) {
  config.validate();
  const double k_max = config.ks.back();
  struct Row {
    std::vector<double> num, tf;
  };
  const auto per_gamma = parallel_map(config.gammas.size(), [&](std::size_t i) {
    const double gamma = config.gammas[i];
    const GroundState& s = state_for(states, gamma);
    const FormFactorTable num = numerical_table_for(s, k_max);
    const FormFactorTable tf = tf_table_for(gamma, 2.0 * k_max * tf_radius(gamma));
    Row row;
    for (double k : config.ks) {
      row.num.push_back(total_cross_section(gamma, num, k));
      row.tf.push_back(total_cross_section(gamma, tf, k));
    }
    return row;
  });

  Dataset d = start_dataset("figure2", config);
  d.add_provenance("description", "total elastic cross section versus gamma at fixed k");
  for (double gamma : config.gammas) add_state_provenance(d, state_for(states, gamma));
  std::vector<double> kc, gc, num, tf;
  for (std::size_t ik = 0; ik < config.ks.size(); ++ik) {
    for (std::size_t ig = 0; ig < config.gammas.size(); ++ig) {
      kc.push_back(config.ks[ik]);
      gc.push_back(config.gammas[ig]);
      num.push_back(per_gamma[ig].num[ik]);
      tf.push_back(per_gamma[ig].tf[ik]);
    }
  }
  d.add_column("k", "1/a_omega", std::move(kc));
  d.add_column("gamma", "1", std::move(gc));
  d.add_column("sigma_num", "a_omega^2", std::move(num));
  d.add_column("sigma_tf", "a_omega^2", std::move(tf));
  return {std::move(d)};
}

std::vector<Dataset> run_figure3(const SweepConfig& config) {
  config.validate();
  return run_figure3(config, solve_states(config.gammas, config));
}

std::vector<Dataset> run_figure3(const SweepConfig& config, const StateTable& states) {
  config.validate();
  const std::vector<double> ks = config.k_grid.values();
  const double k_max = ks.back();
  struct Curves {
    CrossSectionCurve num, tf, num_scaled, tf_scaled;
  };
  const auto per_gamma = parallel_map(config.gammas.size(), [&](std::size_t i) {
    const double gamma = config.gammas[i];
    const GroundState& s = state_for(states, gamma);
    const double radius = tf_radius(gamma);
    Curves c;
    c.num = total_cross_section_curve(gamma, numerical_table_for(s, k_max), ks, Method::numerical);
    c.tf = total_cross_section_curve(gamma, tf_table_for(gamma, 2.0 * k_max * radius), ks,
                                     Method::tf);
    c.num_scaled = scale_curve(c.num, cutoff_of(s));
    c.tf_scaled = scale_curve(c.tf, radius);
    return c;
  });

  Dataset a = start_dataset("figure3a", config);
  a.add_provenance("description", "total elastic cross section versus k per gamma");
  Dataset b = start_dataset("figure3b", config);
  b.add_provenance("description", "scaled cross sections sigma/gamma^2 versus kR");
  b.add_provenance("scaling.numerical_cutoff", "R_mu = sqrt(2 mu_num)");
  b.add_provenance("scaling.tf_cutoff", "R = (15 gamma)^(1/5)");
  std::vector<double> ag, ak, anum, atf;
  std::vector<double> bg, bkn, bsn, bkt, bst, bcn, bct;
  double kt_min = std::numeric_limits<double>::infinity();
  double kt_max = 0.0;
  for (std::size_t i = 0; i < config.gammas.size(); ++i) {
    const double gamma = config.gammas[i];
    const GroundState& s = state_for(states, gamma);
    add_state_provenance(a, s);
    add_state_provenance(b, s);
    const Curves& c = per_gamma[i];
    const double cutoff_num = cutoff_of(s);
    const double cutoff_tf = tf_radius(gamma);
    b.add_provenance("cutoff_num." + format_number(gamma), format_number(cutoff_num));
    b.add_provenance("cutoff_tf." + format_number(gamma), format_number(cutoff_tf));
    for (std::size_t j = 0; j < ks.size(); ++j) {
      ag.push_back(gamma);
      ak.push_back(ks[j]);
      anum.push_back(c.num.y[j]);
      atf.push_back(c.tf.y[j]);
      bg.push_back(gamma);
      bkn.push_back(c.num_scaled.x[j]);
      bsn.push_back(c.num_scaled.y[j]);
      bkt.push_back(c.tf_scaled.x[j]);
      bst.push_back(c.tf_scaled.y[j]);
      bcn.push_back(cutoff_num);
      bct.push_back(cutoff_tf);
    }
    kt_min = std::min({kt_min, c.num_scaled.x.front(), c.tf_scaled.x.front()});
    kt_max = std::max({kt_max, c.num_scaled.x.back(), c.tf_scaled.x.back()});
  }
  a.add_column("gamma", "1", std::move(ag));
  a.add_column("k", "1/a_omega", std::move(ak));
  a.add_column("sigma_num", "a_omega^2", std::move(anum));
  a.add_column("sigma_tf", "a_omega^2", std::move(atf));
  b.add_column("gamma", "1", std::move(bg));
  b.add_column("k_tilde_num", "1", std::move(bkn));
  b.add_column("sigma_tilde_num", "1", std::move(bsn));
  b.add_column("k_tilde_tf", "1", std::move(bkt));
  b.add_column("sigma_tilde_tf", "1", std::move(bst));
  b.add_column("cutoff_num", "a_omega", std::move(bcn));
  b.add_column("cutoff_tf", "a_omega", std::move(bct));

  Dataset u = start_dataset("figure3_universal", config);
  u.add_provenance("description", "universal TF curve sigma/gamma^2 versus kR");
  const KGrid dense{kt_min, kt_max, 2 * config.k_grid.count};
  const std::vector<double> kt = dense.values();
  u.add_column("k_tilde", "1", kt);
  u.add_column("sigma_tilde", "1", tf_universal_curve(kt));
  return {std::move(a), std::move(b), std::move(u)};
}

std::vector<Dataset> run_figure4(const SweepConfig& config) {
  config.validate();
  return run_figure4(config, solve_states(config.figure4_gammas, config));
}

std::vector<Dataset> run_figure4(const SweepConfig& config, const StateTable& states) {
  config.validate();
  struct Columns {
    std::vector<double> q, num, tf;
  };
  const auto per_gamma = parallel_map(config.figure4_gammas.size(), [&](std::size_t i) {
    const double gamma = config.figure4_gammas[i];
    const GroundState& s = state_for(states, gamma);
    const FormFactorTable num = form_factor_table(s.profile, config.q_max, config.n_q);
    const double radius = tf_radius(gamma);
    Columns c;
    for (std::size_t j = 0; j < num.size(); ++j) {
      const double q = num.q()[j];
      c.q.push_back(q);
      c.num.push_back(differential_cross_section(gamma, num, q));
      const double s_tf = tf_form_factor(q * radius);
      c.tf.push_back(4.0 * gamma * gamma * s_tf * s_tf);
    }
    return c;
  });

  Dataset d = start_dataset("figure4", config);
  d.add_provenance("description", "differential cross section versus momentum transfer q");
  std::vector<double> gc, qc, num, tf;
  for (std::size_t i = 0; i < config.figure4_gammas.size(); ++i) {
    add_state_provenance(d, state_for(states, config.figure4_gammas[i]));
    const Columns& c = per_gamma[i];
    for (std::size_t j = 0; j < c.q.size(); ++j) {
      gc.push_back(config.figure4_gammas[i]);
      qc.push_back(c.q[j]);
      num.push_back(c.num[j]);
      tf.push_back(c.tf[j]);
    }
  }
  d.add_column("gamma", "1", std::move(gc));
  d.add_column("q", "1/a_omega", std::move(qc));
  d.add_column("dsigma_num", "a_omega^2/sr", std::move(num));
  d.add_column("dsigma_tf", "a_omega^2/sr", std::move(tf));
  return {std::move(d)};
}

std::vector<Dataset> run_all(const SweepConfig& config) {
  config.validate();
  std::vector<double> all = config.gammas;
  all.insert(all.end(), config.figure4_gammas.begin(), config.figure4_gammas.end());
  const StateTable states = solve_states(all, config);
  std::vector<Dataset> out;
  for (auto& d : run_figure1(config, states)) out.push_back(std::move(d));
  for (auto& d : run_figure2(config, states)) out.push_back(std::move(d));
  for (auto& d : run_figure3(config, states)) out.push_back(std::move(d));
  for (auto& d : run_figure4(config, states)) out.push_back(std::move(d));
  return out;
}

std::vector<std::filesystem::path> write_datasets(const std::vector<Dataset>& datasets,
                                                  const SweepConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) {
    throw Error(ErrorKind::file_error,
                "cannot create output directory " + config.output_dir.string() + ": " + ec.message());
  }
  std::vector<std::filesystem::path> paths;
  for (const Dataset& d : datasets) {
    auto path = config.output_dir / (d.name + std::string(file_extension(config.format)));
    emit_dataset(d, config.format, path);
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace becscat
