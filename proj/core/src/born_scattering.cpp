#include "becscat/born_scattering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "becscat/error.hpp"
#include "becscat/format.hpp"
#include "becscat/quadrature.hpp"
#include "becscat/thomas_fermi.hpp"

namespace becscat {

std::string_view to_string(FormFactorSource source) noexcept {
  switch (source) {
    case FormFactorSource::numerical_profile: return "numerical-profile";
    case FormFactorSource::tf_analytic: return "tf-analytic";
    case FormFactorSource::gaussian_analytic: return "gaussian-analytic";
  }
  return "unknown";
}

std::string_view to_string(Method method) noexcept {
  return method == Method::numerical ? "numerical" : "tf";
}

FormFactorTable::FormFactorTable(std::vector<double> q, std::vector<double> s,
                                 FormFactorSource source)
    : q_(std::move(q)), s_(std::move(s)), source_(source), h_(0.0) {
  if (q_.size() < 2 || q_.size() != s_.size()) {
    throw Error(ErrorKind::invalid_input, "form factor table needs >= 2 matching q and s nodes");
  }
  if (q_.front() != 0.0) throw Error(ErrorKind::invalid_input, "form factor table must start at q = 0");
  h_ = q_.back() / static_cast<double>(q_.size() - 1);
  if (!(h_ > 0.0)) throw Error(ErrorKind::invalid_input, "form factor table must be ascending");
  const double slack = 1e-9 * std::max(1.0, q_.back());
  for (std::size_t j = 0; j < q_.size(); ++j) {
    if (std::abs(q_[j] - static_cast<double>(j) * h_) > slack) {
      throw Error(ErrorKind::invalid_input, "form factor table nodes must be uniform");
    }
    if (!(std::abs(s_[j]) <= 1.0 + 1e-12)) {
      throw Error(ErrorKind::invalid_input, "form factor table value outside [-1, 1]");
    }
  }
}

double FormFactorTable::interpolate(double q) const {
  if (!(q >= 0.0) || q > q_.back()) {
    throw Error(ErrorKind::out_of_range,
                "q = " + std::to_string(q) + " outside table range [0, " +
                    std::to_string(q_.back()) + "]");
  }
  const auto upper = std::upper_bound(q_.begin(), q_.end(), q);
  if (upper == q_.end()) return s_.back();
  const std::size_t j = static_cast<std::size_t>(upper - q_.begin()) - 1;
  const double t = (q - q_[j]) / (q_[j + 1] - q_[j]);
  return s_[j] + t * (s_[j + 1] - s_[j]);
}

namespace {

// Shared by form_factor and form_factor_table so node values agree bitwise.
class FormFactorKernel {
 public:
  explicit FormFactorKernel(const RadialProfile& profile)
      : r_(profile.grid().nodes()),
        weights_(simpson_weights(profile.size(), profile.grid().spacing())) {
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      weights_[j] *= profile[j] * profile[j];
      norm_ += weights_[j];
    }
    if (!(norm_ > 0.0)) {
      throw Error(ErrorKind::degenerate_profile, "form factor of a zero-norm profile");
    }
  }

  double operator()(double q) const {
    if (!(q >= 0.0)) throw Error(ErrorKind::invalid_input, "form factor needs q >= 0");
    double acc = 0.0;
    for (std::size_t j = 0; j < r_.size(); ++j) {
      const double x = q * r_[j];
      const double j0 = x < 1e-3 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
      acc += weights_[j] * j0;
    }
    return acc / norm_;
  }

 private:
  std::vector<double> r_;
  std::vector<double> weights_;
  double norm_ = 0.0;
};

std::vector<double> uniform_nodes(double max, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = j + 1 == n ? max : max * static_cast<double>(j) / static_cast<double>(n - 1);
  }
  return x;
}

void require_table_shape(double q_max, std::size_t n) {
  if (!(q_max > 0.0) || !std::isfinite(q_max)) {
    throw Error(ErrorKind::invalid_input, "table range must be positive");
  }
  if (n < 2) throw Error(ErrorKind::invalid_input, "table needs at least two nodes");
}

}  // namespace

double form_factor(const RadialProfile& profile, double q) {
  if (!(q >= 0.0)) throw Error(ErrorKind::invalid_input, "form factor needs q >= 0");
  return FormFactorKernel(profile)(q);
}

FormFactorTable form_factor_table(const RadialProfile& profile, double q_max, std::size_t n_q) {
  require_table_shape(q_max, n_q);
  const FormFactorKernel kernel(profile);
  std::vector<double> q = uniform_nodes(q_max, n_q);
  std::vector<double> s(n_q);
  for (std::size_t j = 0; j < n_q; ++j) s[j] = kernel(q[j]);
  return FormFactorTable(std::move(q), std::move(s), FormFactorSource::numerical_profile);
}

FormFactorTable tf_form_factor_table(double gamma, double t_max, std::size_t n) {
  require_table_shape(t_max, n);
  const double radius = tf_radius(gamma);
  std::vector<double> t = uniform_nodes(t_max, n);
  std::vector<double> q(n), s(n);
  for (std::size_t j = 0; j < n; ++j) {
    q[j] = t[j] / radius;
    s[j] = tf_form_factor(t[j]);
  }
  return FormFactorTable(std::move(q), std::move(s), FormFactorSource::tf_analytic);
}

FormFactorTable gaussian_form_factor_table(double q_max, std::size_t n_q) {
  require_table_shape(q_max, n_q);
  std::vector<double> q = uniform_nodes(q_max, n_q);
  std::vector<double> s(n_q);
  for (std::size_t j = 0; j < n_q; ++j) s[j] = std::exp(-0.25 * q[j] * q[j]);
  return FormFactorTable(std::move(q), std::move(s), FormFactorSource::gaussian_analytic);
}

QGrid default_q_grid(double k_max, double radius) {
  if (!(k_max > 0.0) || !(radius > 0.0)) {
    throw Error(ErrorKind::invalid_input, "default q grid needs k_max > 0 and radius > 0");
  }
  const double q_max = std::max({10.0, 4.0 * k_max, 60.0 / radius});
  const auto resolved =
      static_cast<std::size_t>(std::ceil(16.0 * radius * q_max / std::numbers::pi)) + 1;
  return {q_max, std::max<std::size_t>(2001, resolved)};
}

double born_amplitude(double gamma, double s) { return -2.0 * gamma * s; }

double differential_cross_section(double gamma, const FormFactorTable& table, double q) {
  const double amplitude = born_amplitude(gamma, table.interpolate(q));
  return amplitude * amplitude;
}

double total_cross_section(double gamma, const FormFactorTable& table, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorKind::invalid_input, "total cross section needs k > 0");
  }
  const double upper = 2.0 * k;
  const auto q = table.q();
  const auto s = table.s();
  if (upper > table.q_max()) {
    throw Error(ErrorKind::out_of_range,
                "table ends at q = " + std::to_string(table.q_max()) + " but 2k = " +
                    std::to_string(upper));
  }
  const std::size_t n = table.size();
  std::size_t m = static_cast<std::size_t>(std::upper_bound(q.begin(), q.end(), upper) - q.begin()) - 1;

  double integral = 0.0;
  double start = 0.0;
  if (m >= 3) {
    std::vector<double> f(m + 1);
    for (std::size_t j = 0; j <= m; ++j) f[j] = s[j] * s[j] * q[j];
    integral = simpson(f, table.spacing());
    start = q[m];
  } else {
    m = 0;
  }

  if (upper > start) {
    // Cubic Lagrange interpolant of s^2 through the four nodes around the panel.
    const std::size_t count = std::min<std::size_t>(4, n);
    std::size_t first = m >= 1 ? m - 1 : 0;
    first = std::min(first, n - count);
    auto g = [&](double x) {
      double value = 0.0;
      for (std::size_t a = first; a < first + count; ++a) {
        double basis = 1.0;
        for (std::size_t b = first; b < first + count; ++b) {
          if (b != a) basis *= (x - q[b]) / (q[a] - q[b]);
        }
        value += basis * s[a] * s[a];
      }
      return value;
    };
    static constexpr std::array<double, 3> kNodes{-0.7745966692414834, 0.0, 0.7745966692414834};
    static constexpr std::array<double, 3> kWeights{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
    const double half = 0.5 * (upper - start);
    const double mid = 0.5 * (upper + start);
    double partial = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double x = mid + half * kNodes[i];
      partial += kWeights[i] * x * g(x);
    }
    integral += half * partial;
  }
  return 8.0 * std::numbers::pi * gamma * gamma / (k * k) * integral;
}

ScaledPoint scaled_point(double sigma, double gamma, double cutoff, double k) {
  if (!(gamma > 0.0)) throw Error(ErrorKind::invalid_input, "scaling needs gamma > 0");
  if (!(cutoff > 0.0)) throw Error(ErrorKind::invalid_input, "scaling needs a positive cutoff");
  return {k * cutoff, sigma / (gamma * gamma)};
}

void CrossSectionCurve::validate() const {
  if (x.size() != y.size()) throw Error(ErrorKind::invalid_input, "curve columns differ in length");
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j > 0 && !(x[j] > x[j - 1])) {
      throw Error(ErrorKind::invalid_input, "curve abscissa must be strictly ascending");
    }
    if (!(y[j] >= 0.0)) throw Error(ErrorKind::invalid_input, "cross sections must be nonnegative");
  }
}

namespace {

std::map<std::string, std::string> curve_metadata(double gamma, const FormFactorTable& table,
                                                  Method method) {
  return {{"gamma", format_number(gamma)},
          {"method", std::string(to_string(method))},
          {"form_factor_source", std::string(to_string(table.source()))},
          {"table_q_max", format_number(table.q_max())},
          {"table_nodes", std::to_string(table.size())}};
}

}  // namespace

CrossSectionCurve total_cross_section_curve(double gamma, const FormFactorTable& table,
                                            std::span<const double> ks, Method method) {
  CrossSectionCurve curve;
  curve.abscissa = Abscissa::k;
  curve.ordinate = Ordinate::sigma;
  curve.method = method;
  curve.gamma = gamma;
  curve.x.assign(ks.begin(), ks.end());
  curve.y.reserve(ks.size());
  for (double k : ks) curve.y.push_back(total_cross_section(gamma, table, k));
  curve.metadata = curve_metadata(gamma, table, method);
  curve.validate();
  return curve;
}

CrossSectionCurve differential_cross_section_curve(double gamma, const FormFactorTable& table,
                                                   std::span<const double> qs, Method method) {
  CrossSectionCurve curve;
  curve.abscissa = Abscissa::q;
  curve.ordinate = Ordinate::dsigma_domega;
  curve.method = method;
  curve.gamma = gamma;
  curve.x.assign(qs.begin(), qs.end());
  curve.y.reserve(qs.size());
  for (double q : qs) curve.y.push_back(differential_cross_section(gamma, table, q));
  curve.metadata = curve_metadata(gamma, table, method);
  curve.validate();
  return curve;
}

CrossSectionCurve scale_curve(const CrossSectionCurve& curve, double cutoff) {
  if (curve.ordinate != Ordinate::sigma || curve.abscissa != Abscissa::k) {
    throw Error(ErrorKind::invalid_input, "only sigma(k) curves can be scaled");
  }
  CrossSectionCurve scaled = curve;
  scaled.abscissa = Abscissa::k_scaled;
  scaled.ordinate = Ordinate::sigma_scaled;
  for (std::size_t j = 0; j < curve.x.size(); ++j) {
    const ScaledPoint p = scaled_point(curve.y[j], curve.gamma, cutoff, curve.x[j]);
    scaled.x[j] = p.k_tilde;
    scaled.y[j] = p.sigma_tilde;
  }
  scaled.metadata["cutoff"] = format_number(cutoff);
  return scaled;
}

}  // namespace becscat
