#include "becscat/curve_analysis.hpp"

#include <cmath>
#include <string>

#include "becscat/error.hpp"

namespace becscat {

namespace {

struct LineFit {
  double slope;
  double intercept;
  double rms;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    mx += x[j];
    my += y[j];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    sxx += (x[j] - mx) * (x[j] - mx);
    sxy += (x[j] - mx) * (y[j] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double r = y[j] - (intercept + slope * x[j]);
    ss += r * r;
  }
  return {slope, intercept, std::sqrt(ss / n)};
}

void select_window(const CrossSectionCurve& curve, Window window, bool log_x,
                   std::vector<double>& x, std::vector<double>& logy) {
  if (curve.x.size() != curve.y.size()) {
    throw Error(ErrorKind::invalid_input, "curve columns differ in length");
  }
  for (std::size_t j = 0; j < curve.x.size(); ++j) {
    const double xv = curve.x[j];
    if (xv < window.lo || xv > window.hi) continue;
    const double yv = curve.y[j];
    if (!(yv > 0.0)) {
      throw Error(ErrorKind::invalid_input, "fit window contains a non-positive value");
    }
    if (log_x && !(xv > 0.0)) {
      throw Error(ErrorKind::invalid_input, "power-law fit needs positive abscissae");
    }
    x.push_back(log_x ? std::log(xv) : xv);
    logy.push_back(std::log(yv));
  }
  if (x.size() < kMinFitPoints) {
    throw Error(ErrorKind::insufficient_data,
                "fit window holds " + std::to_string(x.size()) + " points, need " +
                    std::to_string(kMinFitPoints));
  }
}

struct Vertex {
  double x;
  double y;
};

// Vertex of the parabola through three samples; falls back to the middle one.
Vertex parabola_vertex(double x0, double y0, double x1, double y1, double x2, double y2) {
  const double d01 = (y1 - y0) / (x1 - x0);
  const double d12 = (y2 - y1) / (x2 - x1);
  const double a = (d12 - d01) / (x2 - x0);
  if (a == 0.0 || !std::isfinite(a)) return {x1, y1};
  const double b = d01 - a * (x0 + x1);
  const double xv = -b / (2.0 * a);
  if (xv < x0 || xv > x2) return {x1, y1};
  const double yv = y1 + (xv - x1) * (d01 + a * (xv - x0));
  return {xv, yv};
}

template <typename Pred>
std::vector<Vertex> extrema(const CrossSectionCurve& curve, Window window, Pred is_extremum) {
  std::vector<Vertex> out;
  const auto& x = curve.x;
  const auto& y = curve.y;
  for (std::size_t j = 1; j + 1 < x.size(); ++j) {
    if (x[j] < window.lo || x[j] > window.hi) continue;
    if (!is_extremum(y[j - 1], y[j], y[j + 1])) continue;
    out.push_back(parabola_vertex(x[j - 1], y[j - 1], x[j], y[j], x[j + 1], y[j + 1]));
  }
  return out;
}

}  // namespace

PowerLawFit fit_power_law(const CrossSectionCurve& curve, Window window) {
  std::vector<double> x, logy;
  select_window(curve, window, true, x, logy);
  const LineFit line = least_squares(x, logy);
  return {line.slope, std::exp(line.intercept), line.rms, x.size()};
}

ExponentialFit fit_log_linear(const CrossSectionCurve& curve, Window window) {
  std::vector<double> x, logy;
  select_window(curve, window, false, x, logy);
  const LineFit line = least_squares(x, logy);
  return {line.slope, std::exp(line.intercept), line.rms, x.size()};
}

CrossSectionCurve envelope(const CrossSectionCurve& curve, Window window) {
  CrossSectionCurve out = curve;
  out.x.clear();
  out.y.clear();
  for (const Vertex& v : extrema(curve, window, [](double a, double b, double c) {
         return b > a && b >= c;
       })) {
    out.x.push_back(v.x);
    out.y.push_back(v.y);
  }
  out.metadata["envelope_window"] =
      "[" + std::to_string(window.lo) + ", " + std::to_string(window.hi) + "]";
  return out;
}

std::vector<double> local_minima(const CrossSectionCurve& curve, Window window) {
  std::vector<double> xs;
  for (const Vertex& v : extrema(curve, window, [](double a, double b, double c) {
         return b < a && b <= c;
       })) {
    xs.push_back(v.x);
  }
  return xs;
}

double detect_oscillation_period(const CrossSectionCurve& curve, Window window) {
  const std::vector<double> minima = local_minima(curve, window);
  if (minima.size() < kMinOscillationMinima) {
    throw Error(ErrorKind::insufficient_data,
                "found " + std::to_string(minima.size()) + " minima, need " +
                    std::to_string(kMinOscillationMinima));
  }
  return (minima.back() - minima.front()) / static_cast<double>(minima.size() - 1);
}

}  // namespace becscat
