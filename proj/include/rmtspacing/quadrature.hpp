#ifndef RMTSPACING_QUADRATURE_HPP_
#define RMTSPACING_QUADRATURE_HPP_

// Globally adaptive one-dimensional quadrature.
//
// The interval is split into panels; the panel with the largest error
// estimate is bisected until the summed estimate drops below
// max(abs_tol, rel_tol * |value|). Panels that reach max_depth are frozen.
// If only frozen panels remain and the tolerance is still not met, a
// QuadratureFailure carrying the partial sum is thrown.

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "rmtspacing/errors.hpp"

namespace rmtspacing::oracle {

enum class PanelRule { GaussKronrod, AdaptiveSimpson };

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 40;
  PanelRule panel_rule = PanelRule::GaussKronrod;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
      throw UsageError("QuadratureSpec: tolerances must be positive");
    }
    if (max_depth < 1) throw UsageError("QuadratureSpec: max_depth must be >= 1");
  }

  /// Same rule and depth with tolerances multiplied by `factor`.
  QuadratureSpec scaled(double factor) const {
    QuadratureSpec out = *this;
    out.abs_tol *= factor;
    out.rel_tol *= factor;
    return out;
  }
};

struct QuadratureResult {
  double value = 0.0;
  double err_est = 0.0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK tables).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double err;
  int depth;
  bool operator<(const Panel& other) const { return err < other.err; }
};

template <class F>
QuadratureResult gauss_kronrod_panel(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <class F>
QuadratureResult simpson_panel(F& f, double a, double b) {
  const double h = b - a;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
  const double coarse = h / 6.0 * (fa + 4.0 * fm + fb);
  const double fine = h / 12.0 * (fa + 4.0 * fl + 2.0 * fm + 4.0 * fr + fb);
  return {fine + (fine - coarse) / 15.0, std::abs(fine - coarse) / 15.0};
}

template <class F>
QuadratureResult eval_panel(F& f, double a, double b, PanelRule rule) {
  return rule == PanelRule::GaussKronrod ? gauss_kronrod_panel(f, a, b)
                                         : simpson_panel(f, a, b);
}

// Hard cap on live panels; reaching it means the integrand is not resolvable
// at the requested tolerance.
inline constexpr std::size_t kMaxPanels = 200000;

}  // namespace detail

/// Adaptive integral of f over [a, b]. Optional interior breakpoints seed the
/// initial partition (useful for narrow peaks that a single panel would miss).
template <class F>
QuadratureResult integrate_1d(F&& f, double a, double b, const QuadratureSpec& spec,
                              std::span<const double> breakpoints = {}) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw UsageError("integrate_1d: requires finite a < b");
  }
  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<detail::Panel> live;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto r = detail::eval_panel(f, cuts[i], cuts[i + 1], spec.panel_rule);
    live.push({cuts[i], cuts[i + 1], r.value, r.err_est, 0});
    total += r.value;
    total_err += r.err_est;
  }

  auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
  while (total_err > tolerance()) {
    if (live.empty()) {
      throw QuadratureFailure("integrate_1d: max_depth reached before tolerance was met",
                              total, total_err);
    }
    if (live.size() > detail::kMaxPanels) {
      throw QuadratureFailure("integrate_1d: panel budget exhausted", total, total_err);
    }
    const detail::Panel worst = live.top();
    live.pop();
    if (worst.depth >= spec.max_depth) {
      continue;  // frozen: its error stays in total_err
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const auto left = detail::eval_panel(f, worst.a, mid, spec.panel_rule);
    const auto right = detail::eval_panel(f, mid, worst.b, spec.panel_rule);
    total += left.value + right.value - worst.value;
    total_err += left.err_est + right.err_est - worst.err;
    live.push({worst.a, mid, left.value, left.err_est, worst.depth + 1});
    live.push({mid, worst.b, right.value, right.err_est, worst.depth + 1});
  }
  return {total, total_err};
}

template <class F>
QuadratureResult integrate_1d(F&& f, double a, double b, const QuadratureSpec& spec,
                              std::initializer_list<double> breakpoints) {
  return integrate_1d(std::forward<F>(f), a, b, spec,
                      std::span<const double>(breakpoints.begin(), breakpoints.size()));
}

/// ∫_0^∞ f(s) ds through the map s = t / (1 - t). `scale_points` are
/// s-values whose images seed the partition.
template <class F>
QuadratureResult integrate_half_line(F&& f, const QuadratureSpec& spec,
                                     std::span<const double> scale_points = {}) {
  auto mapped = [&f](double t) {
    if (t >= 1.0) return 0.0;
    const double om = 1.0 - t;
    const double s = t / om;
    const double v = f(s);
    return v == 0.0 ? 0.0 : v / (om * om);
  };
  std::vector<double> cuts;
  for (double s : scale_points) {
    if (s > 0.0 && std::isfinite(s)) cuts.push_back(s / (1.0 + s));
  }
  return integrate_1d(mapped, 0.0, 1.0, spec, cuts);
}

template <class F>
QuadratureResult integrate_half_line(F&& f, const QuadratureSpec& spec,
                                     std::initializer_list<double> scale_points) {
  return integrate_half_line(std::forward<F>(f), spec,
                             std::span<const double>(scale_points.begin(), scale_points.size()));
}

/// Breakpoints at center - k * width for k in {1/2, 1, 2, 4, 8, 16}: seeds an
/// adaptive partition around a one-sided peak of the given width.
inline std::vector<double> peak_breakpoints(double center, double width) {
  std::vector<double> out;
  if (!(width > 0.0) || !std::isfinite(width)) return out;
  for (double k : {16.0, 8.0, 4.0, 2.0, 1.0, 0.5}) out.push_back(center - k * width);
  return out;
}

}  // namespace rmtspacing::oracle

#endif  // RMTSPACING_QUADRATURE_HPP_
