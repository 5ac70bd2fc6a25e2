#ifndef RMTSPACING_ANALYSIS_HPP_
#define RMTSPACING_ANALYSIS_HPP_

// Histograms, tabulated CDFs, Kolmogorov-Smirnov distances and moment audits.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "rmtspacing/ensemble.hpp"
#include "rmtspacing/errors.hpp"
#include "rmtspacing/quadrature.hpp"

namespace rmtspacing::analysis {

struct Histogram {
  std::vector<double> edges;         ///< B + 1 sorted edges
  std::vector<std::size_t> counts;   ///< B in-range counts
  std::vector<double> density;       ///< counts / (N_in * width)
  std::size_t below = 0;             ///< samples < lo
  std::size_t above = 0;             ///< samples > hi
  std::size_t in_range = 0;
};

/// Equal-width histogram over [lo, hi]; hi itself falls into the last bin.
inline Histogram histogram(std::span<const double> samples, int bins, double lo, double hi) {
  if (samples.empty()) throw UsageError("histogram: empty sample set");
  if (bins < 1) throw UsageError("histogram: bins must be >= 1");
  if (!(lo < hi)) throw UsageError("histogram: requires lo < hi");
  Histogram h;
  const auto nb = static_cast<std::size_t>(bins);
  const double width = (hi - lo) / bins;
  h.edges.resize(nb + 1);
  for (std::size_t i = 0; i <= nb; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  h.edges[nb] = hi;
  h.counts.assign(nb, 0);
  for (double x : samples) {
    if (x < lo) {
      ++h.below;
    } else if (x > hi) {
      ++h.above;
    } else {
      auto idx = static_cast<std::size_t>((x - lo) / width);
      ++h.counts[std::min(idx, nb - 1)];
      ++h.in_range;
    }
  }
  h.density.assign(nb, 0.0);
  if (h.in_range > 0) {
    for (std::size_t i = 0; i < nb; ++i) {
      h.density[i] = static_cast<double>(h.counts[i]) /
                     (static_cast<double>(h.in_range) * (h.edges[i + 1] - h.edges[i]));
    }
  }
  return h;
}

inline Histogram histogram(const ensemble::SpacingSampleSet& set, int bins, double lo, double hi) {
  return histogram(std::span<const double>(set.spacings), bins, lo, hi);
}

struct CdfGridSpec {
  double upper = 10.0;  ///< cdf is treated as constant beyond this point
  double step = 0.005;
  double norm_tolerance = 1e-4;
};

/// CDF tabulated from a density by per-cell adaptive quadrature and
/// evaluated by cubic Hermite interpolation with the density as slope,
/// limited (Fritsch-Carlson) so the interpolant is monotone.
class TabulatedCdf {
 public:
  TabulatedCdf(const std::function<double(double)>& pdf, const CdfGridSpec& grid = {}) {
    if (!(grid.upper > 0.0) || !(grid.step > 0.0) || grid.step >= grid.upper) {
      throw UsageError("TabulatedCdf: requires 0 < step < upper");
    }
    const auto cells = static_cast<std::size_t>(std::ceil(grid.upper / grid.step - 1e-9));
    step_ = grid.upper / static_cast<double>(cells);
    nodes_.resize(cells + 1);
    values_.resize(cells + 1);
    slopes_.resize(cells + 1);
    oracle::QuadratureSpec spec;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-12;
    double acc = 0.0;
    for (std::size_t i = 0; i <= cells; ++i) {
      nodes_[i] = step_ * static_cast<double>(i);
      if (i > 0) acc += oracle::integrate_1d(pdf, nodes_[i - 1], nodes_[i], spec).value;
      values_[i] = acc;
      const double p = pdf(nodes_[i]);
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw IntegrityError("TabulatedCdf: density is negative or non-finite");
      }
      slopes_[i] = p;
    }
    total_ = acc;
    if (std::abs(total_ - 1.0) > grid.norm_tolerance) {
      throw IntegrityError("TabulatedCdf: density integrates to " + std::to_string(total_) +
                           " over [0, " + std::to_string(grid.upper) + "]");
    }
    limit_slopes();
  }

  double operator()(double x) const {
    if (!(x > 0.0)) return 0.0;
    if (x >= nodes_.back()) return total_;
    const auto i = std::min(static_cast<std::size_t>(x / step_), nodes_.size() - 2);
    const double t = (x - nodes_[i]) / step_;
    const double t2 = t * t, t3 = t2 * t;
    const double h10 = t3 - 2 * t2 + t, h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    // Increment form keeps rounding monotone in t.
    const double v = values_[i] + (h01 * (values_[i + 1] - values_[i]) +
                                   step_ * (h10 * slopes_[i] + h11 * slopes_[i + 1]));
    return std::clamp(v, values_[i], values_[i + 1]);
  }

  /// Smallest x with cdf(x) >= p, by bisection.
  double quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile: p must lie in [0, 1]");
    double lo = 0.0, hi = nodes_.back();
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      ((*this)(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  double total() const noexcept { return total_; }
  double upper() const noexcept { return nodes_.back(); }

 private:
  void limit_slopes() {
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
      const double delta = (values_[i + 1] - values_[i]) / step_;
      if (delta <= 0.0) {
        slopes_[i] = 0.0;
        slopes_[i + 1] = 0.0;
        continue;
      }
      const double a = slopes_[i] / delta;
      const double b = slopes_[i + 1] / delta;
      const double r = a * a + b * b;
      if (r > 9.0) {
        const double tau = 3.0 / std::sqrt(r);
        slopes_[i] = tau * a * delta;
        slopes_[i + 1] = tau * b * delta;
      }
    }
  }

  double step_ = 0.0;
  double total_ = 0.0;
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

inline TabulatedCdf cdf_from_pdf(const std::function<double(double)>& pdf,
                                 const CdfGridSpec& grid = {}) {
  return TabulatedCdf(pdf, grid);
}

struct KsReport {
  double statistic = 0.0;
  std::size_t n = 0;
  double threshold = 0.0;
  bool pass = false;
};

/// Asymptotic two-sided KS critical value at 1% significance, 1.6276/√n.
inline double ks_critical_1pct(std::size_t n) {
  return 1.6276 / std::sqrt(static_cast<double>(n));
}

/// Default acceptance threshold: three times the 1% critical value.
inline double default_ks_threshold(std::size_t n) { return 3.0 * ks_critical_1pct(n); }

inline KsReport ks_statistic(std::span<const double> samples,
                             const std::function<double(double)>& cdf, double threshold = 0.0) {
  if (samples.empty()) throw UsageError("ks_statistic: need at least one sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double k = static_cast<double>(i);
    d = std::max({d, (k + 1.0) / n - f, f - k / n});
  }
  KsReport rep;
  rep.statistic = d;
  rep.n = sorted.size();
  rep.threshold = threshold > 0.0 ? threshold : default_ks_threshold(sorted.size());
  rep.pass = rep.statistic <= rep.threshold;
  return rep;
}

enum class MeanSource { Analytic, Empirical };

inline std::string_view to_string(MeanSource m) {
  return m == MeanSource::Analytic ? "analytic" : "empirical";
}

inline double sample_mean(std::span<const double> xs) {
  if (xs.empty()) throw UsageError("sample_mean: empty sample set");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

inline double sample_stddev(std::span<const double> xs) {
  const double m = sample_mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() > 1 ? xs.size() - 1 : 1));
}

/// Spacings divided by either the supplied analytic mean or their own mean.
inline std::vector<double> unit_mean_scaled(std::span<const double> xs, MeanSource source,
                                            double analytic_mean = 1.0) {
  const double m = source == MeanSource::Analytic ? analytic_mean : sample_mean(xs);
  if (!(m > 0.0)) throw DomainError("unit_mean_scaled: mean must be positive");
  std::vector<double> out(xs.size());
  std::transform(xs.begin(), xs.end(), out.begin(), [m](double x) { return x / m; });
  return out;
}

struct MomentAudit {
  double norm = 0.0;
  double mean = 0.0;
};

/// ∫ pdf and ∫ s pdf over the half line. Throws IntegrityError when the norm
/// is off by more than `norm_tolerance`.
inline MomentAudit moment_audit(const std::function<double(double)>& pdf,
                                const oracle::QuadratureSpec& spec = {},
                                double norm_tolerance = 1e-4) {
  MomentAudit out;
  out.norm = oracle::integrate_half_line(pdf, spec, {0.5, 1.0, 2.0, 4.0, 8.0}).value;
  if (!std::isfinite(out.norm) || std::abs(out.norm - 1.0) > norm_tolerance) {
    throw IntegrityError("moment_audit: density integrates to " + std::to_string(out.norm));
  }
  out.mean = oracle::integrate_half_line([&pdf](double s) { return s * pdf(s); }, spec,
                                         {0.5, 1.0, 2.0, 4.0, 8.0})
                 .value;
  return out;
}

/// Trapezoid integral of a tabulated function.
inline double trapezoid(std::span<const double> x, std::span<const double> y) {
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return sum;
}

}  // namespace rmtspacing::analysis

#endif  // RMTSPACING_ANALYSIS_HPP_
