#ifndef RMTSPACING_TRANSITION_HPP_
#define RMTSPACING_TRANSITION_HPP_

// Closed-form transitional spacing densities and their exact means.
//
//   gue-ginibre  α-vector (1, α, 0): β = 2 at α = 0, β = 3 at α = 1
//   ginibre-gse  α-vector (1, 1, α): β = 3 at α = 0, β = 4 at α = 1
//   goe-ginibre  α-vector (α, α, 0): β = 1 at α = 0, β = 3 at α = 1
//
// Raw densities F(s, α) live on the spacing s of the 4x4 model; the
// unit-mean densities are ⟨s⟩ F(⟨s⟩ r, α). Endpoint values of α dispatch to
// the analytic limits instead of evaluating removable singularities.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rmtspacing/chebfit.hpp"
#include "rmtspacing/errors.hpp"
#include "rmtspacing/oracle.hpp"
#include "rmtspacing/quadrature.hpp"
#include "rmtspacing/specfun.hpp"
#include "rmtspacing/surmise.hpp"
#include "rmtspacing/types.hpp"

namespace rmtspacing::transition {

/// How Z(ξ) is obtained for the goe-ginibre density.
enum class ZMode { ExactQuadrature, ChebApprox };

inline std::string_view to_string(ZMode m) {
  return m == ZMode::ExactQuadrature ? "exact-quadrature" : "cheb-approx";
}

namespace detail {

inline constexpr double kSqrt2Pi = 2.5066282746310005024;  // sqrt(2π)

inline void require_s(double s, const char* fn) {
  if (!(s >= 0.0) || std::isnan(s)) throw DomainError(std::string(fn) + ": s must be >= 0");
}

// s³ e^{-s²/8} / 32: the raw-s Ginibre vertex shared by all three families.
inline double ginibre_vertex(double s) { return s * s * s * std::exp(-0.125 * s * s) / 32.0; }

// B(μ) = ∫_{-1}^{1} (1 - x²) e^{-μx²} dx. The closed form loses digits to
// cancellation for small μ, where the alternating Taylor series
// Σ 4(-μ)^k / (k! (2k+1)(2k+3)) is used instead.
inline double gse_bracket(double mu) {
  if (mu < 1.0) {
    double sum = 0.0;
    double power = 1.0;  // (-μ)^k / k!
    for (int k = 0; k < 60; ++k) {
      const double term = 4.0 * power / ((2.0 * k + 1.0) * (2.0 * k + 3.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      power *= -mu / (k + 1.0);
    }
    return sum;
  }
  const double root = std::sqrt(mu);
  return std::exp(-mu) / mu +
         std::sqrt(std::numbers::pi) * (2.0 * mu - 1.0) * std::erf(root) / (2.0 * mu * root);
}

}  // namespace detail

/// Bracket B(μ) of the ginibre-gse density, exposed for testing.
inline double gse_bracket(double mu) {
  if (!(mu >= 0.0)) throw DomainError("gse_bracket: mu must be >= 0");
  return detail::gse_bracket(mu);
}

// ---------------------------------------------------------------------------
// gue-ginibre

inline double pdf_gue_ginibre(double s, Alpha alpha) {
  detail::require_s(s, "pdf_gue_ginibre");
  if (std::isinf(s)) return 0.0;
  const double a = alpha.value();
  const double gauss = std::exp(-0.125 * s * s);
  const double x = s * s * (1.0 - a * a) / (16.0 * a * a);
  if (a == 0.0 || !std::isfinite(x)) {
    return s * s * gauss / (4.0 * detail::kSqrt2Pi);
  }
  return s * s * s / (32.0 * a) * gauss *
         (specfun::bessel_i0_scaled(x) + specfun::bessel_i1_scaled(x));
}

/// ⟨s⟩ = (2√2/√π) [(2 - α²) E(m) - α² K(m)] / m with m = 1 - α².
/// For m < 1/4 the 0/0 at α → 1 is avoided by summing the hypergeometric
/// series of the equivalent integral (3√8 α⁴/√π) ∫ sin²ψ (1 - m sin²ψ)^{-5/2}.
inline double mean_gue_ginibre(Alpha alpha) {
  const double a = alpha.value();
  const double a2 = a * a;
  const double m = 1.0 - a2;
  if (a == 0.0) return 4.0 * std::numbers::sqrt2 / std::sqrt(std::numbers::pi);
  if (m < 0.25) {
    double c = 0.5;
    double power = 1.0;
    double sum = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double term = c * power;
      sum += term;
      if (term < 1e-18 * sum) break;
      c *= (2.5 + k) / (k + 1.0) * (2.0 * k + 3.0) / (2.0 * k + 4.0);
      power *= m;
    }
    return 3.0 * std::sqrt(8.0) * a2 * a2 / std::sqrt(std::numbers::pi) *
           (0.5 * std::numbers::pi) * sum;
  }
  return 2.0 * std::numbers::sqrt2 / std::sqrt(std::numbers::pi) *
         ((2.0 - a2) * specfun::elliptic_e(m) - a2 * specfun::elliptic_k(m)) / m;
}

// ---------------------------------------------------------------------------
// ginibre-gse

inline double pdf_ginibre_gse(double s, Alpha alpha) {
  detail::require_s(s, "pdf_ginibre_gse");
  if (std::isinf(s)) return 0.0;
  const double a = alpha.value();
  const double mu = 0.125 * s * s * (1.0 - a * a) / (a * a);
  if (a == 0.0 || !std::isfinite(mu)) return detail::ginibre_vertex(s);
  return std::pow(s, 4) * std::exp(-0.125 * s * s) / (64.0 * detail::kSqrt2Pi * a) *
         detail::gse_bracket(mu);
}

/// ⟨s⟩ = √(2/π) [α(3 - 2α²)/(1 - α²) + (3 - 4α²) arccos(α)/(1 - α²)^{3/2}].
/// The two terms diverge with opposite signs as α → 1; for t = (1-α²)/α² < 1/4
/// the mean is taken from (16/(√(2π) α)) Σ (-t)^k (k+1)(k+2)/((2k+1)(2k+3)).
inline double mean_ginibre_gse(Alpha alpha) {
  const double a = alpha.value();
  if (a == 0.0) return 1.5 * detail::kSqrt2Pi;
  const double a2 = a * a;
  const double t = (1.0 - a2) / a2;
  if (t < 0.25) {
    double sum = 0.0;
    double power = 1.0;
    for (int k = 0; k < 200; ++k) {
      const double term = power * (k + 1.0) * (k + 2.0) / ((2.0 * k + 1.0) * (2.0 * k + 3.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      power *= -t;
    }
    return 16.0 / (detail::kSqrt2Pi * a) * sum;
  }
  const double om = 1.0 - a2;
  return std::sqrt(2.0 / std::numbers::pi) *
         (a * (3.0 - 2.0 * a2) / om + (3.0 - 4.0 * a2) * std::acos(a) / (om * std::sqrt(om)));
}

// ---------------------------------------------------------------------------
// goe-ginibre

/// Lumped variable ξ = s √(1-α²) / (2√2 α).
inline double goe_xi(double s, double a) {
  return s * std::sqrt(1.0 - a * a) / (2.0 * std::numbers::sqrt2 * a);
}

inline double pdf_goe_ginibre(double s, Alpha alpha, ZMode mode = ZMode::ExactQuadrature,
                              const chebfit::ChebCoeffs& coeffs = chebfit::published_coefficients()) {
  detail::require_s(s, "pdf_goe_ginibre");
  if (std::isinf(s)) return 0.0;
  const double a = alpha.value();
  const double gauss = std::exp(-0.125 * s * s);
  if (a == 1.0) return detail::ginibre_vertex(s);
  const double xi = goe_xi(s, a);
  if (a == 0.0 || !std::isfinite(xi)) return 0.25 * s * gauss;
  if (s == 0.0) return 0.0;
  const double z = mode == ZMode::ExactQuadrature
                       ? oracle::z_integral(xi)
                       : chebfit::z_cheb(chebfit::xi_to_y(xi), coeffs);
  // s³/(32πα²) · 2√(2π)α / (s√(1-α²)) = s³ √π / (32 π α² ξ)
  return s * s * s / (32.0 * a * a * std::sqrt(std::numbers::pi)) * gauss * (z / xi);
}

/// ⟨s⟩ = √(2π) (1 + α + α²) / (1 + α).
inline double mean_goe_ginibre(Alpha alpha) {
  const double a = alpha.value();
  return detail::kSqrt2Pi * (1.0 + a + a * a) / (1.0 + a);
}

// ---------------------------------------------------------------------------
// dispatch by kind

struct PdfOptions {
  ZMode z_mode = ZMode::ExactQuadrature;
  chebfit::ChebCoeffs coeffs = chebfit::published_coefficients();
};

inline double pdf_raw(TransitionKind kind, double s, Alpha alpha, const PdfOptions& opt = {}) {
  switch (kind) {
    case TransitionKind::GueToGinibre: return pdf_gue_ginibre(s, alpha);
    case TransitionKind::GinibreToGse: return pdf_ginibre_gse(s, alpha);
    case TransitionKind::GoeToGinibre: return pdf_goe_ginibre(s, alpha, opt.z_mode, opt.coeffs);
  }
  throw DomainError("pdf_raw: unknown transition");
}

inline double mean_closed_form(TransitionKind kind, Alpha alpha) {
  switch (kind) {
    case TransitionKind::GueToGinibre: return mean_gue_ginibre(alpha);
    case TransitionKind::GinibreToGse: return mean_ginibre_gse(alpha);
    case TransitionKind::GoeToGinibre: return mean_goe_ginibre(alpha);
  }
  throw DomainError("mean_closed_form: unknown transition");
}

/// Unit-mean density ⟨s⟩ F(⟨s⟩ r, α).
inline double pdf_normalized(TransitionKind kind, double r, Alpha alpha,
                             const PdfOptions& opt = {}) {
  detail::require_s(r, "pdf_normalized");
  const double mean = mean_closed_form(kind, alpha);
  return mean * pdf_raw(kind, mean * r, alpha, opt);
}

// ---------------------------------------------------------------------------
// tables

enum class Scale { RawS, UnitMeanR };

inline std::string_view to_string(Scale s) { return s == Scale::RawS ? "raw-s" : "unit-mean"; }

struct Grid {
  double start = 0.0;
  double stop = 5.0;
  double step = 0.01;

  void validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
      throw UsageError("grid: start, stop and step must be finite");
    }
    if (!(start >= 0.0)) throw UsageError("grid: start must be >= 0");
    if (!(start < stop)) throw UsageError("grid: start must be < stop");
    if (!(step > 0.0)) throw UsageError("grid: step must be > 0");
  }

  /// start + i*step for i = 0.. while not past stop (with a 1e-9 step slack).
  std::vector<double> points() const {
    validate();
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
  }
};

using DensitySource = std::variant<TransitionKind, surmise::SurmiseBeta>;

struct PdfRow {
  double x;
  double density;
};

struct PdfTable {
  DensitySource source = TransitionKind::GueToGinibre;
  std::optional<Alpha> alpha;
  Scale scale = Scale::UnitMeanR;
  std::optional<ZMode> z_mode;  ///< set for goe-ginibre only
  bool renormalized = false;
  double norm_factor = 1.0;     ///< divisor applied when renormalized
  double mean_s = 1.0;
  std::vector<PdfRow> rows;
};

struct TableOptions {
  PdfOptions pdf;
  bool renormalize = false;  ///< numerically renormalize ChebApprox densities
};

inline PdfTable pdf_table(const DensitySource& source, std::optional<Alpha> alpha,
                          const Grid& grid, Scale scale, const TableOptions& opt = {}) {
  const auto xs = grid.points();
  PdfTable table;
  table.source = source;
  table.scale = scale;
  table.rows.reserve(xs.size());

  if (const auto* beta = std::get_if<surmise::SurmiseBeta>(&source)) {
    for (double x : xs) table.rows.push_back({x, surmise::surmise_pdf(*beta, x)});
    return table;
  }

  const auto kind = std::get<TransitionKind>(source);
  if (!alpha) throw UsageError("pdf_table: transitions require alpha");
  table.alpha = alpha;
  table.mean_s = mean_closed_form(kind, *alpha);
  const bool cheb = kind == TransitionKind::GoeToGinibre && opt.pdf.z_mode == ZMode::ChebApprox;
  if (kind == TransitionKind::GoeToGinibre) table.z_mode = opt.pdf.z_mode;

  auto density = [&](double x) {
    return scale == Scale::RawS ? pdf_raw(kind, x, *alpha, opt.pdf)
                                : pdf_normalized(kind, x, *alpha, opt.pdf);
  };
  if (cheb && opt.renormalize) {
    oracle::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-10;
    table.norm_factor = oracle::integrate_half_line(density, spec, {1.0, 2.0, 4.0}).value;
    table.renormalized = true;
  }
  for (double x : xs) table.rows.push_back({x, density(x) / table.norm_factor});
  return table;
}

}  // namespace rmtspacing::transition

#endif  // RMTSPACING_TRANSITION_HPP_
