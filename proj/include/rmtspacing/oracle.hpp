#ifndef RMTSPACING_ORACLE_HPP_
#define RMTSPACING_ORACLE_HPP_

// Quadrature-based reference densities.
//
// The spacing s of the 4x4 model satisfies s/2 = |x| where x is a centred
// Gaussian vector with unit variance along (g, c) and variance α_i² along
// each direction with α_i > 0. The density of s is therefore a shell integral
// of that Gaussian over a sphere of radius s/2. Everything here evaluates
// those angular integrals numerically and never touches the closed forms in
// transition.hpp, so the two can certify each other.
//
// Integrands are written with the isotropic factor exp(-s²/8) pulled out so
// the adaptive rule always sees O(1) values.

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "rmtspacing/errors.hpp"
#include "rmtspacing/quadrature.hpp"
#include "rmtspacing/specfun.hpp"
#include "rmtspacing/types.hpp"

namespace rmtspacing::oracle {

/// Order of the nested angular integrals for the two-angle shell.
enum class NestingOrder { PsiOuter, ThetaOuter };

namespace detail {

inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Tolerance handed to inner integrals of a nested quadrature.
inline QuadratureSpec inner_spec(const QuadratureSpec& spec) { return spec.scaled(0.1); }

inline void require_open_alpha(Alpha alpha, const char* fn) {
  if (!(alpha.value() > 0.0 && alpha.value() < 1.0)) {
    throw DomainError(std::string(fn) + ": alpha must lie in the open interval (0, 1)");
  }
}

inline void require_s(double s, const char* fn) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw DomainError(std::string(fn) + ": s must be finite and >= 0");
  }
}

// Width of exp(-k cos²ψ) around ψ = π/2.
inline double peak_width(double k) { return k > 0.0 ? 1.0 / std::sqrt(k) : 0.0; }

// ∫_0^π sin^p(ψ) exp(-k cos²ψ) dψ, by symmetry twice the half range.
inline double single_angle(int power, double k, const QuadratureSpec& spec) {
  auto f = [power, k](double psi) {
    const double c = std::cos(psi);
    return std::pow(std::sin(psi), power) * std::exp(-k * c * c);
  };
  const auto cuts = peak_breakpoints(kHalfPi, peak_width(k));
  return 2.0 * integrate_1d(f, 0.0, kHalfPi, spec, cuts).value;
}

// Nested shell integral over hyperspherical angles. coef[i] multiplies the
// squared projection on the i-th anisotropic direction (outermost first);
// w2 is the squared product of sines accumulated by the enclosing levels.
inline double shell_angles(std::span<const double> coef, double w2, double acc,
                           const QuadratureSpec& spec) {
  if (coef.empty()) return std::exp(-acc);
  const int power = static_cast<int>(coef.size());  // Jacobian sin^(j-2)
  const double k = coef[0];
  const auto rest = coef.subspan(1);
  const auto inner = inner_spec(spec);
  auto f = [&](double theta) {
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    return std::pow(sn, power) * shell_angles(rest, w2 * sn * sn, acc + k * w2 * c * c, inner);
  };
  const auto cuts = peak_breakpoints(kHalfPi, peak_width(k * w2));
  return 2.0 * integrate_1d(f, 0.0, kHalfPi, spec, cuts).value;
}

}  // namespace detail

/// Z(ξ) = ∫_0^π exp(-ξ² cos²ψ) erf(ξ sinψ) sinψ dψ, evaluated with u = cosψ.
inline double z_integral(double xi, const QuadratureSpec& spec = {}) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw DomainError("z_integral: xi must be finite and >= 0");
  }
  if (xi == 0.0) return 0.0;
  // Rough magnitude of Z; dividing it out keeps the tolerance relative.
  const double scale = xi / (1.0 + xi * xi);
  auto f = [xi, scale](double u) {
    return std::exp(-xi * xi * u * u) * std::erf(xi * std::sqrt(1.0 - u * u)) / scale;
  };
  std::vector<double> cuts;
  for (double k : {0.5, 1.0, 2.0, 4.0, 8.0}) cuts.push_back(k / xi);
  return 2.0 * scale * integrate_1d(f, 0.0, 1.0, spec, cuts).value;
}

/// Two-angle shell integral of the (α, α, 0) transition evaluated in either
/// nesting order. Returns the bare angular double integral
/// ∫∫ exp(-(s²/8)(1/α² - 1)(sin²ψ cos²θ + cos²ψ)) sin²ψ sinθ dψ dθ.
inline double goe_ginibre_double_integral(double s, Alpha alpha, const QuadratureSpec& spec,
                                          NestingOrder order) {
  const double a = alpha.value();
  const double k = 0.125 * s * s * (1.0 / (a * a) - 1.0);
  const auto inner = detail::inner_spec(spec);
  const double half_pi = detail::kHalfPi;
  if (order == NestingOrder::PsiOuter) {
    auto outer = [&](double psi) {
      const double sp = std::sin(psi), cp = std::cos(psi);
      const double kt = k * sp * sp;
      auto g = [kt](double theta) {
        const double ct = std::cos(theta);
        return std::sin(theta) * std::exp(-kt * ct * ct);
      };
      const auto cuts = peak_breakpoints(half_pi, detail::peak_width(kt));
      const double theta_part = 2.0 * integrate_1d(g, 0.0, half_pi, inner, cuts).value;
      return sp * sp * std::exp(-k * cp * cp) * theta_part;
    };
    const auto cuts = peak_breakpoints(half_pi, detail::peak_width(k));
    return 2.0 * integrate_1d(outer, 0.0, half_pi, spec, cuts).value;
  }
  auto outer = [&](double theta) {
    const double st = std::sin(theta), ct = std::cos(theta);
    auto g = [k, ct](double psi) {
      const double sp = std::sin(psi), cp = std::cos(psi);
      return sp * sp * std::exp(-k * (sp * sp * ct * ct + cp * cp));
    };
    // The ψ-peak sits at π/2 with width governed by k sin²θ.
    const auto cuts = peak_breakpoints(half_pi, detail::peak_width(k * st * st));
    return st * 2.0 * integrate_1d(g, 0.0, half_pi, inner, cuts).value;
  };
  const auto cuts = peak_breakpoints(half_pi, detail::peak_width(k));
  return 2.0 * integrate_1d(outer, 0.0, half_pi, spec, cuts).value;
}

/// Raw transition density F(s, α) from its defining angular integral.
/// α must lie strictly inside (0, 1).
inline double pdf_integral(TransitionKind kind, double s, Alpha alpha,
                           const QuadratureSpec& spec = {},
                           NestingOrder order = NestingOrder::PsiOuter) {
  detail::require_s(s, "pdf_integral");
  detail::require_open_alpha(alpha, "pdf_integral");
  const double a = alpha.value();
  const double gauss = std::exp(-0.125 * s * s);
  const double k = 0.125 * s * s * (1.0 / (a * a) - 1.0);
  switch (kind) {
    case TransitionKind::GueToGinibre:
      return s * s * s / (16.0 * std::numbers::pi * a) * gauss *
             detail::single_angle(2, k, spec);
    case TransitionKind::GinibreToGse:
      return std::pow(s, 4) / (64.0 * std::sqrt(2.0 * std::numbers::pi) * a) * gauss *
             detail::single_angle(3, k, spec);
    case TransitionKind::GoeToGinibre:
      return s * s * s / (32.0 * std::numbers::pi * a * a) * gauss *
             goe_ginibre_double_integral(s, alpha, spec, order);
  }
  throw DomainError("pdf_integral: unknown transition");
}

/// Density of s for an arbitrary α-vector by nested quadrature over the
/// hyperspherical angles of the surviving directions.
inline double pdf_general(double s, const AlphaVec& alpha, const QuadratureSpec& spec = {}) {
  detail::require_s(s, "pdf_general");
  const double r = 0.5 * s;
  std::vector<double> sigmas;
  for (double a : alpha.components()) {
    if (a > 0.0) sigmas.push_back(a);
  }
  const int n = alpha.dimension();
  // Outermost angle belongs to the last coordinate.
  std::vector<double> coef;
  double sigma_prod = 1.0;
  for (auto it = sigmas.rbegin(); it != sigmas.rend(); ++it) {
    coef.push_back(0.5 * r * r * (1.0 / ((*it) * (*it)) - 1.0));
    sigma_prod *= *it;
  }
  const double angular = detail::shell_angles(coef, 1.0, 0.0, spec);
  // |S^{n-3}| from the angles not integrated explicitly: the φ circle gives 2π.
  const double density_r = std::pow(r, n - 1) * std::pow(2.0 * std::numbers::pi, -0.5 * n) /
                           sigma_prod * 2.0 * std::numbers::pi * std::exp(-0.5 * r * r) *
                           angular;
  return 0.5 * density_r;
}

/// ∫_0^∞ s F(s) ds for a transition, using the quadrature density.
inline double mean_numeric(TransitionKind kind, Alpha alpha, const QuadratureSpec& spec = {}) {
  detail::require_open_alpha(alpha, "mean_numeric");
  const auto inner = detail::inner_spec(spec);
  auto f = [&](double s) { return s * pdf_integral(kind, s, alpha, inner); };
  return integrate_half_line(f, spec, {1.0, 2.0, 4.0, 8.0}).value;
}

/// ∫_0^∞ s F(s) ds for an arbitrary α-vector.
inline double mean_numeric(const AlphaVec& alpha, const QuadratureSpec& spec = {}) {
  const auto inner = detail::inner_spec(spec);
  auto f = [&](double s) { return s * pdf_general(s, alpha, inner); };
  return integrate_half_line(f, spec, {1.0, 2.0, 4.0, 8.0}).value;
}

/// ∫_0^∞ F(s) ds for an arbitrary α-vector.
inline double norm_numeric(const AlphaVec& alpha, const QuadratureSpec& spec = {}) {
  const auto inner = detail::inner_spec(spec);
  auto f = [&](double s) { return pdf_general(s, alpha, inner); };
  return integrate_half_line(f, spec, {1.0, 2.0, 4.0, 8.0}).value;
}

}  // namespace rmtspacing::oracle

#endif  // RMTSPACING_ORACLE_HPP_
