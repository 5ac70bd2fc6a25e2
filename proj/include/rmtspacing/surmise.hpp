#ifndef RMTSPACING_SURMISE_HPP_
#define RMTSPACING_SURMISE_HPP_

// Unit-mean Wigner surmises P(s) = C1 s^β exp(-C2 s²) for β = 1 (GOE),
// 2 (GUE), 3 (Ginibre) and 4 (GSE).

#include <cmath>
#include <string>

#include "rmtspacing/errors.hpp"
#include "rmtspacing/specfun.hpp"

namespace rmtspacing::surmise {

/// Dyson index restricted to {1, 2, 3, 4}.
class SurmiseBeta {
 public:
  explicit SurmiseBeta(int beta) : beta_(beta) {
    if (beta < 1 || beta > 4) {
      throw DomainError("SurmiseBeta: beta must be 1, 2, 3 or 4, got " + std::to_string(beta));
    }
  }
  int value() const noexcept { return beta_; }
  friend bool operator==(SurmiseBeta, SurmiseBeta) = default;

 private:
  int beta_;
};

struct SurmiseConstants {
  double c1;  ///< amplitude
  double c2;  ///< Gaussian rate
};

/// Constants fixed by unit norm and unit mean:
/// C2 = [Γ((β+2)/2) / Γ((β+1)/2)]², C1 = 2 C2^((β+1)/2) / Γ((β+1)/2).
inline SurmiseConstants surmise_constants(SurmiseBeta beta) {
  const double b = beta.value();
  const double g_lo = specfun::gamma_fn(0.5 * (b + 1.0));
  const double ratio = specfun::gamma_fn(0.5 * (b + 2.0)) / g_lo;
  const double c2 = ratio * ratio;
  const double c1 = 2.0 * std::pow(c2, 0.5 * (b + 1.0)) / g_lo;
  return {c1, c2};
}

inline double surmise_pdf(SurmiseBeta beta, double s) {
  if (!(s >= 0.0)) throw DomainError("surmise_pdf: s must be >= 0");
  if (std::isinf(s)) return 0.0;
  const auto k = surmise_constants(beta);
  return k.c1 * std::pow(s, beta.value()) * std::exp(-k.c2 * s * s);
}

/// Location of the density maximum, s* = sqrt(β / (2 C2)).
inline double surmise_mode(SurmiseBeta beta) {
  return std::sqrt(beta.value() / (2.0 * surmise_constants(beta).c2));
}

namespace detail {

// Regularized lower incomplete gamma P(a, x) for half-integer/integer a in
// [1, 2.5]: series for x < a + 1, Lentz continued fraction otherwise.
inline double regularized_gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double log_prefix = a * std::log(x) - x - std::lgamma(a);
  if (x < a + 1.0) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 1000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    return sum * std::exp(log_prefix);
  }
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 - std::exp(log_prefix) * h;
}

}  // namespace detail

/// CDF of the unit-mean surmise: the regularized lower incomplete gamma
/// function P((β+1)/2, C2 s²).
inline double surmise_cdf(SurmiseBeta beta, double s) {
  if (!(s >= 0.0)) throw DomainError("surmise_cdf: s must be >= 0");
  if (std::isinf(s)) return 1.0;
  const auto k = surmise_constants(beta);
  return detail::regularized_gamma_p(0.5 * (beta.value() + 1.0), k.c2 * s * s);
}

}  // namespace rmtspacing::surmise

#endif  // RMTSPACING_SURMISE_HPP_
