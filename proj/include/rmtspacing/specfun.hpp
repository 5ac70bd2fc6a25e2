#ifndef RMTSPACING_SPECFUN_HPP_
#define RMTSPACING_SPECFUN_HPP_

// Special-function kernels used by the closed-form spacing densities.
//
// Modified Bessel functions are only exposed in exponentially scaled form,
// e^{-x} I_n(x), because the densities multiply them by Gaussians whose
// exponents cancel the growth of I_n. Complete elliptic integrals follow the
// AMS-55 parameter convention (m = k^2) and are evaluated through Carlson's
// symmetric forms R_F and R_D.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rmtspacing/errors.hpp"

namespace rmtspacing::specfun {

namespace detail {

inline void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be finite");
  }
}

// Below this the power series is summed directly; above it the large-x
// asymptotic expansion reaches full double precision.
inline constexpr double kBesselSeriesLimit = 25.0;

inline double bessel_scaled_series(int order, double x) {
  const double q = 0.25 * x * x;
  double term = order == 0 ? 1.0 : 0.5 * x;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
    sum += term;
    if (term < sum * std::numeric_limits<double>::epsilon() * 0.5) break;
  }
  return sum * std::exp(-x);
}

inline double bessel_scaled_asymptotic(int order, double x) {
  const double mu = 4.0 * order * order;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * k * x);
    if (std::abs(next) > std::abs(term)) break;  // series started diverging
    term = next;
    sum += term;
    if (std::abs(term) < std::abs(sum) * std::numeric_limits<double>::epsilon() * 0.5) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

inline void require_bessel_arg(double x, const char* fn) {
  require_finite(x, fn);
  if (x < 0.0) throw DomainError(std::string(fn) + ": argument must be >= 0");
}

// Carlson's relative tolerance for the duplication loops; truncation error of
// the fifth/sixth-order tails is below double epsilon at this setting.
inline constexpr double kCarlsonTol = 1e-16;

}  // namespace detail

/// e^{-x} I_0(x) for x >= 0.
inline double bessel_i0_scaled(double x) {
  detail::require_bessel_arg(x, "bessel_i0_scaled");
  return x <= detail::kBesselSeriesLimit ? detail::bessel_scaled_series(0, x)
                                         : detail::bessel_scaled_asymptotic(0, x);
}

/// e^{-x} I_1(x) for x >= 0.
inline double bessel_i1_scaled(double x) {
  detail::require_bessel_arg(x, "bessel_i1_scaled");
  if (x == 0.0) return 0.0;
  return x <= detail::kBesselSeriesLimit ? detail::bessel_scaled_series(1, x)
                                         : detail::bessel_scaled_asymptotic(1, x);
}

/// Carlson's symmetric integral R_F(x, y, z); at most one argument may be zero.
inline double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0 || (x == 0.0 && y == 0.0) ||
      (x == 0.0 && z == 0.0) || (y == 0.0 && z == 0.0)) {
    throw DomainError("carlson_rf: arguments must be >= 0 with at most one zero");
  }
  const double a0 = (x + y + z) / 3.0;
  const double q = std::pow(3.0 * detail::kCarlsonTol, -1.0 / 6.0) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  double a = a0;
  double scale = 1.0;
  while (q * scale >= std::abs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    scale *= 0.25;
  }
  const double xx = (a - x) / a;
  const double yy = (a - y) / a;
  const double zz = -(xx + yy);
  const double e2 = xx * yy - zz * zz;
  const double e3 = xx * yy * zz;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) /
         std::sqrt(a);
}

/// Carlson's symmetric integral R_D(x, y, z); z > 0, at most one of x, y zero.
inline double carlson_rd(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z <= 0.0 || (x == 0.0 && y == 0.0)) {
    throw DomainError("carlson_rd: requires x, y >= 0 (not both zero) and z > 0");
  }
  const double a0 = (x + y + 3.0 * z) / 5.0;
  const double q = std::pow(0.25 * detail::kCarlsonTol, -1.0 / 6.0) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  double a = a0;
  double scale = 1.0;
  double tail = 0.0;
  while (q * scale >= std::abs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    tail += scale / (sz * (z + lambda));
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    scale *= 0.25;
  }
  const double xx = (a - x) / a;
  const double yy = (a - y) / a;
  const double zz = -(xx + yy) / 3.0;
  const double xy = xx * yy;
  const double z2 = zz * zz;
  const double e2 = xy - 6.0 * z2;
  const double e3 = (3.0 * xy - 8.0 * z2) * zz;
  const double e4 = 3.0 * (xy - z2) * z2;
  const double e5 = xy * z2 * zz;
  const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                        3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return scale * series / (a * std::sqrt(a)) + 3.0 * tail;
}

/// Complete elliptic integral of the first kind, K(m) = ∫_0^{π/2} dθ / sqrt(1 - m sin²θ).
inline double elliptic_k(double m) {
  detail::require_finite(m, "elliptic_k");
  if (m < 0.0 || m >= 1.0) throw DomainError("elliptic_k: requires 0 <= m < 1");
  if (m == 0.0) return 0.5 * std::numbers::pi;
  return carlson_rf(0.0, 1.0 - m, 1.0);
}

/// Complete elliptic integral of the second kind, E(m) = ∫_0^{π/2} sqrt(1 - m sin²θ) dθ.
inline double elliptic_e(double m) {
  detail::require_finite(m, "elliptic_e");
  if (m < 0.0 || m > 1.0) throw DomainError("elliptic_e: requires 0 <= m <= 1");
  if (m == 0.0) return 0.5 * std::numbers::pi;
  if (m == 1.0) return 1.0;
  const double mc = 1.0 - m;
  return carlson_rf(0.0, mc, 1.0) - m / 3.0 * carlson_rd(0.0, mc, 1.0);
}

inline double erf(double x) {
  detail::require_finite(x, "erf");
  return std::erf(x);
}

/// Chebyshev polynomial of the first kind T_n(y) by the three-term recurrence.
/// Arguments outside [-1, 1] are allowed.
inline double chebyshev_t(int n, double y) {
  detail::require_finite(y, "chebyshev_t");
  if (n < 0 || n > 64) throw DomainError("chebyshev_t: order must be in [0, 64]");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = y;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * y * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline double gamma_fn(double x) {
  detail::require_finite(x, "gamma_fn");
  if (x <= 0.0) throw DomainError("gamma_fn: requires x > 0");
  return std::tgamma(x);
}

}  // namespace rmtspacing::specfun

#endif  // RMTSPACING_SPECFUN_HPP_
