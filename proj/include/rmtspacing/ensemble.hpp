#ifndef RMTSPACING_ENSEMBLE_HPP_
#define RMTSPACING_ENSEMBLE_HPP_

// Monte Carlo realization of the 4x4 Hermitian model
//
//   H = [[a,0,c,0],[0,a,0,c],[c,0,b,0],[0,c,0,b]]
//     + iα1 [[0,0,d,0],[0,0,0,-d],[-d,0,0,0],[0,d,0,0]]
//     +  α2 [[0,0,0,e],[0,0,-e,0],[0,-e,0,0],[e,0,0,0]]
//     + iα3 [[0,0,0,f],[0,0,f,0],[0,-f,0,0],[-f,0,0,0]]
//
// whose eigenvalues come in degenerate pairs separated by
// s = 2 sqrt(g² + c² + α1² d² + α2² e² + α3² f²), g = (a - b)/2.
//
// Draws are generated in fixed-size blocks, each with its own engine seeded
// from (seed, block index). Block-to-thread assignment is therefore free to
// vary without changing any output value.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "rmtspacing/errors.hpp"
#include "rmtspacing/types.hpp"

namespace rmtspacing::ensemble {

/// One realization of the Gaussian variables. g and u = (a + b)/2 are drawn
/// as independent standard normals; a = u + g and b = u - g then have
/// variance 2 and g = (a - b)/2 as required.
struct GaussianDraw {
  double g = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;
  double u = 0.0;

  double a() const noexcept { return u + g; }
  double b() const noexcept { return u - g; }

  /// Draw with explicit a and b (g and u are derived).
  static GaussianDraw from_ab(double a, double b, double c, double d, double e, double f) {
    return {0.5 * (a - b), c, d, e, f, 0.5 * (a + b)};
  }
};

using Engine = std::mt19937_64;

inline GaussianDraw draw_gaussians(Engine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  GaussianDraw out;
  out.g = normal(rng);
  out.c = normal(rng);
  out.d = normal(rng);
  out.e = normal(rng);
  out.f = normal(rng);
  out.u = normal(rng);
  return out;
}

inline double sample_spacing_formula(const GaussianDraw& x, const AlphaVec& alpha) {
  const double d = alpha.a1() * x.d;
  const double e = alpha.a2() * x.e;
  const double f = alpha.a3() * x.f;
  return 2.0 * std::sqrt(x.g * x.g + x.c * x.c + d * d + e * e + f * f);
}

inline double sample_spacing_formula(Engine& rng, const AlphaVec& alpha) {
  return sample_spacing_formula(draw_gaussians(rng), alpha);
}

using Complex = std::complex<double>;
using Matrix4 = std::array<std::array<Complex, 4>, 4>;

struct HermitianMatrix4 {
  Matrix4 m{};

  const Complex& operator()(int i, int j) const { return m[i][j]; }
  Complex& operator()(int i, int j) { return m[i][j]; }

  /// max |H - H^†| over all entries.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(m[i][j] - std::conj(m[j][i])));
    return worst;
  }

  double frobenius_norm() const {
    double sum = 0.0;
    for (const auto& row : m)
      for (const auto& v : row) sum += std::norm(v);
    return std::sqrt(sum);
  }
};

inline HermitianMatrix4 build_matrix(const GaussianDraw& x, const AlphaVec& alpha) {
  const double a = x.a(), b = x.b();
  const Complex id(0.0, alpha.a1() * x.d);
  const double e = alpha.a2() * x.e;
  const Complex jf(0.0, alpha.a3() * x.f);
  HermitianMatrix4 h;
  h(0, 0) = a;
  h(1, 1) = a;
  h(2, 2) = b;
  h(3, 3) = b;
  h(0, 2) = x.c + id;
  h(2, 0) = x.c - id;
  h(1, 3) = x.c - id;
  h(3, 1) = x.c + id;
  h(0, 3) = e + jf;
  h(3, 0) = e - jf;
  h(1, 2) = -e + jf;
  h(2, 1) = -e - jf;
  return h;
}

struct Eigen4Result {
  std::array<double, 4> values{};  ///< ascending
  Matrix4 vectors{};               ///< column k pairs with values[k]
  int sweeps = 0;
};

/// Cyclic complex Jacobi: each rotation first removes the phase of the pivot
/// and then applies the real symmetric Jacobi rotation.
inline Eigen4Result eigen4(const HermitianMatrix4& input) {
  Matrix4 h = input.m;
  Matrix4 v{};
  for (int i = 0; i < 4; ++i) v[i][i] = 1.0;

  auto off_norm = [&h] {
    double s = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) s += std::norm(h[p][q]);
    return s;
  };
  double scale = 0.0;
  for (const auto& row : h)
    for (const auto& x : row) scale += std::norm(x);

  constexpr int kMaxSweeps = 50;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    const double off = off_norm();
    if (off == 0.0 || off <= 1e-34 * scale) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double mag = std::abs(h[p][q]);
        if (mag == 0.0) continue;
        const Complex phase = h[p][q] / mag;  // e^{iφ}
        const double app = h[p][p].real();
        const double aqq = h[q][q].real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U = I except U_pp = c, U_pq = s, U_qp = -s e^{-iφ}, U_qq = c e^{-iφ}.
        const Complex phase_conj = std::conj(phase);
        for (int k = 0; k < 4; ++k) {  // H <- H U, V <- V U
          const Complex hkp = h[k][p], hkq = h[k][q];
          h[k][p] = c * hkp - s * phase_conj * hkq;
          h[k][q] = s * hkp + c * phase_conj * hkq;
          const Complex vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * phase_conj * vkq;
          v[k][q] = s * vkp + c * phase_conj * vkq;
        }
        for (int k = 0; k < 4; ++k) {  // H <- U^† H
          const Complex hpk = h[p][k], hqk = h[q][k];
          h[p][k] = c * hpk - s * phase * hqk;
          h[q][k] = s * hpk + c * phase * hqk;
        }
        h[p][q] = 0.0;
        h[q][p] = 0.0;
        h[p][p] = h[p][p].real();
        h[q][q] = h[q][q].real();
      }
    }
  }
  if (sweep == kMaxSweeps) throw NumericFailure("eigen4: Jacobi iteration did not converge");

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&h](int i, int j) { return h[i][i].real() < h[j][j].real(); });
  Eigen4Result out;
  out.sweeps = sweep;
  for (int k = 0; k < 4; ++k) {
    out.values[k] = h[order[k]][order[k]].real();
    for (int i = 0; i < 4; ++i) out.vectors[i][k] = v[i][order[k]];
  }
  return out;
}

/// Spacing between the midpoints of the two degenerate eigenvalue pairs.
inline double spacing_from_spectrum(const std::array<double, 4>& ev) {
  return 0.5 * (ev[2] + ev[3]) - 0.5 * (ev[0] + ev[1]);
}

inline double sample_spacing_matrix(const GaussianDraw& x, const AlphaVec& alpha) {
  return spacing_from_spectrum(eigen4(build_matrix(x, alpha)).values);
}

inline double sample_spacing_matrix(Engine& rng, const AlphaVec& alpha) {
  return sample_spacing_matrix(draw_gaussians(rng), alpha);
}

enum class Method { Formula, Matrix };

inline std::string_view to_string(Method m) { return m == Method::Formula ? "formula" : "matrix"; }

struct SpacingSampleSet {
  AlphaVec alpha{0.0, 0.0, 0.0};
  std::uint64_t seed = 0;
  Method method = Method::Formula;
  std::vector<double> spacings;

  std::size_t count() const noexcept { return spacings.size(); }
};

/// Draws per independently seeded block.
inline constexpr std::size_t kBlockSize = 4096;

inline Engine block_engine(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
                    0x5eedu};
  return Engine(seq);
}

inline unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(index, draw) exactly once for every index in [0, n). The draw at
/// each index depends only on (seed, index); fn must tolerate concurrent
/// calls for distinct indices.
template <class Fn>
void for_each_draw(std::size_t n, std::uint64_t seed, unsigned workers, Fn&& fn) {
  const std::size_t blocks = (n + kBlockSize - 1) / kBlockSize;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t b = next++; b < blocks && !failed; b = next++) {
        auto rng = block_engine(seed, b);
        const std::size_t end = std::min(n, (b + 1) * kBlockSize);
        for (std::size_t i = b * kBlockSize; i < end; ++i) fn(i, draw_gaussians(rng));
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };
  const auto w = static_cast<unsigned>(
      std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(blocks, 1)));
  if (w <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(w);
    for (unsigned t = 0; t < w; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

inline SpacingSampleSet run_ensemble(const AlphaVec& alpha, std::size_t n, std::uint64_t seed,
                                     Method method, unsigned workers = 0) {
  if (n < 1) throw UsageError("run_ensemble: n must be >= 1");
  SpacingSampleSet out;
  out.alpha = alpha;
  out.seed = seed;
  out.method = method;
  out.spacings.resize(n);
  for_each_draw(n, seed, workers, [&](std::size_t i, const GaussianDraw& x) {
    out.spacings[i] = method == Method::Formula ? sample_spacing_formula(x, alpha)
                                                : sample_spacing_matrix(x, alpha);
  });
  return out;
}

}  // namespace rmtspacing::ensemble

#endif  // RMTSPACING_ENSEMBLE_HPP_
