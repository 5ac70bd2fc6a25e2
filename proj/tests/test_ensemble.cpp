#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rmtspacing/ensemble.hpp"
#include "rmtspacing/errors.hpp"
#include "rmtspacing/transition.hpp"

using namespace rmtspacing;
using namespace rmtspacing::ensemble;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

double max_backward_error(const HermitianMatrix4& h, const Eigen4Result& r) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    double norm2 = 0.0;
    for (int i = 0; i < 4; ++i) {
      Complex hv = 0.0;
      for (int j = 0; j < 4; ++j) hv += h(i, j) * r.vectors[j][k];
      norm2 += std::norm(hv - r.values[k] * r.vectors[i][k]);
    }
    worst = std::max(worst, std::sqrt(norm2));
  }
  return worst;
}

}  // namespace

TEST(Formula, DeterministicDraws) {
  const auto x = GaussianDraw{1.0, 1.0, 0.0, 0.0, 0.0, 0.0};
  EXPECT_NEAR(sample_spacing_formula(x, AlphaVec(0.3, 0.6, 0.9)), 2.0 * kSqrt2, 1e-15);
  EXPECT_DOUBLE_EQ(sample_spacing_formula(GaussianDraw{0.6, 0.8}, AlphaVec(0, 0, 0)), 2.0);
  EXPECT_DOUBLE_EQ(sample_spacing_formula(GaussianDraw{0, 0, 5, 5, 5}, AlphaVec(0, 0, 0)), 0.0);
}

TEST(Matrix, ZeroDrawGivesZeroMatrix) {
  const auto h = build_matrix(GaussianDraw{}, AlphaVec(1, 1, 1));
  EXPECT_EQ(h.frobenius_norm(), 0.0);
  const auto r = eigen4(h);
  for (double v : r.values) EXPECT_EQ(v, 0.0);
}

TEST(Matrix, BlockExample) {
  const auto x = GaussianDraw::from_ab(2.0, 0.0, 1.0, 0.0, 0.0, 0.0);
  const auto h = build_matrix(x, AlphaVec(0.5, 0.5, 0.5));
  const auto r = eigen4(h);
  EXPECT_NEAR(r.values[0], 1.0 - kSqrt2, 1e-14);
  EXPECT_NEAR(r.values[1], 1.0 - kSqrt2, 1e-14);
  EXPECT_NEAR(r.values[2], 1.0 + kSqrt2, 1e-14);
  EXPECT_NEAR(r.values[3], 1.0 + kSqrt2, 1e-14);
  EXPECT_NEAR(sample_spacing_matrix(x, AlphaVec(0.5, 0.5, 0.5)), 2.0 * kSqrt2, 1e-14);
}

TEST(Matrix, RandomDrawsAreHermitianAndDegenerate) {
  Engine rng(7);
  for (const auto& av : {AlphaVec(0, 0, 0), AlphaVec(1, 0.3, 0), AlphaVec(1, 1, 1), AlphaVec(0.2, 0.7, 0.4)}) {
    for (int i = 0; i < 1000; ++i) {
      const auto x = draw_gaussians(rng);
      const auto h = build_matrix(x, av);
      EXPECT_EQ(h.hermiticity_defect(), 0.0);
      const auto r = eigen4(h);
      EXPECT_TRUE(std::is_sorted(r.values.begin(), r.values.end()));
      EXPECT_LE(r.values[1] - r.values[0], 1e-10);
      EXPECT_LE(r.values[3] - r.values[2], 1e-10);
      EXPECT_NEAR(r.values[0] + r.values[1] + r.values[2] + r.values[3], 2.0 * (x.a() + x.b()), 1e-12);
      EXPECT_LE(max_backward_error(h, r), 1e-12 * std::max(1.0, h.frobenius_norm()));
      EXPECT_NEAR(spacing_from_spectrum(r.values), sample_spacing_formula(x, av), 1e-10);
    }
  }
}

TEST(Matrix, DrawVariances) {
  Engine rng(11);
  const int n = 200000;
  double sa = 0, sa2 = 0, sg2 = 0, sc2 = 0;
  for (int i = 0; i < n; ++i) {
    const auto x = draw_gaussians(rng);
    sa += x.a();
    sa2 += x.a() * x.a();
    sg2 += x.g * x.g;
    sc2 += x.c * x.c;
  }
  EXPECT_NEAR(sa / n, 0.0, 0.02);
  EXPECT_NEAR(sa2 / n, 2.0, 0.03);
  EXPECT_NEAR(sg2 / n, 1.0, 0.02);
  EXPECT_NEAR(sc2 / n, 1.0, 0.02);
}

TEST(RunEnsemble, RejectsEmpty) {
  EXPECT_THROW(run_ensemble(AlphaVec(1, 1, 0), 0, 1, Method::Formula), UsageError);
}

TEST(RunEnsemble, IndependentOfWorkerCount) {
  const AlphaVec av(1, 0.3, 0);
  const auto one = run_ensemble(av, 10000, 42, Method::Formula, 1);
  const auto four = run_ensemble(av, 10000, 42, Method::Formula, 4);
  EXPECT_EQ(one.spacings, four.spacings);
  EXPECT_EQ(one.count(), 10000u);
  const auto other = run_ensemble(av, 10000, 43, Method::Formula, 1);
  EXPECT_NE(one.spacings, other.spacings);
}

TEST(RunEnsemble, PrefixStable) {
  const AlphaVec av(0.5, 0.5, 0.5);
  const auto small = run_ensemble(av, 5000, 9, Method::Formula, 1);
  const auto large = run_ensemble(av, 9000, 9, Method::Formula, 3);
  EXPECT_TRUE(std::equal(small.spacings.begin(), small.spacings.end(), large.spacings.begin()));
}

TEST(RunEnsemble, FormulaAndMatrixShareDraws) {
  const AlphaVec av(1, 0.3, 0);
  const auto f = run_ensemble(av, 5000, 5, Method::Formula, 2);
  const auto m = run_ensemble(av, 5000, 5, Method::Matrix, 2);
  for (std::size_t i = 0; i < f.count(); ++i) EXPECT_NEAR(f.spacings[i], m.spacings[i], 1e-10);
}

TEST(RunEnsemble, MeansWithinThreeStandardErrors) {
  for (auto kind : kAllTransitions) {
    for (double a : {0.25, 0.5, 0.75}) {
      const auto set = run_ensemble(alpha_vec_for(kind, Alpha(a)), 1000000, 20240601, Method::Formula);
      double sum = 0, sum2 = 0;
      for (double s : set.spacings) {
        sum += s;
        sum2 += s * s;
      }
      const double n = static_cast<double>(set.count());
      const double mean = sum / n;
      const double se = std::sqrt((sum2 / n - mean * mean) / n);
      EXPECT_LE(std::abs(mean - transition::mean_closed_form(kind, Alpha(a))), 3.0 * se)
          << to_string(kind) << " " << a;
    }
  }
}

TEST(RunEnsemble, GseEndpointMean) {
  const auto set = run_ensemble(AlphaVec(1, 1, 1), 1000000, 3, Method::Formula);
  double sum = 0;
  for (double s : set.spacings) sum += s;
  EXPECT_NEAR(sum / 1e6, 4.2554, 0.005);
}
