#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rmtspacing/errors.hpp"
#include "rmtspacing/quadrature.hpp"
#include "rmtspacing/surmise.hpp"

using namespace rmtspacing;
using surmise::SurmiseBeta;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(SurmiseBeta, OnlyOneToFour) {
  for (int b = 1; b <= 4; ++b) EXPECT_EQ(SurmiseBeta(b).value(), b);
  EXPECT_THROW(SurmiseBeta(0), DomainError);
  EXPECT_THROW(SurmiseBeta(5), DomainError);
}

TEST(SurmiseConstants, ClosedForms) {
  struct Row { int beta; double c1, c2; };
  const Row rows[] = {
      {1, kPi / 2, kPi / 4},
      {2, 32.0 / (kPi * kPi), 4.0 / kPi},
      {3, 81.0 * kPi * kPi / 128.0, 9.0 * kPi / 16.0},
      {4, std::pow(2.0, 18) / (std::pow(3.0, 6) * std::pow(kPi, 3)), 64.0 / (9.0 * kPi)},
  };
  for (const auto& r : rows) {
    const auto k = surmise::surmise_constants(SurmiseBeta(r.beta));
    EXPECT_NEAR(k.c1 / r.c1, 1.0, 1e-14) << "beta=" << r.beta;
    EXPECT_NEAR(k.c2 / r.c2, 1.0, 1e-14) << "beta=" << r.beta;
  }
  EXPECT_NEAR(surmise::surmise_constants(SurmiseBeta(3)).c1, 6.2456090, 5e-8);
  EXPECT_NEAR(surmise::surmise_constants(SurmiseBeta(3)).c2, 1.7671459, 5e-8);
}

TEST(SurmisePdf, PointValues) {
  EXPECT_EQ(surmise::surmise_pdf(SurmiseBeta(1), 0.0), 0.0);
  // (32/π²) e^{-4/π}
  EXPECT_NEAR(surmise::surmise_pdf(SurmiseBeta(2), 1.0), 0.9075892109, 1e-9);
  EXPECT_THROW(surmise::surmise_pdf(SurmiseBeta(2), -0.1), DomainError);
}

TEST(SurmisePdf, GinibrePeakLocation) {
  const double mode = surmise::surmise_mode(SurmiseBeta(3));
  EXPECT_NEAR(mode, std::sqrt(8.0 / (3.0 * kPi)), 1e-15);
  EXPECT_NEAR(mode, 0.9213177, 5e-8);
  const double p = surmise::surmise_pdf(SurmiseBeta(3), mode);
  EXPECT_GT(p, surmise::surmise_pdf(SurmiseBeta(3), mode - 1e-4));
  EXPECT_GT(p, surmise::surmise_pdf(SurmiseBeta(3), mode + 1e-4));
}

TEST(SurmisePdf, UnitNormAndMean) {
  for (int b = 1; b <= 4; ++b) {
    const SurmiseBeta beta(b);
    auto pdf = [beta](double s) { return surmise::surmise_pdf(beta, s); };
    const double norm = oracle::integrate_half_line(pdf, {}, {0.5, 1.0, 2.0}).value;
    const double mean =
        oracle::integrate_half_line([&](double s) { return s * pdf(s); }, {}, {0.5, 1.0, 2.0}).value;
    EXPECT_NEAR(norm, 1.0, 1e-10) << "beta=" << b;
    EXPECT_NEAR(mean, 1.0, 1e-10) << "beta=" << b;
  }
}

TEST(SurmisePdf, SmallSSlopeEqualsBeta) {
  for (int b = 1; b <= 4; ++b) {
    const SurmiseBeta beta(b);
    const double slope = std::log(surmise::surmise_pdf(beta, 1e-2) / surmise::surmise_pdf(beta, 1e-3)) /
                         std::log(10.0);
    EXPECT_NEAR(slope, b, 0.01);
  }
}

TEST(SurmiseCdf, MatchesQuadratureAndClosedForm) {
  // β = 1: cdf(s) = 1 - exp(-π s²/4)
  EXPECT_NEAR(surmise::surmise_cdf(SurmiseBeta(1), 1.0), 1.0 - std::exp(-kPi / 4), 1e-14);
  EXPECT_NEAR(surmise::surmise_cdf(SurmiseBeta(1), 1.0), 0.5440, 1e-4);
  for (int b = 1; b <= 4; ++b) {
    const SurmiseBeta beta(b);
    for (double s : {0.1, 0.5, 1.0, 2.0, 3.5}) {
      const double q = oracles::integrate([beta](double t) { return surmise::surmise_pdf(beta, t); },
                                          0.0, s);
      EXPECT_NEAR(surmise::surmise_cdf(beta, s), q, 1e-12) << b << " " << s;
    }
  }
}
