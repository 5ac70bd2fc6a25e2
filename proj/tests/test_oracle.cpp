#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rmtspacing/errors.hpp"
#include "rmtspacing/oracle.hpp"
#include "rmtspacing/transition.hpp"

using namespace rmtspacing;
using oracle::NestingOrder;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(ZIntegral, MatchesTanhSinh) {
  for (double xi : {1e-3, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    EXPECT_LE(rel(oracle::z_integral(xi), oracles::z_integral(xi)), 1e-11) << "xi=" << xi;
  }
  EXPECT_EQ(oracle::z_integral(0.0), 0.0);
}

TEST(ZIntegral, Limits) {
  // Z ~ √π ξ for small ξ and ~ √π / ξ for large ξ.
  EXPECT_LE(rel(oracle::z_integral(1e-4), std::sqrt(kPi) * 1e-4), 1e-6);
  EXPECT_LE(rel(oracle::z_integral(1e3), std::sqrt(kPi) / 1e3), 1e-5);
}

TEST(PdfIntegral, AgreesWithClosedForms) {
  for (auto kind : kAllTransitions) {
    for (double a : {0.05, 0.2, 0.5, 0.8, 0.95}) {
      for (double s : {0.1, 0.7, 2.0, 4.0, 8.0}) {
        const double want = transition::pdf_raw(kind, s, Alpha(a));
        EXPECT_LE(rel(oracle::pdf_integral(kind, s, Alpha(a)), want), 1e-8)
            << to_string(kind) << " a=" << a << " s=" << s;
      }
    }
  }
}

TEST(PdfIntegral, NestingOrderInvariant) {
  for (double a : {0.1, 0.5, 0.9}) {
    for (double s : {0.5, 2.0, 6.0}) {
      const double p = oracle::pdf_integral(TransitionKind::GoeToGinibre, s, Alpha(a), {},
                                            NestingOrder::PsiOuter);
      const double t = oracle::pdf_integral(TransitionKind::GoeToGinibre, s, Alpha(a), {},
                                            NestingOrder::ThetaOuter);
      EXPECT_LE(rel(p, t), 1e-9) << a << " " << s;
    }
  }
}

TEST(PdfIntegral, RejectsClosedEndpoints) {
  EXPECT_THROW(oracle::pdf_integral(TransitionKind::GueToGinibre, 1.0, Alpha(0.0)), DomainError);
  EXPECT_THROW(oracle::pdf_integral(TransitionKind::GueToGinibre, 1.0, Alpha(1.0)), DomainError);
  EXPECT_THROW(oracle::pdf_integral(TransitionKind::GoeToGinibre, -1.0, Alpha(0.5)), DomainError);
}

TEST(PdfGeneral, EndpointExamples) {
  EXPECT_NEAR(oracle::pdf_general(2.0, AlphaVec(0, 0, 0)), 0.5 * std::exp(-0.5), 1e-12);
  EXPECT_NEAR(oracle::pdf_general(2.0, AlphaVec(0, 0, 0)), 0.3032653, 5e-8);
  EXPECT_NEAR(oracle::pdf_general(2.0, AlphaVec(1, 0, 0)), std::exp(-0.5) / std::sqrt(2.0 * kPi), 1e-12);
  EXPECT_NEAR(oracle::pdf_general(2.0, AlphaVec(1, 1, 0)), 0.1516327, 5e-8);
  EXPECT_NEAR(oracle::pdf_general(2.0, AlphaVec(1, 1, 1)), 0.0806569, 5e-8);
}

TEST(PdfGeneral, MatchesTransitionsAlongTheirLines) {
  for (auto kind : kAllTransitions) {
    for (double a : {0.3, 0.7}) {
      for (double s : {0.5, 2.0, 5.0}) {
        EXPECT_LE(rel(oracle::pdf_general(s, alpha_vec_for(kind, Alpha(a))),
                      transition::pdf_raw(kind, s, Alpha(a))),
                  1e-8)
            << to_string(kind) << " " << a << " " << s;
      }
    }
  }
}

TEST(PdfGeneral, PermutationInvariant) {
  const double v = oracle::pdf_general(1.7, AlphaVec(0.2, 0.5, 0.9));
  EXPECT_LE(rel(oracle::pdf_general(1.7, AlphaVec(0.9, 0.2, 0.5)), v), 1e-9);
  EXPECT_LE(rel(oracle::pdf_general(1.7, AlphaVec(0.5, 0.9, 0.2)), v), 1e-9);
}

TEST(PdfGeneral, NormalizedForGenericVectors) {
  for (const auto& av : {AlphaVec(0.2, 0.5, 0.9), AlphaVec(0.3, 0.0, 0.6), AlphaVec(1.0, 0.4, 0.0)}) {
    EXPECT_NEAR(oracle::norm_numeric(av), 1.0, 1e-6);
  }
}

TEST(MeanNumeric, Values) {
  EXPECT_NEAR(oracle::mean_numeric(TransitionKind::GoeToGinibre, Alpha(0.5)), 2.9243997, 5e-8);
  EXPECT_NEAR(oracle::mean_numeric(AlphaVec(1, 1, 1)), 32.0 / (3.0 * std::sqrt(2.0 * kPi)), 1e-9);
  EXPECT_NEAR(oracle::mean_numeric(AlphaVec(0, 0, 0)), std::sqrt(2.0 * kPi), 1e-9);
  EXPECT_THROW(oracle::mean_numeric(TransitionKind::GoeToGinibre, Alpha(1.0)), DomainError);
}
