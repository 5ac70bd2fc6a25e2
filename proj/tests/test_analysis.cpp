#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "rmtspacing/analysis.hpp"
#include "rmtspacing/ensemble.hpp"
#include "rmtspacing/errors.hpp"
#include "rmtspacing/surmise.hpp"
#include "rmtspacing/transition.hpp"

using namespace rmtspacing;
using namespace rmtspacing::analysis;
using surmise::SurmiseBeta;

namespace {

std::function<double(double)> surmise_density(int beta) {
  return [b = SurmiseBeta(beta)](double s) { return surmise::surmise_pdf(b, s); };
}

}  // namespace

TEST(Histogram, CountsAndDensity) {
  const std::vector<double> xs{1, 1, 3, 3};
  const auto h = histogram(xs, 2, 0.0, 4.0);
  ASSERT_EQ(h.counts.size(), 2u);
  EXPECT_EQ(h.counts[0], 2u);
  EXPECT_EQ(h.counts[1], 2u);
  EXPECT_DOUBLE_EQ(h.density[0], 0.25);
  EXPECT_DOUBLE_EQ(h.density[1], 0.25);
  EXPECT_EQ(h.edges.size(), 3u);
  EXPECT_EQ(h.below + h.above, 0u);
}

TEST(Histogram, OutOfRangeTallies) {
  const std::vector<double> xs{-1, 0.5, 2, 5};
  const auto h = histogram(xs, 4, 0.0, 2.0);
  EXPECT_EQ(h.below, 1u);
  EXPECT_EQ(h.above, 1u);
  EXPECT_EQ(h.in_range, 2u);
  EXPECT_EQ(h.counts.back(), 1u);
}

TEST(Histogram, UsageErrors) {
  const std::vector<double> xs{1.0};
  EXPECT_THROW(histogram(std::vector<double>{}, 2, 0, 1), UsageError);
  EXPECT_THROW(histogram(xs, 0, 0, 1), UsageError);
  EXPECT_THROW(histogram(xs, 2, 1, 1), UsageError);
}

TEST(TabulatedCdf, MatchesSurmiseClosedForm) {
  const auto cdf = cdf_from_pdf(surmise_density(1));
  EXPECT_NEAR(cdf(1.0), 1.0 - std::exp(-std::numbers::pi / 4), 1e-9);
  EXPECT_NEAR(cdf(1.0), 0.5440, 1e-4);
  for (int b : {1, 2, 3, 4}) {
    const auto c = cdf_from_pdf(surmise_density(b));
    for (double s = 0.0; s < 4.0; s += 0.0137) {
      EXPECT_NEAR(c(s), surmise::surmise_cdf(SurmiseBeta(b), s), 1e-9) << b << " " << s;
    }
  }
  EXPECT_EQ(cdf(-1.0), 0.0);
  EXPECT_NEAR(cdf(100.0), 1.0, 1e-12);
}

TEST(TabulatedCdf, Quantile) {
  const auto cdf = cdf_from_pdf(surmise_density(1));
  const double median = std::sqrt(4.0 * std::log(2.0) / std::numbers::pi);
  EXPECT_NEAR(cdf.quantile(0.5), median, 1e-8);
  EXPECT_THROW(cdf.quantile(1.5), DomainError);
}

TEST(TabulatedCdf, Monotone) {
  const auto cdf = cdf_from_pdf(
      [](double r) { return transition::pdf_normalized(TransitionKind::GueToGinibre, r, Alpha(0.5)); });
  double prev = 0.0;
  for (double s = 0.0; s < 10.0; s += 0.001) {
    const double v = cdf(s);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(TabulatedCdf, RejectsBrokenDensities) {
  EXPECT_THROW(cdf_from_pdf([](double) { return 1.0; }), IntegrityError);
  EXPECT_THROW(cdf_from_pdf([](double s) { return s < 1.0 ? -0.5 : 0.0; }), IntegrityError);
  EXPECT_THROW(cdf_from_pdf(surmise_density(1), {1.0, 2.0, 1e-4}), UsageError);
}

TEST(Ks, ExactQuantilesGiveHalfStep) {
  const auto cdf = cdf_from_pdf(surmise_density(2));
  std::vector<double> xs;
  const int n = 200;
  for (int i = 0; i < n; ++i) xs.push_back(cdf.quantile((i + 0.5) / n));
  const auto rep = ks_statistic(xs, [&](double s) { return cdf(s); });
  EXPECT_NEAR(rep.statistic, 0.5 / n, 1e-8);
  EXPECT_TRUE(rep.pass);
  EXPECT_NEAR(rep.threshold, 3.0 * 1.6276 / std::sqrt(200.0), 1e-15);
}

TEST(Ks, DetectsMismatch) {
  const auto set = ensemble::run_ensemble(AlphaVec(0, 0, 0), 100000, 1, ensemble::Method::Formula);
  const auto scaled = unit_mean_scaled(set.spacings, MeanSource::Empirical);
  const auto goe = cdf_from_pdf(surmise_density(1));
  const auto gse = cdf_from_pdf(surmise_density(4));
  const auto ok = ks_statistic(scaled, [&](double s) { return goe(s); });
  const auto bad = ks_statistic(scaled, [&](double s) { return gse(s); });
  EXPECT_TRUE(ok.pass);
  EXPECT_GE(bad.statistic, 0.1);
  EXPECT_FALSE(bad.pass);
  EXPECT_THROW(ks_statistic(std::vector<double>{}, [](double) { return 0.0; }), UsageError);
}

TEST(Moments, SampleStatistics) {
  const std::vector<double> xs{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(sample_mean(xs), 2.5);
  EXPECT_NEAR(sample_stddev(xs), std::sqrt(5.0 / 3.0), 1e-15);
  const auto a = unit_mean_scaled(xs, MeanSource::Analytic, 2.0);
  EXPECT_DOUBLE_EQ(a[3], 2.0);
  const auto e = unit_mean_scaled(xs, MeanSource::Empirical);
  EXPECT_DOUBLE_EQ(sample_mean(e), 1.0);
  EXPECT_THROW(unit_mean_scaled(xs, MeanSource::Analytic, 0.0), DomainError);
}

TEST(Moments, UnitMeanScalingIsScaleInvariant) {
  std::vector<double> xs{0.3, 1.1, 2.7, 0.9};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(7.5 * x);
  const auto a = unit_mean_scaled(xs, MeanSource::Empirical);
  const auto b = unit_mean_scaled(ys, MeanSource::Empirical);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-15);
}

TEST(Moments, AuditSurmises) {
  for (int b : {1, 2, 3, 4}) {
    const auto m = moment_audit(surmise_density(b));
    EXPECT_NEAR(m.norm, 1.0, 1e-10);
    EXPECT_NEAR(m.mean, 1.0, 1e-10);
  }
  EXPECT_THROW(moment_audit([](double s) { return 2.0 * std::exp(-s); }), IntegrityError);
}

TEST(Trapezoid, Linear) {
  const std::vector<double> x{0, 1, 2}, y{0, 1, 2};
  EXPECT_DOUBLE_EQ(trapezoid(x, y), 2.0);
}
