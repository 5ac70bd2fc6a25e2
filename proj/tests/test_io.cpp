#include <gtest/gtest.h>

#include <sstream>

#include "rmtspacing/errors.hpp"
#include "rmtspacing/io.hpp"
#include "rmtspacing/transition.hpp"

using namespace rmtspacing;
using namespace rmtspacing::io;

namespace {

Provenance sample_provenance() {
  Provenance p;
  p.command = "pdf";
  p.seed = 17;
  p.set("grid", "0:1:0.25").set("step", 0.25);
  return p;
}

}  // namespace

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
  const double x = 0.15163266492815836;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(PdfCsv, RoundTrip) {
  const auto table = transition::pdf_table(TransitionKind::GueToGinibre, Alpha(0.5),
                                           transition::Grid{0.0, 1.0, 0.25},
                                           transition::Scale::UnitMeanR);
  std::stringstream ss;
  write_pdf_csv(ss, table, sample_provenance());
  const auto csv = read_csv(ss);
  EXPECT_EQ(csv.get("command"), "pdf");
  EXPECT_EQ(csv.get("seed"), "17");
  EXPECT_EQ(csv.get("kind"), "gue-ginibre");
  EXPECT_EQ(csv.get("alpha"), "0.5");
  EXPECT_EQ(csv.get("z_mode"), "none");
  EXPECT_EQ(csv.get("step"), "0.25");
  EXPECT_FALSE(csv.get("missing").has_value());
  ASSERT_EQ(csv.columns, (std::vector<std::string>{"x", "density"}));
  ASSERT_EQ(csv.rows.size(), table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    EXPECT_EQ(csv.rows[i][0], table.rows[i].x);
    EXPECT_EQ(csv.rows[i][1], table.rows[i].density);
  }
}

TEST(PdfCsv, ByteIdenticalRewrites) {
  const auto table = transition::pdf_table(surmise::SurmiseBeta(3), std::nullopt, transition::Grid{},
                                           transition::Scale::UnitMeanR);
  std::stringstream a, b;
  write_pdf_csv(a, table, sample_provenance());
  write_pdf_csv(b, table, sample_provenance());
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("#kind=surmise-3\n"), std::string::npos);
}

TEST(SpacingsCsv, RoundTrip) {
  ensemble::SpacingSampleSet set;
  set.alpha = AlphaVec(1, 0.3, 0);
  set.seed = 5;
  set.spacings = {0.5, 1.25, 3.0};
  std::stringstream ss;
  write_spacings_csv(ss, set, sample_provenance());
  const auto csv = read_csv(ss);
  EXPECT_EQ(csv.get("alpha_vec"), "1,0.3,0");
  EXPECT_EQ(csv.get("method"), "formula");
  EXPECT_EQ(csv.get("n"), "3");
  ASSERT_EQ(csv.rows.size(), 3u);
  EXPECT_EQ(csv.rows[1][0], 1.25);
}

TEST(ReadCsv, RejectsMalformedInput) {
  std::stringstream bad_meta("#novalue\nx\n1\n");
  EXPECT_THROW(read_csv(bad_meta), UsageError);
  std::stringstream ragged("x,y\n1,2\n3\n");
  EXPECT_THROW(read_csv(ragged), UsageError);
  std::stringstream junk("x\n1.5abc\n");
  EXPECT_THROW(read_csv(junk), UsageError);
}

TEST(ProvenanceJson, FixedKeyOrder) {
  const auto j = to_json(sample_provenance());
  EXPECT_EQ(j.dump(), R"({"command":"pdf","config":{"grid":"0:1:0.25","step":"0.25"},"seed":17,"version":")" +
                          std::string(kVersion) + "\"}");
  Provenance none;
  EXPECT_TRUE(to_json(none)["seed"].is_null());
}

TEST(Coefficients, JsonForms) {
  const auto obj = coefficients_from_json(Json::parse(R"({"coefficients":[1,2.5],"convention":"remapped-y"})"));
  EXPECT_EQ(obj.a, (std::vector<double>{1.0, 2.5}));
  EXPECT_EQ(obj.convention, chebfit::ChebConvention::RemappedY);
  const auto arr = coefficients_from_json(Json::parse("[0.5, -1]"));
  EXPECT_EQ(arr.convention, chebfit::ChebConvention::DirectY);
  EXPECT_EQ(arr.a.size(), 2u);
  const auto back = coefficients_from_json(to_json(obj));
  EXPECT_EQ(back.a, obj.a);
  EXPECT_EQ(back.convention, obj.convention);
  EXPECT_THROW(coefficients_from_json(Json::parse("[]")), UsageError);
  EXPECT_THROW(coefficients_from_json(Json::parse(R"({"a":[1]})")), UsageError);
  EXPECT_THROW(coefficients_from_json(Json::parse(R"(["x"])")), UsageError);
  EXPECT_THROW(parse_convention("sideways"), UsageError);
  EXPECT_THROW(read_coefficients("/nonexistent/coeffs.json"), UsageError);
}
