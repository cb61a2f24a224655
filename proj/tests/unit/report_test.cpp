#include <gtest/gtest.h>

#include <json.hpp>

#include "faultline/errors.hpp"
#include "faultline/report.hpp"
#include "faultline/selftest.hpp"

using nlohmann::json;

namespace {

faultline::InputDocument bundled(const std::string& name) {
  return faultline::parse_document(faultline::bundled_document(name).json);
}

}  // namespace

TEST(Report, CohomologyOfPeriodDoubling) {
  auto r = faultline::cohomology_report(bundled("period_doubling_dpv"));
  EXPECT_FALSE(r.undetermined);
  auto j = json::parse(r.json);
  EXPECT_EQ(j["report"], "cohomology");
  EXPECT_EQ(j["H0"], "Z");
  EXPECT_EQ(j["H1"], "Z[1/2] (+) Z");
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["Hk_above_3"], "0");
  EXPECT_EQ(j["complete"], true);
  EXPECT_EQ(j["rank_identity"], true);
  EXPECT_EQ(j["essential_vertices"]["eventual"].size(), 2u);
}

TEST(Report, ByteIdentical) {
  auto doc = bundled("six_tile_dpv");
  EXPECT_EQ(faultline::cohomology_report(doc).json, faultline::cohomology_report(doc).json);
  EXPECT_EQ(faultline::fault_report(doc).json, faultline::fault_report(doc).json);
  EXPECT_EQ(faultline::analyze_report(doc).json, faultline::analyze_report(doc).json);
}

TEST(Report, AnalyzeListsEverySubstitution) {
  auto j = json::parse(faultline::analyze_report(bundled("simple_dpv")).json);
  ASSERT_EQ(j["substitutions"].size(), 3u);
  bool saw_sigma1 = false;
  for (const auto& s : j["substitutions"]) {
    if (s["name"] != "sigma1") continue;
    saw_sigma1 = true;
    EXPECT_EQ(s["charpoly"], "x^2-x-3");
    EXPECT_EQ(s["primitive"], true);
    EXPECT_EQ(s["spectral"]["class"], "NonPisotExpanding");
    EXPECT_EQ(s["lambda"]["poly"], "x^2-x-3");
  }
  EXPECT_TRUE(saw_sigma1);
  EXPECT_TRUE(j.contains("dpv"));
}

TEST(Report, FaultTableShape) {
  faultline::ReportRequest req;
  req.rounds = 6;
  auto j = json::parse(faultline::fault_report(bundled("simple_dpv"), req).json);
  EXPECT_EQ(j["top"], "sigma1");
  EXPECT_EQ(j["bottom"], "sigma2");
  EXPECT_EQ(j["table"]["rows"].size(), 6u);
  EXPECT_EQ(j["table"]["columns"].size(), 6u);
  EXPECT_EQ(j["classification"]["kind"], "RegularFault");
}

TEST(Report, MuAndAp) {
  auto mu = json::parse(faultline::mu_report(bundled("simple_dpv")).json);
  EXPECT_EQ(mu["report"], "mu");
  auto ap = json::parse(faultline::ap_report(bundled("period_doubling_dpv")).json);
  EXPECT_EQ(ap["d1"]["group"]["expr"], "Z[1/2] (+) Z^2");
  EXPECT_EQ(ap["complex"]["connected"], true);
}

TEST(Report, UnknownSubstitutionIsAValidationError) {
  faultline::ReportRequest req;
  req.subst = "nope";
  EXPECT_THROW(faultline::mu_report(bundled("simple_dpv"), req), faultline::ValidationError);
}

TEST(Report, TextFormatting) {
  faultline::ReportRequest req;
  req.rounds = 5;
  auto text = faultline::format_text(faultline::fault_report(bundled("simple_dpv"), req).json);
  EXPECT_NE(text.find("max_discrepancy"), std::string::npos);
  EXPECT_NE(text.find("RegularFault"), std::string::npos);
  auto coh = faultline::format_text(faultline::cohomology_report(bundled("simple_dpv")).json);
  EXPECT_NE(coh.find("Z[1/2]"), std::string::npos);
}

TEST(Selftest, Passes) {
  auto r = faultline::run_selftest();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases.size(), 3u);
  for (const auto& c : r.cases) EXPECT_TRUE(c.mismatches.empty()) << c.name;
}
