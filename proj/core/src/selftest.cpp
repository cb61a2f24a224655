#include "faultline/selftest.hpp"

#include <json.hpp>

#include "faultline/document.hpp"
#include "faultline/dpv.hpp"
#include "faultline/errors.hpp"

namespace faultline {

namespace {

struct Expected {
  std::string name;
  size_t eventual;
  size_t n;
  std::string h1;
  std::string h2;
  std::string h3;
};

const std::string kMu = "Z[1/L:x^2-x-3]";

const std::vector<Expected>& expected() {
  static const std::vector<Expected> e = {
      {"simple_dpv", 1, 1, "Z[1/2]", kMu + " (x) Z[1/2]", kMu + " (x) " + kMu},
      {"period_doubling_dpv", 2, 2, "Z[1/2] (+) Z", kMu + "^2 (+) " + kMu + " (x) Z[1/2]",
       "(" + kMu + " (x) " + kMu + ")^2"},
      {"six_tile_dpv", 3, 1, "Z[1/2]", kMu + " (x) Z[1/2]", kMu + " (x) " + kMu},
  };
  return e;
}

void check(SelftestCase& c, const std::string& what, const std::string& got, const std::string& want) {
  if (got != want) c.mismatches.push_back(what + ": expected " + want + ", got " + got);
}

}  // namespace

const BundledDocument& bundled_document(const std::string& name) {
  for (const auto& d : bundled_documents())
    if (d.name == name) return d;
  throw ValidationError("no bundled document named '" + name + "'");
}

bool SelftestResult::passed() const {
  for (const auto& c : cases)
    if (!c.passed) return false;
  return !cases.empty();
}

std::string SelftestResult::json() const {
  nlohmann::json out = {{"report", "selftest"}};
  nlohmann::json list = nlohmann::json::array();
  size_t ok = 0;
  for (const auto& c : cases) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"mismatches", c.mismatches}});
    ok += c.passed;
  }
  out["examples"] = list;
  out["summary"] = std::to_string(ok) + "/" + std::to_string(cases.size()) + " examples pass";
  return out.dump(2) + "\n";
}

SelftestResult run_selftest() {
  SelftestResult result;
  for (const auto& want : expected()) {
    SelftestCase c;
    c.name = want.name;
    try {
      InputDocument doc = parse_document(bundled_document(want.name).json);
      if (parse_document(serialize_document(doc)) != doc) c.mismatches.push_back("document does not round-trip");
      DPVSubstitution d = build_dpv(doc);
      CohomologyReport r = cohomology(d, analysis_options(doc));
      check(c, "eventual vertices", std::to_string(r.essential.eventual.size()), std::to_string(want.eventual));
      check(c, "complete", r.complete ? "yes" : "no", "yes");
      if (r.complete) {
        check(c, "n", std::to_string(r.n_values.front()), std::to_string(want.n));
        check(c, "H2", r.h2.front().to_string(), want.h2);
        check(c, "H3", r.h3.front().to_string(), want.h3);
      }
      check(c, "H0", r.h0.to_string(), "Z");
      check(c, "H1", r.h1.to_string(), want.h1);
      check(c, "mu", r.mu.group.expr.to_string(), kMu);
      check(c, "rank identity", r.rank_identity ? "holds" : "fails", "holds");
    } catch (const std::exception& e) {
      c.mismatches.push_back(std::string("error: ") + e.what());
    }
    c.passed = c.mismatches.empty();
    result.cases.push_back(std::move(c));
  }
  return result;
}

}  // namespace faultline
