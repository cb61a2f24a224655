#include <gtest/gtest.h>

#include <filesystem>

#include "faultline/document.hpp"
#include "faultline/errors.hpp"
#include "faultline/selftest.hpp"

namespace {

const char* kMinimal = R"({
  "alphabets": {"h": ["a", "b"]},
  "substitutions": {"fib": {"alphabet": "h", "rules": {"a": "ab", "b": ["a"]}}}
})";

std::string with(const std::string& from, const std::string& to) {
  std::string s = kMinimal;
  auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST(Document, BundledFilesMatchTheEmbeddedCopies) {
  for (const auto& b : faultline::bundled_documents()) {
    auto path = std::filesystem::path(FAULTLINE_DATA_DIR) / (b.name + ".json");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(faultline::load_document(path.string()), faultline::parse_document(b.json)) << b.name;
  }
}

TEST(Document, RoundTrip) {
  for (const auto& b : faultline::bundled_documents()) {
    auto doc = faultline::parse_document(b.json);
    auto text = faultline::serialize_document(doc);
    EXPECT_EQ(faultline::parse_document(text), doc) << b.name;
    EXPECT_EQ(faultline::serialize_document(faultline::parse_document(text)), text) << b.name;
  }
}

TEST(Document, MinimalSubstitution) {
  auto doc = faultline::parse_document(kMinimal);
  EXPECT_FALSE(doc.dpv);
  auto s = faultline::build_substitution(doc, "fib");
  EXPECT_EQ(s.alphabet().format(s.image(0)), "ab");
  EXPECT_EQ(s.alphabet().format(s.image(1)), "a");
  EXPECT_THROW(faultline::build_substitution(doc, "missing"), faultline::ValidationError);
  EXPECT_THROW(faultline::build_dpv(doc), faultline::ValidationError);
}

TEST(Document, Rejections) {
  using faultline::ValidationError;
  EXPECT_THROW(faultline::parse_document("{"), ValidationError);
  EXPECT_THROW(faultline::parse_document("[]"), ValidationError);
  EXPECT_THROW(faultline::parse_document(with("\"alphabets\"", "\"alphabet\"")), ValidationError);
  EXPECT_THROW(faultline::parse_document(with("\"rules\"", "\"extra\": 1, \"rules\"")), ValidationError);
  EXPECT_THROW(faultline::parse_document(with("\"ab\"", "\"ac\"")), ValidationError);
  EXPECT_THROW(faultline::parse_document(with("[\"a\"]}", "[]}")), ValidationError);
  EXPECT_THROW(faultline::parse_document(with("\"h\": [\"a\", \"b\"]", "\"h\": [\"a\", \"a\"]")), ValidationError);
  EXPECT_THROW(faultline::parse_document(with("\"alphabet\": \"h\"", "\"alphabet\": \"g\"")), ValidationError);
  EXPECT_THROW(faultline::parse_document(std::string(kMinimal).insert(1, "\"options\": {\"rounds\": 3},")),
               ValidationError);
  EXPECT_NO_THROW(faultline::parse_document(std::string(kMinimal).insert(1, "\"options\": {\"rounds\": 4},")));
  EXPECT_THROW(faultline::load_document("/nonexistent/doc.json"), ValidationError);
}

TEST(Document, DpvRejections) {
  auto text = faultline::bundled_document("simple_dpv").json;
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = text;
    auto pos = s.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return s.replace(pos, from.size(), to);
  };
  using faultline::ValidationError;
  EXPECT_THROW(faultline::parse_document(replace("[\"v\", \"b\"]", "[\"v\", \"a\"]")), ValidationError);
  EXPECT_THROW(faultline::parse_document(replace("[[\"A\", \"B\"], [\"B\", \"A\"]]", "[[\"A\", \"B\"]]")),
               ValidationError);
  EXPECT_THROW(faultline::parse_document(replace("[[\"A\", \"B\"], [\"B\", \"A\"]]", "[[\"A\", \"C\"], [\"B\", \"A\"]]")),
               ValidationError);
}

TEST(Document, AnalysisOptions) {
  auto doc = faultline::parse_document(faultline::bundled_document("simple_dpv").json);
  EXPECT_EQ(faultline::analysis_options(doc).rounds, 12u);
}
