#include <gtest/gtest.h>

#include <random>

#include "faultline/errors.hpp"
#include "faultline/substitution.hpp"
#include "oracles.hpp"

using faultline::Substitution;
using faultline::Word;

namespace {

Substitution sigma1() { return Substitution::from_strings({"a", "b"}, {"ba", "aaa"}, "sigma1"); }
Substitution sigma2() { return Substitution::from_strings({"a", "b"}, {"ab", "aaa"}, "sigma2"); }
Substitution period_doubling() { return Substitution::from_strings({"0", "1"}, {"01", "00"}, "rho"); }

std::string text(const Substitution& s, const Word& w) { return s.alphabet().format(w); }
Word word(const Substitution& s, const std::string& t) { return s.alphabet().parse(t); }

}  // namespace

TEST(Alphabet, ParsesAndFormats) {
  faultline::Alphabet greek({"alpha", "beta", "gamma"});
  EXPECT_EQ(greek.parse("alpha gamma"), (Word{0, 2}));
  EXPECT_EQ(greek.parse("alphagamma"), (Word{0, 2}));
  EXPECT_EQ(greek.format({1, 2}), "beta gamma");
  EXPECT_THROW(greek.id("delta"), faultline::ValidationError);
  EXPECT_THROW(faultline::Alphabet({"a", "a"}), faultline::ValidationError);
}

TEST(Substitution, ApplyConcatenatesImages) {
  Substitution s = sigma1();
  EXPECT_EQ(text(s, faultline::apply(s, word(s, "a"))), "ba");
  EXPECT_TRUE(faultline::apply(s, Word{}).empty());
  EXPECT_EQ(text(s, faultline::apply(s, word(s, "ba"))), "aaaba");
  EXPECT_THROW(faultline::apply(s, Word{5}), faultline::ValidationError);
}

TEST(Substitution, IterateMatchesStringRewriting) {
  Substitution s = sigma2();
  EXPECT_EQ(text(s, faultline::iterate(s, word(s, "a"), 0)), "a");
  EXPECT_EQ(text(sigma1(), faultline::iterate(sigma1(), {0}, 2)), "aaaba");
  for (unsigned k = 0; k <= 8; ++k)
    EXPECT_EQ(text(s, faultline::iterate(s, {0}, k)), oracle::rewrite({{'a', "ab"}, {'b', "aaa"}}, "a", k));
}

TEST(Substitution, IterateRespectsTheWordCap) {
  EXPECT_THROW(faultline::iterate(sigma1(), {0}, 20, 1000), faultline::ResourceError);
}

TEST(Substitution, RejectsMalformedRules) {
  EXPECT_THROW(Substitution::from_strings({"a", "b"}, {"ab", ""}), faultline::ValidationError);
  EXPECT_THROW(Substitution::from_strings({"a", "b"}, {"ab", "c"}), faultline::ValidationError);
}

TEST(Substitution, Abelianization) {
  EXPECT_EQ(faultline::abelianization(sigma1()), (faultline::IntMatrix{{1, 3}, {1, 0}}));
  EXPECT_EQ(faultline::abelianization(Substitution::from_strings({"a", "b"}, {"a", "b"})),
            faultline::IntMatrix::identity(2));
  EXPECT_EQ(faultline::abelianization(period_doubling()), (faultline::IntMatrix{{1, 2}, {1, 0}}));
}

TEST(Substitution, CountsTransformByTheMatrix) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Substitution s = oracle::random_primitive(rng, 3, 4);
    std::uniform_int_distribution<faultline::LetterId> pick(0, 2);
    Word w;
    for (int i = 0; i < 12; ++i) w.push_back(pick(rng));
    auto before = faultline::letter_counts(w, 3);
    auto after = faultline::letter_counts(faultline::apply(s, w), 3);
    EXPECT_EQ(faultline::abelianization(s).apply(before), after);
  }
}

TEST(Substitution, IterationComposes) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    Substitution s = oracle::random_primitive(rng, 2, 3);
    Word seed{0, 1};
    EXPECT_EQ(faultline::iterate(s, seed, 5), faultline::iterate(s, faultline::iterate(s, seed, 2), 3));
  }
}

TEST(LegalWords, MatchFactorsOfLongIterates) {
  for (const auto& [s, rules] : std::vector<std::pair<Substitution, std::map<char, std::string>>>{
           {period_doubling(), {{'0', "01"}, {'1', "00"}}}, {sigma1(), {{'a', "ba"}, {'b', "aaa"}}}}) {
    for (size_t n = 1; n <= 4; ++n) {
      std::set<std::string> expected;
      for (const auto& [seed, img] : rules) {
        std::string w = oracle::rewrite(rules, std::string(1, seed), 12);
        for (size_t i = 0; i + n <= w.size(); ++i) expected.insert(w.substr(i, n));
      }
      std::set<std::string> got;
      for (const auto& w : faultline::legal_words(s, n)) got.insert(text(s, w));
      EXPECT_EQ(got, expected) << s.name() << " n=" << n;
    }
  }
  auto pairs = faultline::legal_words(period_doubling(), 2);
  EXPECT_EQ(pairs.size(), 3u);
  EXPECT_FALSE(pairs.count({1, 1}));
}

TEST(ShiftConjugacy, FindsTheShortestShift) {
  auto u = faultline::shift_conjugacy(sigma1(), sigma2());
  ASSERT_TRUE(u);
  EXPECT_EQ(text(sigma1(), *u), "a");
  auto e = faultline::shift_conjugacy(sigma1(), sigma1());
  ASSERT_TRUE(e);
  EXPECT_TRUE(e->empty());
  // theta1(x) = w_x a and theta2(x) = a w_x.
  Substitution t1 = Substitution::from_strings({"a", "b"}, {"bba", "aba"});
  Substitution t2 = Substitution::from_strings({"a", "b"}, {"abb", "aab"});
  auto t = faultline::shift_conjugacy(t1, t2);
  ASSERT_TRUE(t);
  EXPECT_EQ(text(t1, *t), "a");
}

TEST(ShiftConjugacy, ResultSatisfiesTheIdentity) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Substitution s = oracle::random_primitive(rng, 2, 4);
    Substitution r = oracle::shuffled(s, rng);
    auto u = faultline::shift_conjugacy(s, r);
    if (!u) continue;
    for (faultline::LetterId x = 0; x < 2; ++x) {
      Word lhs = r.image(x), rhs = *u;
      lhs.insert(lhs.end(), u->begin(), u->end());
      rhs.insert(rhs.end(), s.image(x).begin(), s.image(x).end());
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(ShiftConjugacy, MismatchedLengthsAreAHypothesisError) {
  Substitution other = Substitution::from_strings({"a", "b"}, {"ab", "aa"});
  EXPECT_THROW(faultline::shift_conjugacy(sigma1(), other), faultline::HypothesisError);
  // Equal lengths but different letter counts: no conjugating word.
  Substitution counts = Substitution::from_strings({"a", "b"}, {"ab", "aab"});
  EXPECT_FALSE(faultline::shift_conjugacy(sigma1(), counts));
}
