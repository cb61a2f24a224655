#include <gtest/gtest.h>

#include <random>

#include "faultline/errors.hpp"
#include "faultline/fault.hpp"
#include "oracles.hpp"

using faultline::AlgebraicNumber;
using faultline::BoundaryKind;
using faultline::Substitution;

namespace {

Substitution sigma1() { return Substitution::from_strings({"a", "b"}, {"ba", "aaa"}, "sigma1"); }
Substitution sigma2() { return Substitution::from_strings({"a", "b"}, {"ab", "aaa"}, "sigma2"); }

std::string text(const faultline::BoundaryTrace& t, const faultline::Word& w) { return t.alphabet.format(w); }

AlgebraicNumber width(const faultline::BoundaryTrace& t, const faultline::Word& w) {
  AlgebraicNumber sum = AlgebraicNumber::rational(t.lengths.front().field(), 0);
  for (auto x : w) sum = sum + t.lengths[x];
  return sum;
}

}  // namespace

TEST(BoundaryTrace, AlignedRowIterationWords) {
  auto t = faultline::boundary_trace(sigma1(), sigma2(), 0, 4);
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"ba", "ab"},
      {"aaaba", "abaaa"},
      {"bababaaaaba", "abaaaababab"},
      {"aaabaaaabaaaababababaaaaba", "abaaaababababaaaabaaaabaaa"},
  };
  ASSERT_EQ(t.rounds.size(), 4u);
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(text(t, t.rounds[i].top), expected[i].first);
    EXPECT_EQ(text(t, t.rounds[i].bottom), expected[i].second);
  }
  EXPECT_EQ(t.rounds[3].top.size(), 26u);
}

TEST(BoundaryTrace, IdenticalRowsHaveNoDiscrepancy) {
  auto t = faultline::boundary_trace(sigma1(), sigma1(), 0, 6);
  for (const auto& r : t.rounds) {
    for (long d : r.prefix_discrepancies) EXPECT_EQ(d, 0);
    ASSERT_EQ(r.offsets.size(), 1u);
    EXPECT_TRUE(r.offsets.front().is_zero());
  }
  EXPECT_EQ(faultline::discrepancy_growth(t).hi, 0);
  auto st = faultline::offset_statistics(t);
  EXPECT_EQ(st.distinct_count, 1u);
  EXPECT_FALSE(st.min_gap);
}

TEST(BoundaryTrace, RowsSpanTheSameExactWidth) {
  auto t = faultline::boundary_trace(sigma1(), sigma2(), 1, 8);
  AlgebraicNumber lambda = t.lengths[0];  // the a tile has width lambda
  AlgebraicNumber expected = t.lengths[1];
  for (const auto& r : t.rounds) {
    expected = lambda * expected;
    EXPECT_EQ(width(t, r.top), expected);
    EXPECT_EQ(width(t, r.bottom), expected);
  }
}

TEST(BoundaryTrace, DiscrepancyGrowsLikeTheSecondEigenvalue) {
  auto t = faultline::boundary_trace(sigma1(), sigma2(), 0, 12);
  auto g = faultline::discrepancy_growth(t);
  const double target = (std::sqrt(13.0) - 1) / 2;  // |1 - lambda|
  EXPECT_LE(g.lo.get_d(), target * 1.05);
  EXPECT_GE(g.hi.get_d(), target * 0.95);
}

TEST(BoundaryTrace, OffsetsBecomeDenser) {
  auto t = faultline::boundary_trace(sigma1(), sigma2(), 0, 10);
  for (size_t k = 4; k < 10; ++k)
    EXPECT_LT(faultline::offset_statistics(t, k).distinct_count, faultline::offset_statistics(t, k + 1).distinct_count);
  auto early = faultline::offset_statistics(t, 4), late = faultline::offset_statistics(t, 10);
  ASSERT_TRUE(early.min_gap && late.min_gap);
  EXPECT_TRUE(compare(*late.min_gap, *early.min_gap) < 0);
}

TEST(BoundaryTrace, OffsetsIncludeLambdaAndZero) {
  auto t = faultline::boundary_trace(sigma1(), sigma2(), 0, 3);
  const AlgebraicNumber lambda = t.lengths[0];
  auto has = [&](size_t round, const AlgebraicNumber& x) {
    const auto& offs = t.rounds[round - 1].offsets;
    return std::any_of(offs.begin(), offs.end(), [&](const AlgebraicNumber& o) { return o == x; });
  };
  const auto q = [&](long v) { return AlgebraicNumber::rational(lambda.field(), v); };
  EXPECT_TRUE(has(2, lambda));
  EXPECT_TRUE(has(3, q(0)));
  EXPECT_TRUE(has(3, q(3) - lambda));
  for (const auto& r : t.rounds)
    for (const auto& o : r.offsets) {
      EXPECT_GE(o.sign(), 0);
      EXPECT_TRUE(compare(o, t.modulus) < 0);
    }
}

TEST(BoundaryTrace, MatchesTheNaiveScanner) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Substitution s = oracle::random_primitive(rng, 2 + trial % 2, 4);
    Substitution r = oracle::shuffled(s, rng);
    faultline::TraceOptions opts;
    opts.tracked = static_cast<faultline::LetterId>(trial % s.size());
    auto t = faultline::boundary_trace(s, r, static_cast<faultline::LetterId>(trial % s.size()), 3, opts);
    for (const auto& round : t.rounds)
      ASSERT_EQ(round.prefix_discrepancies, oracle::naive_discrepancies(round.top, round.bottom, t.lengths, opts.tracked))
          << "trial " << trial;
  }
}

TEST(BoundaryTrace, RejectsMismatchedRows) {
  Substitution other = Substitution::from_strings({"a", "b"}, {"ab", "aab"});
  EXPECT_THROW(faultline::boundary_trace(sigma1(), other, 0, 3), faultline::HypothesisError);
  Substitution counts = Substitution::from_strings({"a", "b"}, {"bb", "aaa"});
  EXPECT_THROW(faultline::boundary_trace(sigma1(), counts, 0, 3), faultline::HypothesisError);
}

TEST(BoundaryTrace, PisotRowsStayBounded) {
  Substitution f1 = Substitution::from_strings({"a", "b"}, {"ab", "a"});
  Substitution f2 = Substitution::from_strings({"a", "b"}, {"ba", "a"});
  auto t = faultline::boundary_trace(f1, f2, 0, 12);
  EXPECT_LT(faultline::discrepancy_growth(t).hi, mpq_class(105, 100));
  EXPECT_EQ(faultline::classify_boundary(f1, f2).kind, BoundaryKind::Undetermined);
}

TEST(OffsetRecurrence, MatchesDirectExpansion) {
  auto field = faultline::NumberField::largest_real_root_of(faultline::Poly::from_ints({-3, -1, 1}));
  AlgebraicNumber L = AlgebraicNumber::generator(field);
  auto o = faultline::offset_recurrence(L, 10);
  ASSERT_EQ(o.size(), 10u);
  EXPECT_EQ(o[0], L);
  EXPECT_EQ(o[1], AlgebraicNumber::rational(field, 3));
  for (size_t k = 1; k <= 10; ++k) {
    // L^k - L^(k-1) - ... - L
    AlgebraicNumber power = L, sum = AlgebraicNumber::rational(field, 0);
    for (size_t j = 1; j < k; ++j) {
      sum = sum + power;
      power = power * L;
    }
    EXPECT_EQ(o[k - 1], power - sum) << k;
  }
}

TEST(ClassifyBoundary, QuadraticPairIsARegularFault) {
  auto c = faultline::classify_boundary(sigma1(), sigma2());
  EXPECT_EQ(c.kind, BoundaryKind::RegularFault);
  EXPECT_EQ(c.spectral, faultline::SpectralKind::NonPisotExpanding);
  EXPECT_EQ(faultline::classify_boundary(sigma1(), sigma1()).kind, BoundaryKind::Rigid);
}

TEST(ClassifyBoundary, IdenticalRowsAreRigid) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    Substitution s = oracle::random_primitive(rng, 2 + trial % 2, 3);
    EXPECT_EQ(faultline::classify_boundary(s, s, 8).kind, BoundaryKind::Rigid);
  }
}

TEST(ClassifyBoundary, LargerAlphabetsNeverClaimARegularFault) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    Substitution s = oracle::random_primitive(rng, 3, 3);
    Substitution r = oracle::shuffled(s, rng);
    EXPECT_NE(faultline::classify_boundary(s, r, 8).kind, BoundaryKind::RegularFault);
  }
}
