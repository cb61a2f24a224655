#include <gtest/gtest.h>

#include <random>

#include "faultline/poly.hpp"

using faultline::Poly;

namespace {

Poly P(std::vector<long> low_first) { return Poly::from_ints(low_first); }

Poly random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<long> d(-6, 6);
  std::vector<long> c(degree + 1);
  for (auto& x : c) x = d(rng);
  c.back() = 1;
  return P(c);
}

}  // namespace

TEST(Poly, FormatsCanonically) {
  EXPECT_EQ(P({-3, -1, 1}).to_string(), "x^2-x-3");
  EXPECT_EQ(P({0}).to_string(), "0");
  EXPECT_EQ(Poly({mpq_class(-1, 2), 1, 0, 2}).to_string(), "2*x^3+x-1/2");
}

TEST(Poly, DivisionRemainderIdentity) {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 2);
    auto [q, r] = Poly::divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(Poly::divmod(P({1, 1}), Poly()), std::domain_error);
}

TEST(Poly, ExtendedGcdIsBezout) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly common = random_poly(rng, 1);
    Poly a = common * random_poly(rng, 3), b = common * random_poly(rng, 2);
    auto [g, s, t] = Poly::xgcd(a, b);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_TRUE(Poly::divmod(a, g).second.is_zero());
    EXPECT_TRUE(Poly::divmod(b, g).second.is_zero());
  }
}

TEST(Poly, SquarefreePart) {
  Poly p = P({-1, 1}) * P({-1, 1}) * P({2, 1});  // (x-1)^2 (x+2)
  EXPECT_EQ(p.squarefree(), P({-2, 1, 1}));
  EXPECT_EQ(P({-3, -1, 1}).squarefree(), P({-3, -1, 1}));
}

TEST(Poly, SturmCountsRealRoots) {
  faultline::SturmChain c(P({-3, -1, 1}));  // roots near -1.30 and 2.30
  EXPECT_EQ(c.count_roots(-10, 10), 2);
  EXPECT_EQ(c.count_roots(0, 10), 1);
  EXPECT_EQ(c.count_roots(mpq_class(23, 10), mpq_class(231, 100)), 1);
  faultline::SturmChain d(P({1, 0, 1}));
  EXPECT_EQ(d.count_roots(-100, 100), 0);
}

TEST(Poly, RootBoundDominatesRoots) {
  Poly p = P({-3, -1, 1});
  EXPECT_GT(faultline::root_bound(p), mpq_class(2303, 1000));
}
