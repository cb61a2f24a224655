#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "faultline/algebraic.hpp"
#include "faultline/errors.hpp"

using faultline::AlgebraicNumber;
using faultline::NumberField;
using faultline::Poly;

namespace {

class QLambda : public ::testing::Test {
 protected:
  faultline::FieldPtr field = NumberField::largest_real_root_of(Poly::from_ints({-3, -1, 1}));
  AlgebraicNumber L = AlgebraicNumber::generator(field);
  AlgebraicNumber q(long num, long den = 1) const { return AlgebraicNumber::rational(field, mpq_class(num, den)); }
  AlgebraicNumber random(std::mt19937& rng) const {
    std::uniform_int_distribution<long> d(-20, 20), den(1, 7);
    return AlgebraicNumber(field, {mpq_class(d(rng), den(rng)), mpq_class(d(rng), den(rng))});
  }
};

}  // namespace

TEST_F(QLambda, GeneratorSatisfiesItsEquation) {
  EXPECT_EQ(L * L, L + q(3));
  EXPECT_EQ(L * (L - q(1)), q(3));
  EXPECT_TRUE((L - L).is_zero());
  EXPECT_NEAR(L.to_double(), (1 + std::sqrt(13.0)) / 2, 1e-12);
}

TEST_F(QLambda, DivisionInvertsMultiplication) {
  AlgebraicNumber x = L * L - q(1, 2);
  EXPECT_EQ((x / L) * L, x);
  EXPECT_EQ(L.inverse() * L, q(1));
  EXPECT_THROW(L / q(0), std::domain_error);
}

TEST_F(QLambda, CompareIsExact) {
  EXPECT_EQ(compare(L, q(2)), std::strong_ordering::greater);
  EXPECT_EQ(compare(L, L), std::strong_ordering::equal);
  EXPECT_EQ(compare(L * L - L, q(3)), std::strong_ordering::equal);
  EXPECT_EQ(compare(L, q(2303, 1000)), std::strong_ordering::less);
}

TEST_F(QLambda, ModReduceExamples) {
  EXPECT_EQ(mod_reduce(L, q(3)), L);
  EXPECT_TRUE(mod_reduce(q(3), q(3)).is_zero());
  EXPECT_EQ(mod_reduce(q(2) * L, q(3)), q(2) * L - q(3));
  EXPECT_NEAR(mod_reduce(q(2) * L, q(3)).to_double(), 1.6056, 1e-4);
  EXPECT_THROW(mod_reduce(L, q(0)), std::domain_error);
}

TEST_F(QLambda, RingAxiomsOnRandomElements) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    AlgebraicNumber a = random(rng), b = random(rng), c = random(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, q(0));
  }
}

TEST_F(QLambda, CompareAgreesWithFloatingPoint) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    AlgebraicNumber a = random(rng), b = random(rng);
    double da = a.to_double(), db = b.to_double();
    if (std::fabs(da - db) < 1e-12) continue;
    EXPECT_EQ(compare(a, b) < 0, da < db);
  }
}

TEST_F(QLambda, ModReduceLandsInFundamentalInterval) {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    AlgebraicNumber a = random(rng);
    AlgebraicNumber m = L * L - L;  // exactly 3
    AlgebraicNumber r = mod_reduce(a, m);
    EXPECT_GE(r.sign(), 0);
    EXPECT_TRUE(compare(r, m) < 0);
    AlgebraicNumber k = (a - r) / m;
    ASSERT_TRUE(k.is_rational());
    EXPECT_EQ(k.rational_value().get_den(), 1);
  }
}

TEST_F(QLambda, MixingFieldsIsRejected) {
  auto other = NumberField::largest_real_root_of(Poly::from_ints({-2, 0, 1}));
  EXPECT_THROW(L + AlgebraicNumber::generator(other), std::invalid_argument);
}

TEST(NumberField, ReducesToTheFactorCarryingTheLargestRoot) {
  // (x - 2)(x + 1): the largest root is rational.
  auto f = NumberField::largest_real_root_of(Poly::from_ints({-2, -1, 1}));
  EXPECT_EQ(f->degree(), 1);
  EXPECT_EQ(AlgebraicNumber::generator(f), AlgebraicNumber::rational(f, 2));
  EXPECT_THROW(NumberField::largest_real_root_of(Poly::from_ints({1, 0, 1})), faultline::HypothesisError);
}
