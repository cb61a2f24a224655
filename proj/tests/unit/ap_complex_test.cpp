#include <gtest/gtest.h>

#include <random>

#include "faultline/ap_complex.hpp"
#include "faultline/errors.hpp"
#include "oracles.hpp"

using faultline::APComplex;
using faultline::IntMatrix;
using faultline::Substitution;

namespace {

Substitution period_doubling() { return Substitution::from_strings({"0", "1"}, {"01", "00"}, "rho"); }
Substitution sigma1() { return Substitution::from_strings({"a", "b"}, {"ba", "aaa"}, "sigma1"); }
Substitution cyclic() {
  return Substitution::from_strings({"alpha", "beta", "gamma"}, {"alpha beta", "gamma alpha", "beta gamma"}, "rho");
}

std::string image_text(const APComplex& c, size_t e) {
  std::string out;
  for (auto x : c.collared.image(static_cast<faultline::LetterId>(e))) out += (out.empty() ? "" : " ") + c.edge_name(x);
  return out;
}

size_t edge_named(const APComplex& c, const std::string& name) {
  for (size_t e = 0; e < c.edges.size(); ++e)
    if (c.edge_name(e) == name) return e;
  ADD_FAILURE() << "no edge " << name;
  return 0;
}

}  // namespace

TEST(BorderForcing, PeriodDoublingForcesTheRight) {
  auto f = faultline::border_forcing(period_doubling());
  EXPECT_EQ(f.right_forced_in, 1u);
  EXPECT_FALSE(f.left_forced_in);
  auto one = faultline::border_forcing(Substitution::from_strings({"a"}, {"a"}));
  EXPECT_EQ(one.right_forced_in, 1u);
}

TEST(BorderForcing, AgreesWithBruteForceFirstLetters) {
  Substitution s = sigma1();
  std::optional<unsigned> right;
  for (unsigned m = 1; m <= 8 && !right; ++m) {
    auto a = faultline::iterate(s, {0}, m), b = faultline::iterate(s, {1}, m);
    if (a.front() == b.front()) right = m;
  }
  auto f = faultline::border_forcing(s, 8);
  EXPECT_EQ(f.right_forced_in, right);
  EXPECT_FALSE(f.right_forced_in);
  EXPECT_EQ(f.left_forced_in, 1u);  // both images end in a
}

TEST(Collar, PeriodDoublingComplex) {
  APComplex c = faultline::collar(period_doubling());
  EXPECT_TRUE(c.collar_left);
  EXPECT_FALSE(c.collar_right);
  ASSERT_EQ(c.edges.size(), 3u);
  EXPECT_EQ(c.vertex_count, 2u);
  // alpha = (0)1, beta = (0)0, gamma = (1)0.
  EXPECT_EQ(image_text(c, edge_named(c, "(0)1")), "(1)0 (0)0");
  EXPECT_EQ(image_text(c, edge_named(c, "(0)0")), "(1)0 (0)1");
  EXPECT_EQ(image_text(c, edge_named(c, "(1)0")), "(0)0 (0)1");
  EXPECT_EQ(c.vertex_map, (std::vector<size_t>{1, 0}));
  EXPECT_EQ(c.eventual_vertices().size(), 2u);
  EXPECT_EQ(c.edge_matrix.transpose().charpoly(), (faultline::Poly::from_ints({-2, 1}) *
                                                   faultline::Poly::from_ints({1, 1}) *
                                                   faultline::Poly::from_ints({1, 1})));
  EXPECT_EQ(faultline::graph_h1(c).h1_rank, 2u);
}

TEST(Collar, OneLetterLoop) {
  APComplex c = faultline::collar(Substitution::from_strings({"a"}, {"aa"}));
  EXPECT_EQ(c.edges.size(), 1u);
  EXPECT_EQ(c.vertex_count, 1u);
  EXPECT_EQ(c.edge_matrix, (IntMatrix{{2}}));
  EXPECT_EQ(faultline::graph_h1(c).h1_rank, 1u);
}

TEST(Collar, CyclicVerticalCircle) {
  APComplex c = faultline::collar(cyclic());
  EXPECT_EQ(c.edges.size(), 3u);
  EXPECT_EQ(c.vertex_count, 3u);
  EXPECT_EQ(c.eventual_vertices().size(), 3u);
  EXPECT_EQ(faultline::graph_h1(c).h1_rank, 1u);
}

TEST(Collar, QuadraticHorizontalComplex) {
  APComplex c = faultline::collar(sigma1());
  auto h = faultline::graph_h1(c);
  EXPECT_EQ(h.h1_rank, 2u);
  EXPECT_EQ(h.induced_h1.charpoly().to_string(), "x^2-x-3");
}

TEST(Collar, StructuralProperties) {
  std::mt19937 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Substitution s = oracle::random_primitive(rng, 2 + trial % 2, 3);
    APComplex c;
    try {
      c = faultline::collar(s);
    } catch (const faultline::HypothesisError&) {
      continue;  // one-letter collars do not give a vertex map here
    }
    ++checked;
    auto lengths = s.image_lengths();
    for (size_t e = 0; e < c.edges.size(); ++e) {
      mpz_class sum = 0;
      for (size_t i = 0; i < c.edges.size(); ++i) sum += c.edge_matrix(i, e);
      EXPECT_EQ(sum, lengths[c.edges[e].core]);
    }
    // The projection intertwines the collared and original substitutions.
    faultline::Word w{0};
    for (int k = 0; k < 4; ++k) {
      EXPECT_EQ(c.project(faultline::apply(c.collared, w)), faultline::apply(s, c.project(w)));
      w = faultline::apply(c.collared, w);
    }
    // The vertex dynamics settles on a permutation within |V| steps.
    std::vector<size_t> image(c.vertex_count);
    for (size_t v = 0; v < c.vertex_count; ++v) {
      size_t x = v;
      for (size_t k = 0; k < c.vertex_count; ++k) x = c.vertex_map[x];
      image[v] = x;
    }
    std::set<size_t> eventual(image.begin(), image.end());
    EXPECT_EQ(std::vector<size_t>(eventual.begin(), eventual.end()), c.eventual_vertices());
    auto h = faultline::graph_h1(c);
    EXPECT_EQ(h.h1_rank, c.edges.size() - c.vertex_count + 1);
  }
  EXPECT_GT(checked, 30);
}
