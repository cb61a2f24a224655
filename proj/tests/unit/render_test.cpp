#include <gtest/gtest.h>

#include "faultline/document.hpp"
#include "faultline/errors.hpp"
#include "faultline/render.hpp"
#include "faultline/selftest.hpp"
#include "oracles.hpp"

using faultline::AlgebraicNumber;

namespace {

faultline::DPVSubstitution bundled(const std::string& name) {
  return faultline::build_dpv(faultline::parse_document(faultline::bundled_document(name).json));
}

size_t count(const std::string& text, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Render, SeedOnly) {
  auto d = bundled("simple_dpv");
  auto p = faultline::generate_patch(d, d.tile_index("A"), 0);
  ASSERT_EQ(p.tiles.size(), 1u);
  EXPECT_TRUE(p.tiles[0].x.is_zero());
  EXPECT_TRUE(p.width == p.tiles[0].width);
  EXPECT_TRUE(faultline::verify_patch(p));
}

TEST(Render, OneRoundFromA) {
  auto d = bundled("simple_dpv");
  const size_t a = d.tile_index("A"), b = d.tile_index("B");
  auto p = faultline::generate_patch(d, a, 1);
  ASSERT_EQ(p.tiles.size(), 4u);
  EXPECT_TRUE(faultline::verify_patch(p));

  std::vector<const faultline::PlacedTile*> bottom, top;
  for (const auto& t : p.tiles) (t.y.is_zero() ? bottom : top).push_back(&t);
  ASSERT_EQ(bottom.size(), 2u);
  ASSERT_EQ(top.size(), 2u);
  auto by_x = [](auto* l, auto* r) { return l->x < r->x; };
  std::sort(bottom.begin(), bottom.end(), by_x);
  std::sort(top.begin(), top.end(), by_x);
  EXPECT_EQ(bottom[0]->tile, b);
  EXPECT_EQ(bottom[1]->tile, a);
  EXPECT_EQ(top[0]->tile, a);
  EXPECT_EQ(top[1]->tile, b);

  // W = lambda * wA with lambda^2 = lambda + 3, so W^2 = W wA + 3 wA^2.
  const AlgebraicNumber& wa = bottom[1]->width;
  const AlgebraicNumber& wb = bottom[0]->width;
  EXPECT_TRUE(p.width == wa + wb);
  EXPECT_TRUE(p.width * p.width == p.width * wa + mpq_class(3) * wa * wa);
}

TEST(Render, CountsFollowTheTileMatrix) {
  for (const auto& name : {"simple_dpv", "period_doubling_dpv", "six_tile_dpv"}) {
    auto d = bundled(name);
    const auto m = d.count_matrix();
    for (size_t seed = 0; seed < d.tiles().size(); ++seed)
      for (unsigned k = 0; k <= 5; ++k) {
        auto p = faultline::generate_patch(d, seed, k);
        EXPECT_EQ(mpz_class(p.tiles.size()), oracle::supertile_sizes(m, k)[seed]) << name << " k=" << k;
        EXPECT_TRUE(faultline::verify_patch(p)) << name << " k=" << k;
      }
  }
}

TEST(Render, TileCapRaisesResourceError) {
  auto d = bundled("simple_dpv");
  EXPECT_THROW(faultline::generate_patch(d, 0, 6, 100), faultline::ResourceError);
  EXPECT_THROW(faultline::generate_patch(d, 5, 1), faultline::ValidationError);
}

TEST(Render, VerifyRejectsAGap) {
  auto d = bundled("simple_dpv");
  auto p = faultline::generate_patch(d, 0, 2);
  p.tiles.pop_back();
  EXPECT_FALSE(faultline::verify_patch(p));
}

TEST(Svg, RectanglesAndFills) {
  auto d = bundled("simple_dpv");
  auto svg0 = faultline::emit_svg(faultline::generate_patch(d, 0, 0));
  EXPECT_EQ(count(svg0, "<rect class=\"tile\""), 1u);
  faultline::SvgOptions o;
  o.colors = {{"A", "#111111"}, {"B", "#222222"}};
  auto svg1 = faultline::emit_svg(faultline::generate_patch(d, 0, 1), o);
  EXPECT_EQ(count(svg1, "<rect class=\"tile\""), 4u);
  EXPECT_EQ(count(svg1, "fill=\"#111111\""), 2u);
  EXPECT_EQ(count(svg1, "fill=\"#222222\""), 2u);
}

TEST(Svg, Overlays) {
  auto d = bundled("simple_dpv");
  faultline::SvgOptions o;
  o.overlay_order = 1;
  EXPECT_EQ(count(faultline::emit_svg(faultline::generate_patch(d, 0, 2), o), "<line class=\"overlay\""), 3u);
  faultline::SvgOptions f;
  f.fault_overlay = true;
  EXPECT_EQ(count(faultline::emit_svg(faultline::generate_patch(d, 0, 1), f), "<line class=\"fault\""), 1u);
}

TEST(Svg, Deterministic) {
  auto d = bundled("six_tile_dpv");
  faultline::SvgOptions o;
  o.overlay_order = 2;
  o.fault_overlay = true;
  EXPECT_EQ(faultline::emit_svg(faultline::generate_patch(d, 1, 3), o),
            faultline::emit_svg(faultline::generate_patch(d, 1, 3), o));
}

TEST(Svg, DecimalString) {
  auto q = faultline::NumberField::rationals();
  EXPECT_EQ(faultline::decimal_string(AlgebraicNumber::rational(q, mpq_class(3, 2))), "1.5");
  EXPECT_EQ(faultline::decimal_string(AlgebraicNumber::rational(q, mpq_class(-1, 3))), "-0.333333333");
  EXPECT_EQ(faultline::decimal_string(AlgebraicNumber::rational(q, 2)), "2");
}
