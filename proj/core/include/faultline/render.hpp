#pragma once

#include <map>
#include <string>
#include <vector>

#include "faultline/algebraic.hpp"
#include "faultline/dpv.hpp"

namespace faultline {

inline constexpr size_t kDefaultMaxTiles = 200'000;

struct PlacedTile {
  size_t tile = 0;
  AlgebraicNumber x;       // left edge, in the horizontal field
  AlgebraicNumber y;       // bottom edge, in the vertical field
  AlgebraicNumber width;
  AlgebraicNumber height;
};

struct Patch {
  std::vector<std::string> tile_names;
  std::vector<PlacedTile> tiles;
  AlgebraicNumber width;
  AlgebraicNumber height;
  unsigned rounds = 0;
  /// band_bounds[m]: interior y values separating order-m supertile bands.
  std::vector<std::vector<AlgebraicNumber>> band_bounds;
};

Patch generate_patch(const DPVSubstitution& d, size_t seed_tile, unsigned k, size_t max_tiles = kDefaultMaxTiles);

/// Exact check that every row is covered without gaps or overlaps.
bool verify_patch(const Patch& p);

struct SvgOptions {
  std::map<std::string, std::string> colors;  // tile name -> fill
  /// Lines between order-(j-1) supertile bands; 0 disables.
  unsigned overlay_order = 0;
  /// Marks row boundaries across which the vertical edges do not line up.
  bool fault_overlay = false;
  double scale = 40.0;
};

std::string emit_svg(const Patch& p, const SvgOptions& options = {});

/// Decimal text rounded to nine fractional digits, trailing zeros removed.
std::string decimal_string(const AlgebraicNumber& a);

}  // namespace faultline
