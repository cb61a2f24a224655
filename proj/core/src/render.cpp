#include "faultline/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "faultline/errors.hpp"
#include "faultline/spectral.hpp"

namespace faultline {

namespace {

bool less(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }

std::vector<AlgebraicNumber> sorted_unique(std::vector<AlgebraicNumber> v) {
  std::sort(v.begin(), v.end(), less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

const char* kPalette[] = {"#e6b35c", "#6c9bd2", "#9ccf7a", "#d2787a", "#b48fd6", "#7fcfcf", "#d9d26a", "#c7a18a"};

}  // namespace

Patch generate_patch(const DPVSubstitution& d, size_t seed_tile, unsigned k, size_t max_tiles) {
  const auto& tiles = d.tiles();
  if (seed_tile >= tiles.size()) throw ValidationError("seed tile out of range");
  const IntMatrix counts = d.count_matrix();

  const std::vector<AlgebraicNumber> widths = tile_lengths(d.horizontal().front());
  const std::vector<AlgebraicNumber> heights = tile_lengths(d.vertical());
  const AlgebraicNumber lh = perron_data(abelianization(d.horizontal().front())).lambda;
  const AlgebraicNumber lv = perron_data(abelianization(d.vertical())).lambda;
  const FieldPtr& fh = widths.front().field();
  const FieldPtr& fv = heights.front().field();
  // Re-express the Perron roots in the fields used for lengths.
  const AlgebraicNumber lambda_h = AlgebraicNumber(fh, lh.coeffs());
  const AlgebraicNumber lambda_v = AlgebraicNumber(fv, lv.coeffs());

  Patch p;
  for (const auto& t : tiles) p.tile_names.push_back(t.name);
  p.rounds = k;
  auto make = [&](size_t t, AlgebraicNumber x, AlgebraicNumber y) {
    return PlacedTile{t, std::move(x), std::move(y), widths[tiles[t].horizontal], heights[tiles[t].vertical]};
  };
  p.tiles.push_back(make(seed_tile, AlgebraicNumber::rational(fh, 0), AlgebraicNumber::rational(fv, 0)));

  // bottoms[L] = tile bottoms after L rounds, in that round's frame.
  std::vector<std::vector<AlgebraicNumber>> bottoms{{AlgebraicNumber::rational(fv, 0)}};
  for (unsigned round = 0; round < k; ++round) {
    size_t next_count = 0;
    for (const auto& pt : p.tiles)
      for (size_t i = 0; i < tiles.size(); ++i) next_count += counts(i, pt.tile).get_ui();
    if (next_count > max_tiles)
      throw ResourceError("patch would hold " + std::to_string(next_count) + " tiles, above the cap of " +
                          std::to_string(max_tiles));
    std::vector<PlacedTile> next;
    next.reserve(next_count);
    std::vector<AlgebraicNumber> ys;
    for (const auto& pt : p.tiles) {
      AlgebraicNumber y = lambda_v * pt.y;
      for (const auto& row : tiles[pt.tile].rows) {
        AlgebraicNumber x = lambda_h * pt.x;
        for (size_t child : row) {
          next.push_back(make(child, x, y));
          x = x + widths[tiles[child].horizontal];
        }
        ys.push_back(y);
        y = y + heights[tiles[row.front()].vertical];
      }
    }
    p.tiles = std::move(next);
    bottoms.push_back(sorted_unique(std::move(ys)));
  }

  AlgebraicNumber scale_h = AlgebraicNumber::rational(fh, 1), scale_v = AlgebraicNumber::rational(fv, 1);
  for (unsigned i = 0; i < k; ++i) {
    scale_h = scale_h * lambda_h;
    scale_v = scale_v * lambda_v;
  }
  p.width = scale_h * widths[tiles[seed_tile].horizontal];
  p.height = scale_v * heights[tiles[seed_tile].vertical];

  // Order-m bands are the images of the tiles present after k - m rounds.
  AlgebraicNumber band_scale = AlgebraicNumber::rational(fv, 1);
  for (unsigned m = 0; m <= k; ++m) {
    std::vector<AlgebraicNumber> interior;
    for (const auto& y : bottoms[k - m]) {
      AlgebraicNumber scaled = band_scale * y;
      if (scaled.sign() > 0) interior.push_back(scaled);
    }
    p.band_bounds.push_back(std::move(interior));
    band_scale = band_scale * lambda_v;
  }
  return p;
}

bool verify_patch(const Patch& p) {
  // Group tiles by bottom edge; each row must run from 0 to the full width.
  std::vector<size_t> order(p.tiles.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    auto c = compare(p.tiles[a].y, p.tiles[b].y);
    if (c != 0) return c < 0;
    return less(p.tiles[a].x, p.tiles[b].x);
  });
  AlgebraicNumber covered_height = AlgebraicNumber::rational(p.height.field(), 0);
  size_t i = 0;
  while (i < order.size()) {
    const PlacedTile& first = p.tiles[order[i]];
    if (!(first.y == covered_height)) return false;
    AlgebraicNumber x = AlgebraicNumber::rational(p.width.field(), 0);
    size_t j = i;
    for (; j < order.size() && p.tiles[order[j]].y == first.y; ++j) {
      const PlacedTile& t = p.tiles[order[j]];
      if (!(t.x == x) || !(t.height == first.height)) return false;
      x = x + t.width;
    }
    if (!(x == p.width)) return false;
    covered_height = covered_height + first.height;
    i = j;
  }
  return covered_height == p.height;
}

std::string decimal_string(const AlgebraicNumber& a) {
  RationalInterval e = a.enclosure(72);
  mpq_class scaled = (e.lo + e.hi) / 2 * mpq_class(1'000'000'000);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_class(scaled + mpq_class(1, 2)).get_num_mpz_t(),
             mpq_class(scaled + mpq_class(1, 2)).get_den_mpz_t());
  bool neg = r < 0;
  if (neg) r = -r;
  std::string digits = r.get_str();
  if (digits.size() < 10) digits.insert(0, 10 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 9);
  std::string frac = digits.substr(digits.size() - 9);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (neg && out != "0") out = "-" + out;
  return out;
}

std::string emit_svg(const Patch& p, const SvgOptions& options) {
  if (p.tiles.empty()) throw ValidationError("cannot render an empty patch");
  const std::string w = decimal_string(p.width);
  const std::string h = decimal_string(p.height);
  const double s = options.scale;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << p.width.to_double() * s
      << "\" height=\"" << p.height.to_double() * s << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  // Flip so y grows upward.
  out << "<g transform=\"matrix(1 0 0 -1 0 " << h << ")\">\n";
  out << "<g class=\"tiles\" stroke=\"#333333\" stroke-width=\"0.02\">\n";
  for (const auto& t : p.tiles) {
    const std::string& name = p.tile_names[t.tile];
    auto it = options.colors.find(name);
    std::string fill = it != options.colors.end() ? it->second : kPalette[t.tile % std::size(kPalette)];
    out << "<rect class=\"tile\" data-tile=\"" << name << "\" x=\"" << decimal_string(t.x) << "\" y=\""
        << decimal_string(t.y) << "\" width=\"" << decimal_string(t.width) << "\" height=\""
        << decimal_string(t.height) << "\" fill=\"" << fill << "\"/>\n";
  }
  out << "</g>\n";
  auto line = [&](const AlgebraicNumber& y, const char* cls, const char* color, const char* width) {
    out << "<line class=\"" << cls << "\" x1=\"0\" y1=\"" << decimal_string(y) << "\" x2=\"" << w << "\" y2=\""
        << decimal_string(y) << "\" stroke=\"" << color << "\" stroke-width=\"" << width << "\"/>\n";
  };
  if (options.overlay_order > 0 && options.overlay_order - 1 < p.band_bounds.size()) {
    out << "<g class=\"overlay\">\n";
    for (const auto& y : p.band_bounds[options.overlay_order - 1]) line(y, "overlay", "#000000", "0.08");
    out << "</g>\n";
  }
  if (options.fault_overlay && !p.band_bounds.empty()) {
    // Left edges per row, compared across every row boundary.
    std::map<std::string, std::set<std::string>> edges_by_row;
    std::map<std::string, std::string> row_ending_at;
    for (const auto& t : p.tiles) {
      const std::string bottom = decimal_string(t.y);
      edges_by_row[bottom].insert(decimal_string(t.x));
      row_ending_at.emplace(decimal_string(t.y + t.height), bottom);
    }
    out << "<g class=\"faults\">\n";
    for (const auto& y : p.band_bounds[0]) {
      const std::string key = decimal_string(y);
      auto below = row_ending_at.find(key);
      if (below != row_ending_at.end() && edges_by_row[below->second] != edges_by_row[key])
        line(y, "fault", "#c0392b", "0.12");
    }
    out << "</g>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace faultline
