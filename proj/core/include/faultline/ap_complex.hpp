#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "faultline/matrix.hpp"
#include "faultline/substitution.hpp"

namespace faultline {

/// Smallest m (up to the cap) for which every s^m(x) starts with the same
/// letter (right) or ends with the same letter (left).
struct BorderForcing {
  std::optional<unsigned> right_forced_in;
  std::optional<unsigned> left_forced_in;
};

BorderForcing border_forcing(const Substitution& s, unsigned cap = 8);

struct CollaredLetter {
  LetterId core = 0;
  std::optional<LetterId> left;
  std::optional<LetterId> right;

  friend bool operator==(const CollaredLetter&, const CollaredLetter&) = default;
};

/// Anderson-Putnam complex of a 1-d substitution. Edge e has a start slot
/// and an end slot; vertices are classes of slots.
struct APComplex {
  Substitution base;
  BorderForcing forcing;
  bool collar_left = false;
  bool collar_right = false;
  std::vector<CollaredLetter> edges;
  /// Substitution on the collared alphabet (the edge map).
  Substitution collared;
  IntMatrix edge_matrix;
  /// Legal transitions (e, f) of collared letters.
  std::vector<std::pair<size_t, size_t>> transitions;
  std::vector<size_t> start_vertex;
  std::vector<size_t> end_vertex;
  size_t vertex_count = 0;
  std::vector<size_t> vertex_map;

  std::string edge_name(size_t e) const;
  /// "e|f" labels of the transitions glued into vertex v.
  std::vector<std::string> vertex_labels(size_t v) const;
  /// Vertices in the eventual image of vertex_map, ascending.
  std::vector<size_t> eventual_vertices() const;
  /// 0-1 matrix with (i, j) = 1 when vertex j maps to vertex i.
  IntMatrix vertex_matrix() const;
  /// Collared letter -> core letter.
  Word project(const Word& collared_word) const;
  bool connected() const;
};

/// Collars one letter on each side that is not forced at m = 1.
APComplex collar(const Substitution& s, unsigned border_cap = 8, size_t max_len = kDefaultMaxWordLength);

struct GradedGroupData {
  size_t h1_rank = 0;
  /// Columns are edge-cochain representatives of a basis of H^1.
  IntMatrix h1_basis;
  IntMatrix induced_h1;
};

/// Coboundary Z^V -> Z^E, rows indexed by edges.
IntMatrix coboundary(const APComplex& c);

GradedGroupData graph_h1(const APComplex& c);

}  // namespace faultline
