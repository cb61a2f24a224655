#pragma once

#include <optional>
#include <string>
#include <vector>

#include "faultline/ap_complex.hpp"
#include "faultline/direct_limit.hpp"
#include "faultline/fault.hpp"
#include "faultline/group_expr.hpp"
#include "faultline/substitution.hpp"

namespace faultline {

struct DPVTile {
  std::string name;
  LetterId vertical = 0;
  LetterId horizontal = 0;
  /// Image rows, bottom row first; entries are tile indices.
  std::vector<std::vector<size_t>> rows;
};

/// A direct product variation: a vertical substitution, a family of
/// horizontal substitutions, and the 2-d image of every tile.
class DPVSubstitution {
 public:
  /// `row_sigma[v][j]` selects the horizontal substitution of row j
  /// (bottom first) in the image of vertical letter v. When empty it is
  /// inferred from the tile images.
  DPVSubstitution(Substitution vertical, std::vector<Substitution> horizontal, std::vector<DPVTile> tiles,
                  std::vector<std::vector<size_t>> row_sigma = {});

  const Substitution& vertical() const { return vertical_; }
  const std::vector<Substitution>& horizontal() const { return horizontal_; }
  const std::vector<DPVTile>& tiles() const { return tiles_; }
  const std::vector<std::vector<size_t>>& row_sigma() const { return row_sigma_; }
  size_t sigma_index(LetterId v, size_t row) const { return row_sigma_.at(v).at(row); }
  size_t tile_index(const std::string& name) const;
  /// Tile with the given letters, if any.
  std::optional<size_t> tile_for(LetterId v, LetterId h) const;
  /// Entry (i, j) counts tile i in the image of tile j.
  IntMatrix count_matrix() const;

 private:
  Substitution vertical_;
  std::vector<Substitution> horizontal_;
  std::vector<DPVTile> tiles_;
  std::vector<std::vector<size_t>> row_sigma_;
};

enum class CheckStatus { Passed, Warning, Failed };
std::string to_string(CheckStatus s);

struct HypothesisCheck {
  std::string name;
  CheckStatus status = CheckStatus::Passed;
  std::string detail;
};

using HypothesisLog = std::vector<HypothesisCheck>;

HypothesisLog validate_dpv(const DPVSubstitution& d);
/// Throws ValidationError listing every failed check.
void require_valid(const HypothesisLog& log);

struct AnalysisOptions {
  unsigned rounds = kDefaultRounds;
  unsigned border_cap = 8;
  TraceOptions trace;
};

struct BoundaryRepresentative {
  size_t lower_edge = 0;  // collared letter below the boundary
  size_t upper_edge = 0;  // collared letter above
  BoundaryClass boundary;
};

struct VertexReport {
  size_t id = 0;
  std::vector<std::string> labels;
  bool eventual = false;
  std::vector<BoundaryRepresentative> representatives;
  BoundaryKind kind = BoundaryKind::Undetermined;
};

struct EssentialVertexReport {
  APComplex complex;
  std::vector<VertexReport> vertices;
  std::vector<size_t> eventual;
  size_t n_min = 0;  // certified fault vertices
  size_t n_max = 0;  // plus undetermined ones

  bool determined() const { return n_min == n_max; }
};

EssentialVertexReport essential_vertices(const DPVSubstitution& d, const AnalysisOptions& options = {});

struct FirstCohomology {
  APComplex complex;
  GradedGroupData h1;
  DirectLimitGroup limit;
  Recognition group;
};

/// H^1 of a 1-d substitution tiling space via its Anderson-Putnam complex.
FirstCohomology first_cohomology(const Substitution& s, unsigned border_cap = 8);

struct CochainLimits {
  DirectLimitGroup d0;
  DirectLimitGroup d1;
  Recognition d0_group;
  Recognition d1_group;
};

CochainLimits cochain_limits(const APComplex& vertical_complex);

struct CohomologyReport {
  HypothesisLog hypotheses;
  EssentialVertexReport essential;
  FirstCohomology mu;
  FirstCohomology nu;
  CochainLimits cochains;
  /// Set when n is certified; otherwise h2/h3 hold one entry per candidate n.
  bool complete = false;
  std::vector<size_t> n_values;
  GroupExpr h0;
  GroupExpr h1;
  std::vector<GroupExpr> h2;
  std::vector<GroupExpr> h3;
  bool rank_identity = false;
  std::optional<bool> d1_cross_check;  // only in the every-vertex-essential regime
  std::vector<std::string> notes;
};

CohomologyReport cohomology(const DPVSubstitution& d, const AnalysisOptions& options = {});

/// mu (x) (nu (+) Z^(n-1)) and (mu (x) mu)^n.
GroupExpr h2_formula(const GroupExpr& mu, const GroupExpr& nu, size_t n);
GroupExpr h3_formula(const GroupExpr& mu, size_t n);

}  // namespace faultline
