#include "faultline/dpv.hpp"

#include <algorithm>
#include <set>

#include "faultline/errors.hpp"
#include "faultline/spectral.hpp"

namespace faultline {

DPVSubstitution::DPVSubstitution(Substitution vertical, std::vector<Substitution> horizontal, std::vector<DPVTile> tiles,
                                 std::vector<std::vector<size_t>> row_sigma)
    : vertical_(std::move(vertical)),
      horizontal_(std::move(horizontal)),
      tiles_(std::move(tiles)),
      row_sigma_(std::move(row_sigma)) {
  if (horizontal_.empty()) throw ValidationError("DPV needs at least one horizontal substitution");
  const Alphabet& ha = horizontal_.front().alphabet();
  for (const auto& s : horizontal_)
    if (!(s.alphabet() == ha)) throw ValidationError("horizontal substitutions must share one alphabet");
  if (tiles_.empty()) throw ValidationError("DPV needs at least one tile");
  std::set<std::pair<LetterId, LetterId>> seen;
  for (const auto& t : tiles_) {
    if (t.vertical >= vertical_.size()) throw ValidationError("tile '" + t.name + "' has an unknown vertical letter");
    if (t.horizontal >= ha.size()) throw ValidationError("tile '" + t.name + "' has an unknown horizontal letter");
    if (!seen.emplace(t.vertical, t.horizontal).second)
      throw ValidationError("two tiles share the letters of '" + t.name + "'");
  }

  const size_t nv = vertical_.size();
  std::vector<std::vector<std::set<size_t>>> candidates(nv);
  for (LetterId v = 0; v < nv; ++v) {
    const size_t height = vertical_.image(v).size();
    candidates[v].assign(height, {});
    for (size_t j = 0; j < height; ++j)
      for (size_t k = 0; k < horizontal_.size(); ++k) candidates[v][j].insert(k);
  }
  for (const auto& t : tiles_) {
    const Word& column = vertical_.image(t.vertical);
    if (t.rows.size() != column.size())
      throw ValidationError("image of tile '" + t.name + "' needs " + std::to_string(column.size()) + " rows");
    for (size_t j = 0; j < t.rows.size(); ++j) {
      Word projected;
      for (size_t idx : t.rows[j]) {
        if (idx >= tiles_.size()) throw ValidationError("image of tile '" + t.name + "' uses an unknown tile");
        const DPVTile& u = tiles_[idx];
        if (u.vertical != column[j])
          throw ValidationError("row " + std::to_string(j) + " of tile '" + t.name + "' has the wrong vertical letter");
        projected.push_back(u.horizontal);
      }
      std::set<size_t> matching;
      for (size_t k = 0; k < horizontal_.size(); ++k)
        if (horizontal_[k].image(t.horizontal) == projected) matching.insert(k);
      if (matching.empty())
        throw ValidationError("row " + std::to_string(j) + " of tile '" + t.name +
                              "' is not the image of any horizontal substitution");
      std::set<size_t> both;
      std::set_intersection(candidates[t.vertical][j].begin(), candidates[t.vertical][j].end(), matching.begin(),
                            matching.end(), std::inserter(both, both.begin()));
      candidates[t.vertical][j] = std::move(both);
    }
  }
  std::vector<std::vector<size_t>> inferred(nv);
  for (LetterId v = 0; v < nv; ++v)
    for (size_t j = 0; j < candidates[v].size(); ++j) {
      if (candidates[v][j].empty())
        throw ValidationError("row " + std::to_string(j) + " under vertical letter '" + vertical_.alphabet().name(v) +
                              "' mixes horizontal substitutions; rows must each follow one substitution");
      inferred[v].push_back(*candidates[v][j].begin());
    }
  if (row_sigma_.empty()) {
    row_sigma_ = std::move(inferred);
  } else {
    if (row_sigma_.size() != nv) throw ValidationError("row substitution table needs one entry per vertical letter");
    for (LetterId v = 0; v < nv; ++v) {
      if (row_sigma_[v].size() != candidates[v].size())
        throw ValidationError("row substitution table has the wrong height for '" + vertical_.alphabet().name(v) + "'");
      for (size_t j = 0; j < row_sigma_[v].size(); ++j)
        if (!candidates[v][j].count(row_sigma_[v][j]))
          throw ValidationError("declared row substitution disagrees with the tile images under '" +
                                vertical_.alphabet().name(v) + "'");
    }
  }
}

size_t DPVSubstitution::tile_index(const std::string& name) const {
  for (size_t i = 0; i < tiles_.size(); ++i)
    if (tiles_[i].name == name) return i;
  throw ValidationError("unknown tile '" + name + "'");
}

std::optional<size_t> DPVSubstitution::tile_for(LetterId v, LetterId h) const {
  for (size_t i = 0; i < tiles_.size(); ++i)
    if (tiles_[i].vertical == v && tiles_[i].horizontal == h) return i;
  return std::nullopt;
}

IntMatrix DPVSubstitution::count_matrix() const {
  IntMatrix m(tiles_.size(), tiles_.size());
  for (size_t j = 0; j < tiles_.size(); ++j)
    for (const auto& row : tiles_[j].rows)
      for (size_t i : row) m(i, j) += 1;
  return m;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Passed: return "passed";
    case CheckStatus::Warning: return "warning";
    case CheckStatus::Failed: return "failed";
  }
  return "failed";
}

HypothesisLog validate_dpv(const DPVSubstitution& d) {
  HypothesisLog log;
  auto add = [&](std::string name, CheckStatus st, std::string detail) {
    log.push_back({std::move(name), st, std::move(detail)});
  };
  const auto& hs = d.horizontal();
  const Substitution& s0 = hs.front();

  add("vertical primitive", is_primitive(abelianization(d.vertical())) ? CheckStatus::Passed : CheckStatus::Failed,
      abelianization(d.vertical()).to_string());
  for (const auto& s : hs)
    add("horizontal primitive: " + s.name(), is_primitive(abelianization(s)) ? CheckStatus::Passed : CheckStatus::Failed,
        abelianization(s).to_string());

  for (size_t k = 1; k < hs.size(); ++k) {
    const Substitution& s = hs[k];
    bool lengths = s.image_lengths() == s0.image_lengths();
    add("equal image lengths: " + s0.name() + ", " + s.name(), lengths ? CheckStatus::Passed : CheckStatus::Failed, "");
    bool abel = abelianization(s) == abelianization(s0);
    add("equal abelianization: " + s0.name() + ", " + s.name(), abel ? CheckStatus::Passed : CheckStatus::Failed,
        abelianization(s).to_string() + " vs " + abelianization(s0).to_string());
    if (!lengths) continue;
    std::optional<Word> u = shift_conjugacy(s0, s);
    std::string dir = s.name() + "(x) u = u " + s0.name() + "(x)";
    if (!u) {
      u = shift_conjugacy(s, s0);
      dir = s0.name() + "(x) u = u " + s.name() + "(x)";
    }
    if (u)
      add("same tiling space: " + s0.name() + ", " + s.name(), CheckStatus::Passed,
          dir + " with u = \"" + s0.alphabet().format(*u) + "\"");
    else
      add("same tiling space: " + s0.name() + ", " + s.name(), CheckStatus::Warning,
          "unverified hypothesis: no shift conjugacy found within the search bound");
  }
  if (hs.size() == 1) add("same tiling space: " + s0.name(), CheckStatus::Passed, "single horizontal substitution");
  return log;
}

void require_valid(const HypothesisLog& log) {
  std::string msg;
  for (const auto& c : log)
    if (c.status == CheckStatus::Failed) msg += (msg.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  if (!msg.empty()) throw ValidationError("DPV hypotheses failed: " + msg);
}

namespace {

BoundaryKind combine(const std::vector<BoundaryRepresentative>& reps) {
  bool any_fault = false;
  for (const auto& r : reps) {
    if (r.boundary.kind == BoundaryKind::Undetermined) return BoundaryKind::Undetermined;
    if (r.boundary.kind == BoundaryKind::RegularFault) any_fault = true;
  }
  return any_fault ? BoundaryKind::RegularFault : BoundaryKind::Rigid;
}

}  // namespace

EssentialVertexReport essential_vertices(const DPVSubstitution& d, const AnalysisOptions& options) {
  EssentialVertexReport rep;
  rep.complex = collar(d.vertical(), options.border_cap, options.trace.max_len);
  const APComplex& c = rep.complex;
  rep.eventual = c.eventual_vertices();
  const std::set<size_t> eventual(rep.eventual.begin(), rep.eventual.end());

  for (size_t v = 0; v < c.vertex_count; ++v) {
    VertexReport vr;
    vr.id = v;
    vr.labels = c.vertex_labels(v);
    vr.eventual = eventual.count(v) != 0;
    if (vr.eventual) {
      for (const auto& [e0, f0] : c.transitions) {
        if (c.end_vertex[e0] != v) continue;
        // Rows adjacent to the boundary: the top row of the lower supertile
        // and the bottom row of the upper one.
        std::vector<RowPair> schedule;
        size_t e = e0, f = f0;
        for (unsigned i = 0; i < options.rounds; ++i) {
          LetterId lower = c.edges[e].core, upper = c.edges[f].core;
          size_t last_row = d.vertical().image(lower).size() - 1;
          const Substitution* bottom = &d.horizontal()[d.sigma_index(lower, last_row)];
          const Substitution* top = &d.horizontal()[d.sigma_index(upper, 0)];
          schedule.emplace_back(top, bottom);
          e = c.collared.image(static_cast<LetterId>(e)).back();
          f = c.collared.image(static_cast<LetterId>(f)).front();
        }
        BoundaryRepresentative br;
        br.lower_edge = e0;
        br.upper_edge = f0;
        br.boundary = classify_schedule(schedule, options.trace);
        vr.representatives.push_back(std::move(br));
      }
      vr.kind = combine(vr.representatives);
      if (vr.kind == BoundaryKind::RegularFault) ++rep.n_min;
      if (vr.kind != BoundaryKind::Rigid) ++rep.n_max;
    }
    rep.vertices.push_back(std::move(vr));
  }
  return rep;
}

FirstCohomology first_cohomology(const Substitution& s, unsigned border_cap) {
  FirstCohomology out;
  out.complex = collar(s, border_cap);
  out.h1 = graph_h1(out.complex);
  out.limit = direct_limit(out.h1.induced_h1);
  out.group = recognize_with_rule(out.limit);
  return out;
}

CochainLimits cochain_limits(const APComplex& c) {
  CochainLimits out;
  out.d1 = direct_limit(c.edge_matrix.transpose());
  out.d0 = direct_limit(c.vertex_matrix().transpose());
  out.d1_group = recognize_with_rule(out.d1);
  out.d0_group = recognize_with_rule(out.d0);
  return out;
}

GroupExpr h2_formula(const GroupExpr& mu, const GroupExpr& nu, size_t n) {
  if (n == 0) throw HypothesisError("the cohomology formulas need at least one fault line");
  return tensor(mu, direct_sum(nu, GroupExpr::Z(static_cast<unsigned>(n - 1))));
}

GroupExpr h3_formula(const GroupExpr& mu, size_t n) {
  if (n == 0) throw HypothesisError("the cohomology formulas need at least one fault line");
  return tensor(mu, mu).power(static_cast<unsigned>(n));
}

CohomologyReport cohomology(const DPVSubstitution& d, const AnalysisOptions& options) {
  CohomologyReport r;
  r.hypotheses = validate_dpv(d);
  require_valid(r.hypotheses);
  r.essential = essential_vertices(d, options);
  r.mu = first_cohomology(d.horizontal().front(), options.border_cap);
  r.nu = first_cohomology(d.vertical(), options.border_cap);
  r.cochains = cochain_limits(r.essential.complex);

  const GroupExpr& mu = r.mu.group.expr;
  const GroupExpr& nu = r.nu.group.expr;
  r.h0 = GroupExpr::Z();
  r.h1 = nu;
  for (size_t n = std::max<size_t>(r.essential.n_min, 1); n <= r.essential.n_max; ++n) {
    r.n_values.push_back(n);
    r.h2.push_back(h2_formula(mu, nu, n));
    r.h3.push_back(h3_formula(mu, n));
  }
  r.complete = r.essential.determined() && r.essential.n_min >= 1;
  if (!r.essential.determined())
    r.notes.push_back("some eventual boundaries are undetermined; H2 and H3 are listed for each candidate n");
  if (r.essential.n_max == 0) r.notes.push_back("no boundary develops a fault line; the formulas do not apply");

  const size_t eventual = r.essential.eventual.size();
  r.rank_identity = r.cochains.d1.r + 1 == r.nu.limit.r + eventual;
  if (!r.rank_identity)
    r.notes.push_back("rank(d1) = " + std::to_string(r.cochains.d1.r) + " differs from rank(nu) + eventual - 1 = " +
                      std::to_string(r.nu.limit.r + eventual - 1));
  if (r.complete && r.essential.n_min == eventual) {
    GroupInvariants a = invariants(r.cochains.d1_group.expr);
    GroupInvariants b = invariants(direct_sum(nu, GroupExpr::Z(static_cast<unsigned>(eventual - 1))));
    r.d1_cross_check = a.rank == b.rank && a.charpoly == b.charpoly && a.det == b.det;
    if (!*r.d1_cross_check) r.notes.push_back("d1 does not match nu (+) Z^(n-1) at invariant level");
  }
  bool any_rigid = false;
  for (const auto& v : r.essential.vertices) any_rigid = any_rigid || (v.eventual && v.kind == BoundaryKind::Rigid);
  if (any_rigid)
    r.notes.push_back("rigid boundaries are certified by identical rows with constant offset; local derivability "
                      "in general is not decided");
  return r;
}

}  // namespace faultline
