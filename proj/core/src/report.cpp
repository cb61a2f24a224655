#include "faultline/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "faultline/errors.hpp"
#include "faultline/render.hpp"
#include "faultline/spectral.hpp"

namespace faultline {

using nlohmann::json;

namespace {

constexpr int kIntervalBits = 40;

json number(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// Nine-digit decimal rounded outward, so [lo, hi] stays a valid bracket.
std::string decimal_bound(const mpq_class& q, bool up) {
  mpz_class scale = 1'000'000'000;
  mpq_class scaled = q * scale;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  if (up && mpq_class(fl) != scaled) fl += 1;
  mpq_class r(fl, scale);
  r.canonicalize();
  return decimal_string(AlgebraicNumber::rational(NumberField::rationals(), r));
}

json interval_json(const RationalInterval& iv) {
  return json::array({decimal_bound(iv.lo, false), decimal_bound(iv.hi, true)});
}

json algebraic_json(const AlgebraicNumber& a) {
  json coeffs = json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(rational_to_string(c));
  const FieldPtr& f = a.field();
  return {{"poly", f->poly().to_string()},
          {"interval", f->degree() > 1 ? interval_json(f->root_interval(kIntervalBits))
                                       : interval_json({-f->poly().coeff(0), -f->poly().coeff(0)})},
          {"coeffs", coeffs},
          {"value", decimal_string(a)}};
}

json substitution_json(const Substitution& s) {
  json rules = json::object();
  for (LetterId x = 0; x < s.size(); ++x) rules[s.alphabet().name(x)] = s.alphabet().format(s.image(x));
  return {{"name", s.name()}, {"alphabet", s.alphabet().names()}, {"rules", rules}};
}

json group_json(const GroupExpr& g) {
  GroupInvariants inv = invariants(g);
  return {{"expr", g.to_string()},
          {"rank", inv.rank},
          {"charpoly", inv.charpoly.to_string()},
          {"det", number(inv.det)},
          {"presentation", matrix_json(g.presentation())}};
}

json limit_json(const DirectLimitGroup& g, const Recognition& rec) {
  json out = {{"n", g.n},
              {"matrix", matrix_json(g.a)},
              {"rank", g.r},
              {"reduced", matrix_json(g.a_prime)},
              {"charpoly", g.charpoly_prime.to_string()},
              {"det", number(g.det_prime)},
              {"rule", to_string(rec.rule)}};
  out["group"] = group_json(rec.expr);
  return out;
}

json complex_json(const APComplex& c) {
  json edges = json::array();
  for (size_t e = 0; e < c.edges.size(); ++e)
    edges.push_back({{"name", c.edge_name(e)},
                     {"start", c.start_vertex[e]},
                     {"end", c.end_vertex[e]},
                     {"image", c.collared.alphabet().format(c.collared.image(static_cast<LetterId>(e)))}});
  json vertices = json::array();
  for (size_t v = 0; v < c.vertex_count; ++v)
    vertices.push_back({{"id", v}, {"labels", c.vertex_labels(v)}, {"maps_to", c.vertex_map[v]}});
  json forcing = json::object();
  forcing["right_forced_in"] = c.forcing.right_forced_in ? json(*c.forcing.right_forced_in) : json(nullptr);
  forcing["left_forced_in"] = c.forcing.left_forced_in ? json(*c.forcing.left_forced_in) : json(nullptr);
  return {{"substitution", c.base.name()},
          {"border_forcing", forcing},
          {"collar", {{"left", c.collar_left}, {"right", c.collar_right}}},
          {"edges", edges},
          {"vertices", vertices},
          {"edge_matrix", matrix_json(c.edge_matrix)},
          {"eventual_vertices", c.eventual_vertices()},
          {"connected", c.connected()}};
}

json h1_json(const GradedGroupData& h) {
  return {{"rank", h.h1_rank}, {"basis", matrix_json(h.h1_basis)}, {"induced", matrix_json(h.induced_h1)}};
}

json first_cohomology_json(const FirstCohomology& f) {
  return {{"substitution", f.complex.base.name()},
          {"h1", h1_json(f.h1)},
          {"limit", limit_json(f.limit, f.group)},
          {"group", f.group.expr.to_string()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Resolves caps: request flags override document options.
AnalysisOptions resolve(const InputDocument& doc, const ReportRequest& req, const Substitution* horizontal) {
  AnalysisOptions a = analysis_options(doc, horizontal);
  if (req.rounds) a.rounds = *req.rounds;
  if (req.max_word_len) a.trace.max_len = *req.max_word_len;
  if (req.precision_bits) a.trace.precision_bits = *req.precision_bits;
  if (a.rounds < 4) throw ValidationError("at least 4 rounds are needed");
  if (a.trace.precision_bits < 8) throw ValidationError("precision must be at least 8 bits");
  return a;
}

std::string pick(const std::optional<std::string>& flag, const InputDocument& doc, bool vertical,
                 size_t horizontal_index = 0) {
  if (flag) return *flag;
  if (doc.dpv) {
    if (vertical) return doc.dpv->vertical;
    const auto& h = doc.dpv->horizontal;
    return h.at(std::min(horizontal_index, h.size() - 1));
  }
  if (doc.substitutions.size() == 1) return doc.substitutions.begin()->first;
  throw ValidationError("several substitutions declared; choose one with --subst");
}

json hypotheses_json(const HypothesisLog& log) {
  json out = json::array();
  for (const auto& c : log) out.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return out;
}

json analyze_one(const Substitution& s, int bits, bool& undetermined) {
  json out = substitution_json(s);
  IntMatrix m = abelianization(s);
  PerronData perron = perron_data(m);
  SpectralClass spec = spectral_classify(m, bits);
  out["matrix"] = matrix_json(m);
  out["charpoly"] = perron.charpoly.to_string();
  out["lambda"] = algebraic_json(perron.lambda);
  out["primitive"] = perron.primitive;
  json sj = {{"class", to_string(spec.kind)}, {"perron_is_pisot", spec.perron_is_pisot}};
  sj["second_modulus"] = spec.has_second ? interval_json(spec.second_modulus) : json(nullptr);
  sj["degenerate"] = spec.kind == SpectralKind::Unimodular;
  out["spectral"] = sj;
  if (spec.kind == SpectralKind::Undetermined) undetermined = true;
  try {
    json lengths = json::object();
    auto l = tile_lengths(m, perron);
    for (LetterId x = 0; x < s.size(); ++x) lengths[s.alphabet().name(x)] = algebraic_json(l[x]);
    out["tile_lengths"] = lengths;
  } catch (const HypothesisError& e) {
    out["tile_lengths"] = nullptr;
    out["tile_lengths_note"] = e.what();
  }
  return out;
}

}  // namespace

Report analyze_report(const InputDocument& doc, const ReportRequest& req) {
  Report r;
  int bits = req.precision_bits.value_or(doc.options.precision_bits.value_or(64));
  json subs = json::object();
  if (req.subst) {
    subs[*req.subst] = analyze_one(build_substitution(doc, *req.subst), bits, r.undetermined);
  } else {
    for (const auto& [name, decl] : doc.substitutions)
      subs[name] = analyze_one(build_substitution(doc, name), bits, r.undetermined);
  }
  json out = {{"report", "analyze"}, {"substitutions", subs}};
  if (doc.dpv && !req.subst) {
    DPVSubstitution d = build_dpv(doc);
    json tiles = json::array();
    for (const auto& t : d.tiles()) tiles.push_back(t.name);
    out["dpv"] = {{"hypotheses", hypotheses_json(validate_dpv(d))},
                  {"tiles", tiles},
                  {"count_matrix", matrix_json(d.count_matrix())}};
  }
  r.json = dump(out);
  return r;
}

Report ap_report(const InputDocument& doc, const ReportRequest& req) {
  Substitution s = build_substitution(doc, pick(req.subst, doc, true));
  unsigned cap = doc.options.border_cap.value_or(8);
  APComplex c = collar(s, cap, req.max_word_len.value_or(doc.options.max_word_len.value_or(kDefaultMaxWordLength)));
  json out = {{"report", "ap"}, {"complex", complex_json(c)}, {"h1", h1_json(graph_h1(c))}};
  CochainLimits cl = cochain_limits(c);
  out["d0"] = limit_json(cl.d0, cl.d0_group);
  out["d1"] = limit_json(cl.d1, cl.d1_group);
  return {dump(out), false};
}

Report mu_report(const InputDocument& doc, const ReportRequest& req) {
  Substitution s = build_substitution(doc, pick(req.subst, doc, false));
  FirstCohomology f = first_cohomology(s, doc.options.border_cap.value_or(8));
  json out = {{"report", "mu"}, {"complex", complex_json(f.complex)}};
  out.update(first_cohomology_json(f));
  return {dump(out), false};
}

Report fault_report(const InputDocument& doc, const ReportRequest& req) {
  Substitution top = build_substitution(doc, pick(req.top, doc, false, 0));
  Substitution bottom = build_substitution(doc, pick(req.bottom, doc, false, 1));
  AnalysisOptions opts = resolve(doc, req, &top);
  LetterId seed = req.seed ? top.alphabet().id(*req.seed) : 0;

  BoundaryTrace trace = boundary_trace(top, bottom, seed, opts.rounds, opts.trace);
  BoundaryClass cls = classify_boundary(top, bottom, opts.rounds, opts.trace);

  json rows = json::array();
  json words = json::array();
  long prev = 0;
  for (size_t i = 0; i < trace.rounds.size(); ++i) {
    const TraceRound& tr = trace.rounds[i];
    OffsetStatistics st = offset_statistics(trace, i + 1);
    json growth = nullptr;
    if (i > 0 && prev > 0) growth = decimal_bound(mpq_class(tr.max_abs_discrepancy, prev), false);
    rows.push_back({static_cast<long>(i + 1), static_cast<long>(tr.top.size()), tr.max_abs_discrepancy,
                    static_cast<long>(st.distinct_count), st.min_gap ? json(decimal_string(*st.min_gap)) : json("-"),
                    growth.is_null() ? json("-") : growth});
    prev = tr.max_abs_discrepancy;
    if (tr.top.size() <= 64)
      words.push_back({{"round", i + 1},
                       {"top", trace.alphabet.format(tr.top)},
                       {"bottom", trace.alphabet.format(tr.bottom)}});
  }
  json lengths = json::object();
  for (LetterId x = 0; x < trace.alphabet.size(); ++x)
    lengths[trace.alphabet.name(x)] = algebraic_json(trace.lengths[x]);
  json offsets = json::array();
  if (!trace.rounds.empty() && trace.rounds.back().offsets.size() <= 32)
    for (const auto& o : trace.rounds.back().offsets) offsets.push_back(algebraic_json(o));

  json out = {{"report", "fault"},
              {"top", top.name()},
              {"bottom", bottom.name()},
              {"seed", top.alphabet().name(seed)},
              {"tracked", top.alphabet().name(trace.tracked)},
              {"modulus", algebraic_json(trace.modulus)},
              {"tile_lengths", lengths},
              {"table",
               {{"columns", {"round", "length", "max_discrepancy", "distinct_offsets", "min_gap", "growth"}},
                {"rows", rows}}},
              {"words", words},
              {"growth_ratio", interval_json(discrepancy_growth(trace))},
              {"classification",
               {{"kind", to_string(cls.kind)}, {"spectral", to_string(cls.spectral)}, {"reason", cls.reason}}}};
  if (!offsets.empty()) out["final_offsets"] = offsets;
  return {dump(out), cls.kind == BoundaryKind::Undetermined};
}

Report cohomology_report(const InputDocument& doc, const ReportRequest& req) {
  DPVSubstitution d = build_dpv(doc);
  AnalysisOptions opts = resolve(doc, req, &d.horizontal().front());
  CohomologyReport c = cohomology(d, opts);

  json vertices = json::array();
  for (const auto& v : c.essential.vertices) {
    json reps = json::array();
    for (const auto& rep : v.representatives) {
      json growth = json::array();
      for (const auto& ev : rep.boundary.evidence) growth.push_back(interval_json(ev.growth));
      reps.push_back({{"lower", c.essential.complex.edge_name(rep.lower_edge)},
                      {"upper", c.essential.complex.edge_name(rep.upper_edge)},
                      {"kind", to_string(rep.boundary.kind)},
                      {"reason", rep.boundary.reason},
                      {"growth", growth}});
    }
    vertices.push_back({{"id", v.id},
                        {"labels", v.labels},
                        {"eventual", v.eventual},
                        {"kind", v.eventual ? to_string(v.kind) : "not eventual"},
                        {"representatives", reps}});
  }
  json essential = {{"vertices", vertices},
                    {"eventual", c.essential.eventual},
                    {"n_min", c.essential.n_min},
                    {"n_max", c.essential.n_max}};

  json out = {{"report", "cohomology"},
              {"hypotheses", hypotheses_json(c.hypotheses)},
              {"complex", complex_json(c.essential.complex)},
              {"essential_vertices", essential},
              {"mu", first_cohomology_json(c.mu)},
              {"nu", first_cohomology_json(c.nu)},
              {"d0", limit_json(c.cochains.d0, c.cochains.d0_group)},
              {"d1", limit_json(c.cochains.d1, c.cochains.d1_group)},
              {"H0", c.h0.to_string()},
              {"H1", c.h1.to_string()},
              {"Hk_above_3", "0"},
              {"complete", c.complete},
              {"rank_identity", c.rank_identity},
              {"notes", c.notes}};
  out["d1_cross_check"] = c.d1_cross_check ? json(*c.d1_cross_check) : json(nullptr);
  if (c.complete) {
    out["n"] = c.n_values.front();
    out["H2"] = c.h2.front().to_string();
    out["H3"] = c.h3.front().to_string();
    out["H2_presentation_rank"] = invariants(c.h2.front()).rank;
    out["H3_presentation_rank"] = invariants(c.h3.front()).rank;
  } else {
    out["n"] = nullptr;
    json h2 = json::object(), h3 = json::object();
    for (size_t i = 0; i < c.n_values.size(); ++i) {
      h2[std::to_string(c.n_values[i])] = c.h2[i].to_string();
      h3[std::to_string(c.n_values[i])] = c.h3[i].to_string();
    }
    out["H2"] = h2;
    out["H3"] = h3;
  }
  return {dump(out), !c.complete};
}

namespace {

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat_array(const json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) {
           return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(),
                                                                   [](const json& y) { return y.is_primitive(); }));
         });
}

void emit_table(std::ostringstream& os, const json& t, const std::string& pad) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head;
  for (const auto& c : t["columns"]) head.push_back(scalar_text(c));
  cells.push_back(head);
  for (const auto& row : t["rows"]) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(scalar_text(x));
    cells.push_back(r);
  }
  std::vector<size_t> width(head.size(), 0);
  for (const auto& r : cells)
    for (size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  for (const auto& r : cells) {
    os << pad;
    for (size_t i = 0; i < r.size() && i < width.size(); ++i)
      os << (i ? "  " : "") << std::string(width[i] - r[i].size(), ' ') << r[i];
    os << "\n";
  }
}

bool is_algebraic(const json& j) { return j.is_object() && j.contains("value") && j.contains("poly"); }

std::string algebraic_text(const json& j) {
  std::string poly = j["poly"].get<std::string>();
  std::string v = j["value"].get<std::string>();
  return poly.find("x^") == std::string::npos ? v : v + "  in Q(L), L root of " + poly;
}

void emit(std::ostringstream& os, const json& j, const std::string& pad) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && value.contains("columns") && value.contains("rows")) {
      os << pad << key << ":\n";
      emit_table(os, value, pad + "  ");
    } else if (is_algebraic(value)) {
      os << pad << key << ": " << algebraic_text(value) << "\n";
    } else if (value.is_object()) {
      os << pad << key << ":\n";
      emit(os, value, pad + "  ");
    } else if (is_flat_array(value)) {
      os << pad << key << ": " << value.dump() << "\n";
    } else if (value.is_array()) {
      os << pad << key << ":\n";
      for (size_t i = 0; i < value.size(); ++i) {
        if (is_algebraic(value[i])) {
          os << pad << "  - " << algebraic_text(value[i]) << "\n";
        } else if (value[i].is_object()) {
          os << pad << "  [" << i << "]\n";
          emit(os, value[i], pad + "    ");
        } else {
          os << pad << "  - " << scalar_text(value[i]) << "\n";
        }
      }
    } else {
      os << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

std::string format_text(const std::string& report_json) {
  std::ostringstream os;
  emit(os, json::parse(report_json), "");
  return os.str();
}

}  // namespace faultline
