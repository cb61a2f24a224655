#include "faultline/ap_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "faultline/errors.hpp"
#include "faultline/smith.hpp"

namespace faultline {

BorderForcing border_forcing(const Substitution& s, unsigned cap) {
  BorderForcing out;
  std::vector<Word> images;
  for (LetterId a = 0; a < s.size(); ++a) images.push_back(Word{a});
  for (unsigned m = 1; m <= cap && (!out.right_forced_in || !out.left_forced_in); ++m) {
    for (auto& w : images) w = faultline::apply(s, w);
    bool same_first = true, same_last = true;
    for (const auto& w : images) {
      same_first = same_first && w.front() == images.front().front();
      same_last = same_last && w.back() == images.front().back();
    }
    if (same_first && !out.right_forced_in) out.right_forced_in = m;
    if (same_last && !out.left_forced_in) out.left_forced_in = m;
  }
  return out;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  size_t find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

}  // namespace

std::string APComplex::edge_name(size_t e) const {
  const CollaredLetter& c = edges.at(e);
  const Alphabet& a = base.alphabet();
  std::string out;
  if (c.left) out += "(" + a.name(*c.left) + ")";
  out += a.name(c.core);
  if (c.right) out += "(" + a.name(*c.right) + ")";
  return out;
}

std::vector<std::string> APComplex::vertex_labels(size_t v) const {
  std::vector<std::string> out;
  for (const auto& [e, f] : transitions)
    if (end_vertex[e] == v) out.push_back(edge_name(e) + "|" + edge_name(f));
  return out;
}

std::vector<size_t> APComplex::eventual_vertices() const {
  std::set<size_t> image;
  for (size_t v = 0; v < vertex_count; ++v) image.insert(v);
  for (size_t step = 0; step <= vertex_count; ++step) {
    std::set<size_t> next;
    for (size_t v : image) next.insert(vertex_map[v]);
    if (next == image) break;
    image = std::move(next);
  }
  return {image.begin(), image.end()};
}

IntMatrix APComplex::vertex_matrix() const {
  IntMatrix t(vertex_count, vertex_count);
  for (size_t j = 0; j < vertex_count; ++j) t(vertex_map[j], j) = 1;
  return t;
}

Word APComplex::project(const Word& collared_word) const {
  Word out;
  for (LetterId e : collared_word) out.push_back(edges.at(e).core);
  return out;
}

bool APComplex::connected() const {
  if (vertex_count == 0) return false;
  UnionFind uf(vertex_count);
  for (size_t e = 0; e < edges.size(); ++e) uf.unite(start_vertex[e], end_vertex[e]);
  for (size_t v = 0; v < vertex_count; ++v)
    if (uf.find(v) != 0) return false;
  return true;
}

APComplex collar(const Substitution& s, unsigned border_cap, size_t max_len) {
  APComplex c;
  c.base = s;
  c.forcing = border_forcing(s, border_cap);
  // A forced right border makes the right collar redundant, and likewise on
  // the left. Forcing at m > 1 would need a power of s, so only m = 1 counts.
  c.collar_left = !(c.forcing.left_forced_in && *c.forcing.left_forced_in == 1);
  c.collar_right = !(c.forcing.right_forced_in && *c.forcing.right_forced_in == 1);
  const size_t lw = c.collar_left ? 1 : 0;
  const size_t rw = c.collar_right ? 1 : 0;

  auto collared_at = [&](const Word& w, size_t p) {
    CollaredLetter cl;
    cl.core = w[p];
    if (lw) cl.left = w[p - 1];
    if (rw) cl.right = w[p + 1];
    return cl;
  };

  std::map<Word, size_t> index;  // context word -> edge id
  for (const Word& w : legal_words(s, 1 + lw + rw, max_len)) {
    index.emplace(w, c.edges.size());
    c.edges.push_back(collared_at(w, lw));
  }
  auto context_of = [&](const CollaredLetter& cl) {
    Word w;
    if (cl.left) w.push_back(*cl.left);
    w.push_back(cl.core);
    if (cl.right) w.push_back(*cl.right);
    return w;
  };
  auto edge_of = [&](const CollaredLetter& cl) {
    auto it = index.find(context_of(cl));
    if (it == index.end()) throw InternalError("collared image letter is not legal");
    return it->second;
  };

  std::vector<std::string> names;
  std::vector<Word> rules;
  for (size_t e = 0; e < c.edges.size(); ++e) {
    const CollaredLetter& cl = c.edges[e];
    Word ctx = context_of(cl);
    Word img = faultline::apply(s, ctx, max_len);
    size_t offset = cl.left ? s.image(*cl.left).size() : 0;
    Word rule;
    for (size_t p = offset; p < offset + s.image(cl.core).size(); ++p)
      rule.push_back(static_cast<LetterId>(edge_of(collared_at(img, p))));
    rules.push_back(std::move(rule));
  }
  for (size_t e = 0; e < c.edges.size(); ++e) names.push_back(c.edge_name(e));
  c.collared = Substitution(Alphabet(names), rules, s.name().empty() ? "" : s.name() + "_collared");
  c.edge_matrix = abelianization(c.collared);

  for (const Word& w : legal_words(s, 2 + lw + rw, max_len))
    c.transitions.emplace_back(edge_of(collared_at(w, lw)), edge_of(collared_at(w, lw + 1)));
  std::sort(c.transitions.begin(), c.transitions.end());

  // Slot 2e is the start of edge e, slot 2e+1 its end.
  const size_t slots = 2 * c.edges.size();
  UnionFind uf(slots);
  for (const auto& [e, f] : c.transitions) uf.unite(2 * e + 1, 2 * f);
  std::map<size_t, size_t> vertex_of_root;
  std::vector<size_t> vertex_of_slot(slots);
  for (size_t slot = 0; slot < slots; ++slot) {
    size_t root = uf.find(slot);
    auto it = vertex_of_root.find(root);
    if (it == vertex_of_root.end()) it = vertex_of_root.emplace(root, vertex_of_root.size()).first;
    vertex_of_slot[slot] = it->second;
  }
  c.vertex_count = vertex_of_root.size();
  for (size_t e = 0; e < c.edges.size(); ++e) {
    c.start_vertex.push_back(vertex_of_slot[2 * e]);
    c.end_vertex.push_back(vertex_of_slot[2 * e + 1]);
  }

  // Slot map: end of e -> end of the last image letter, start of f -> start
  // of the first image letter.
  std::vector<std::optional<size_t>> vmap(c.vertex_count);
  auto assign = [&](size_t from, size_t to) {
    if (vmap[from] && *vmap[from] != to)
      throw HypothesisError("one-letter collaring does not give a well-defined vertex map");
    vmap[from] = to;
  };
  for (size_t e = 0; e < c.edges.size(); ++e) {
    const Word& img = c.collared.image(static_cast<LetterId>(e));
    assign(c.start_vertex[e], c.start_vertex[img.front()]);
    assign(c.end_vertex[e], c.end_vertex[img.back()]);
  }
  for (size_t v = 0; v < c.vertex_count; ++v) {
    if (!vmap[v]) throw InternalError("vertex without a preimage slot");
    c.vertex_map.push_back(*vmap[v]);
  }
  return c;
}

IntMatrix coboundary(const APComplex& c) {
  IntMatrix d(c.edges.size(), c.vertex_count);
  for (size_t e = 0; e < c.edges.size(); ++e) {
    d(e, c.end_vertex[e]) += 1;
    d(e, c.start_vertex[e]) -= 1;
  }
  return d;
}

GradedGroupData graph_h1(const APComplex& c) {
  if (!c.connected()) throw HypothesisError("Anderson-Putnam complex is disconnected");
  IntMatrix delta = coboundary(c);
  SmithForm snf = smith_normal_form(delta);
  for (size_t i = 0; i < snf.rank; ++i)
    if (snf.d(i, i) != 1) throw InternalError("graph cohomology has torsion");
  const size_t e = c.edges.size();
  const size_t r = snf.rank;
  GradedGroupData out;
  out.h1_rank = e - r;
  if (out.h1_rank != e - c.vertex_count + 1) throw InternalError("Euler characteristic mismatch");
  out.h1_basis = snf.u_inv.block(0, r, e, out.h1_rank);
  IntMatrix proj = snf.u.block(r, 0, out.h1_rank, e);
  out.induced_h1 = proj * c.edge_matrix.transpose() * out.h1_basis;
  return out;
}

}  // namespace faultline
