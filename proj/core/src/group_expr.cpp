#include "faultline/group_expr.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "faultline/errors.hpp"
#include "faultline/roots.hpp"
#include "faultline/smith.hpp"

namespace faultline {

namespace {

// Companion form with the negated coefficients in the first column and
// ones on the superdiagonal; x^2-x-3 gives [[1,1],[3,0]].
IntMatrix left_companion(const Poly& p) {
  const size_t d = static_cast<size_t>(p.degree());
  IntMatrix c(d, d);
  for (size_t i = 0; i < d; ++i) {
    c(i, 0) = mpz_class(-p.coeff(static_cast<int>(d - 1 - i)));
    if (i + 1 < d) c(i, i + 1) = 1;
  }
  return c;
}

int poly_cmp(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

int atom_cmp(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  switch (a.kind) {
    case AtomKind::ZLoc: return a.m < b.m ? -1 : (a.m > b.m ? 1 : 0);
    case AtomKind::AlgLoc: return poly_cmp(a.p, b.p);
    case AtomKind::Limit: {
      if (a.g.r != b.g.r) return a.g.r < b.g.r ? -1 : 1;
      return a.g.a_prime.to_string().compare(b.g.a_prime.to_string());
    }
  }
  return 0;
}

bool factors_equal(const std::vector<Atom>& a, const std::vector<Atom>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (atom_cmp(a[i], b[i]) != 0) return false;
  return true;
}

// Summands: fewer factors first, then by atoms; plain Z last.
bool term_less(const GroupExpr::Term& a, const GroupExpr::Term& b) {
  if (a.factors.empty() != b.factors.empty()) return b.factors.empty();
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
  for (size_t i = 0; i < a.factors.size(); ++i) {
    int c = atom_cmp(a.factors[i], b.factors[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Atom make_limit_atom(const DirectLimitGroup& g) {
  Atom a;
  a.kind = AtomKind::Limit;
  a.g = g;
  return a;
}

// Tensor product of a normalized factor list with one more atom.
void insert_factor(std::vector<Atom>& factors, Atom atom) {
  for (auto& f : factors) {
    if (f.kind == AtomKind::ZLoc && atom.kind == AtomKind::ZLoc) {
      f.m = lcm(f.m, atom.m);  // both squarefree: lcm is the radical of the product
      return;
    }
    if (f.kind == AtomKind::Limit && atom.kind == AtomKind::Limit) {
      f = make_limit_atom(direct_limit(kronecker(f.g.a_prime, atom.g.a_prime)));
      return;
    }
  }
  factors.push_back(std::move(atom));
}

std::vector<Atom> normalize_factors(std::vector<Atom> in) {
  std::vector<Atom> out;
  for (auto& a : in) insert_factor(out, std::move(a));
  std::sort(out.begin(), out.end(), [](const Atom& a, const Atom& b) { return atom_cmp(a, b) < 0; });
  return out;
}

}  // namespace

IntMatrix Atom::presentation() const {
  switch (kind) {
    case AtomKind::ZLoc: {
      IntMatrix s(1, 1);
      s(0, 0) = m;
      return s;
    }
    case AtomKind::AlgLoc: return left_companion(p);
    case AtomKind::Limit: return g.a_prime;
  }
  return {};
}

std::string Atom::to_string() const {
  switch (kind) {
    case AtomKind::ZLoc: return "Z[1/" + m.get_str() + "]";
    case AtomKind::AlgLoc: return "Z[1/L:" + p.to_string('x') + "]";
    case AtomKind::Limit: return "Lim(n=" + std::to_string(g.r) + "; " + g.a_prime.to_string() + ")";
  }
  return "?";
}

GroupExpr GroupExpr::Z(unsigned power) {
  GroupExpr e;
  if (power) e.terms_.push_back({{}, power});
  return e;
}

GroupExpr GroupExpr::zloc(const mpz_class& m) {
  mpz_class r = radical(m);
  if (r == 1) return Z();
  Atom a;
  a.kind = AtomKind::ZLoc;
  a.m = r;
  GroupExpr e;
  e.terms_.push_back({{a}, 1});
  return e;
}

GroupExpr GroupExpr::algloc(const Poly& p) {
  if (!p.is_monic() || !p.is_integral() || p.degree() < 1)
    throw ValidationError("algebraic localization needs a monic integer polynomial");
  if (p.degree() == 1) return zloc(mpz_class(p.coeff(0)));
  Atom a;
  a.kind = AtomKind::AlgLoc;
  a.p = p;
  GroupExpr e;
  e.terms_.push_back({{a}, 1});
  return e;
}

GroupExpr GroupExpr::limit(const DirectLimitGroup& g) {
  if (g.trivial()) return zero();
  GroupExpr e;
  e.terms_.push_back({{make_limit_atom(g)}, 1});
  return e;
}

void GroupExpr::normalize() {
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (t.multiplicity == 0) continue;
    t.factors = normalize_factors(std::move(t.factors));
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Term& m) { return factors_equal(m.factors, t.factors); });
    if (it != merged.end()) it->multiplicity += t.multiplicity;
    else merged.push_back(std::move(t));
  }
  // Lone Limit summands collapse into one block-diagonal Limit.
  std::vector<IntMatrix> blocks;
  size_t limit_summands = 0;
  for (const auto& t : merged)
    if (t.factors.size() == 1 && t.factors[0].kind == AtomKind::Limit) limit_summands += t.multiplicity;
  if (limit_summands >= 2) {
    std::vector<Term> rest;
    for (auto& t : merged) {
      if (t.factors.size() == 1 && t.factors[0].kind == AtomKind::Limit) {
        for (unsigned k = 0; k < t.multiplicity; ++k) blocks.push_back(t.factors[0].g.a_prime);
      } else {
        rest.push_back(std::move(t));
      }
    }
    rest.push_back({{make_limit_atom(direct_limit(block_diagonal(blocks)))}, 1});
    merged = std::move(rest);
  }
  std::stable_sort(merged.begin(), merged.end(), term_less);
  terms_ = std::move(merged);
}

GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b) {
  GroupExpr e;
  e.terms_ = a.terms_;
  e.terms_.insert(e.terms_.end(), b.terms_.begin(), b.terms_.end());
  e.normalize();
  return e;
}

GroupExpr tensor(const GroupExpr& a, const GroupExpr& b) {
  GroupExpr e;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      GroupExpr::Term t;
      t.factors = ta.factors;
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      t.multiplicity = ta.multiplicity * tb.multiplicity;
      e.terms_.push_back(std::move(t));
    }
  e.normalize();
  return e;
}

GroupExpr GroupExpr::power(unsigned k) const {
  GroupExpr e = *this;
  for (auto& t : e.terms_) t.multiplicity *= k;
  e.normalize();
  return e;
}

IntMatrix GroupExpr::presentation() const {
  std::vector<IntMatrix> blocks;
  for (const auto& t : terms_) {
    IntMatrix k = IntMatrix::identity(1);
    for (const auto& f : t.factors) k = kronecker(k, f.presentation());
    for (unsigned i = 0; i < t.multiplicity; ++i) blocks.push_back(k);
  }
  if (blocks.empty()) return IntMatrix(0, 0);
  return block_diagonal(blocks);
}

std::string GroupExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i) out += " (+) ";
    std::string body;
    if (t.factors.empty()) body = "Z";
    for (size_t j = 0; j < t.factors.size(); ++j) {
      if (j) body += " (x) ";
      body += t.factors[j].to_string();
    }
    if (t.multiplicity > 1) {
      if (t.factors.size() > 1) body = "(" + body + ")";
      body += "^" + std::to_string(t.multiplicity);
    }
    out += body;
  }
  return out;
}

GroupInvariants invariants(const GroupExpr& x) {
  GroupInvariants inv;
  IntMatrix p = x.presentation();
  inv.rank = p.rows();
  inv.charpoly = inv.rank ? p.charpoly() : Poly::constant(1);
  inv.det = inv.rank ? mpz_class(abs(p.determinant())) : mpz_class(1);
  return inv;
}

std::string to_string(RecognitionRule rule) {
  switch (rule) {
    case RecognitionRule::Unimodular: return "unimodular";
    case RecognitionRule::RankOne: return "rank-one";
    case RecognitionRule::Irreducible: return "irreducible-charpoly";
    case RecognitionRule::IntegerEigen: return "integer-eigenvalues";
    case RecognitionRule::Unrecognized: return "unrecognized";
    case RecognitionRule::Trivial: return "trivial";
  }
  return "unrecognized";
}

namespace {

// Integer eigenvalues with multiplicity when the charpoly splits over Z.
bool integer_roots(const Poly& charpoly, std::map<mpz_class, int>& roots) {
  Poly p = charpoly;
  while (p.degree() > 0) {
    mpz_class c0(p.coeff(0));
    if (c0 == 0) {
      roots[0] += 1;
      p = Poly::divmod(p, Poly::x()).first;
      continue;
    }
    bool found = false;
    mpz_class a = abs(c0);
    for (mpz_class d = 1; d * d <= a && !found; ++d) {
      if (a % d != 0) continue;
      for (const mpz_class& cand : {mpz_class(d), mpz_class(-d), mpz_class(a / d), mpz_class(-a / d)}) {
        if (p.sign_at(mpq_class(cand)) == 0) {
          roots[cand] += 1;
          p = Poly::divmod(p, Poly::from_ints({0, 1}) - Poly::constant(mpq_class(cand))).first;
          found = true;
          break;
        }
      }
    }
    if (!found) return false;
  }
  return true;
}


// Product of (a - e)^mult over the given eigenvalues.
IntMatrix eigen_product(const IntMatrix& a, const std::vector<std::pair<mpz_class, int>>& eig) {
  IntMatrix p = IntMatrix::identity(a.rows());
  for (const auto& [e, mult] : eig) {
    IntMatrix shifted = a;
    for (size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= e;
    for (int k = 0; k < mult; ++k) p = p * shifted;
  }
  return p;
}

// Solves c * x = b for x when c has full column rank; nullopt otherwise.
std::optional<std::vector<std::vector<mpq_class>>> solve_columns(const IntMatrix& c, const IntMatrix& b) {
  const size_t rows = c.rows(), n = c.cols(), m = b.cols();
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(n + m));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = c(i, j);
    for (size_t j = 0; j < m; ++j) t[i][n + j] = b(i, j);
  }
  size_t row = 0;
  for (size_t col = 0; col < n; ++col, ++row) {
    size_t piv = row;
    while (piv < rows && t[piv][col] == 0) ++piv;
    if (piv == rows) return std::nullopt;
    std::swap(t[piv], t[row]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || t[i][col] == 0) continue;
      mpq_class f = t[i][col] / t[row][col];
      for (size_t j = col; j < n + m; ++j) t[i][j] -= f * t[row][j];
    }
  }
  std::vector<std::vector<mpq_class>> x(n, std::vector<mpq_class>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) x[i][j] = t[i][n + j] / t[i][i];
  return x;
}

// True when every prime dividing q's denominator divides m.
bool denominator_divides(const mpq_class& q, const mpz_class& m) {
  mpz_class d = q.get_den();
  for (mpz_class g = gcd(d, m); g > 1; g = gcd(d, m)) d /= g;
  return d == 1;
}

// lim(Z^r, a) for a nonsingular a with integer spectrum. The unit
// generalized eigenspace always splits off as Z^k (the quotient by the
// infinitely divisible part is free). The rest splits by eigenvalue
// radical when each class projection of the non-unit lattice lands in the
// class lattice localized at that radical.
std::optional<GroupExpr> integer_eigen_split(const IntMatrix& a, const std::map<mpz_class, int>& eig) {
  std::map<mpz_class, std::vector<std::pair<mpz_class, int>>> classes;
  std::vector<std::pair<mpz_class, int>> nonunit;
  unsigned units = 0;
  for (const auto& [e, mult] : eig) {
    if (abs(e) == 1) {
      units += static_cast<unsigned>(mult);
      continue;
    }
    classes[radical(e)].push_back({e, mult});
    nonunit.push_back({e, mult});
  }
  GroupExpr sum = GroupExpr::Z(units);
  if (classes.empty()) return sum;
  auto add_class = [&](const mpz_class& m, size_t d) {
    for (size_t i = 0; i < d; ++i) sum = direct_sum(sum, GroupExpr::zloc(m));
  };
  IntMatrix lattice = integer_kernel(eigen_product(a, nonunit));
  if (classes.size() == 1) {
    add_class(classes.begin()->first, lattice.cols());
    return sum;
  }
  std::vector<std::pair<mpz_class, IntMatrix>> parts;
  size_t total = 0;
  for (const auto& [m, members] : classes) {
    parts.push_back({m, integer_kernel(eigen_product(a, members))});
    total += parts.back().second.cols();
  }
  IntMatrix basis(a.rows(), total);
  for (size_t col = 0, p = 0; p < parts.size(); ++p)
    for (size_t j = 0; j < parts[p].second.cols(); ++j, ++col)
      for (size_t i = 0; i < a.rows(); ++i) basis(i, col) = parts[p].second(i, j);
  auto coords = solve_columns(basis, lattice);
  if (!coords) return std::nullopt;
  for (size_t row = 0, p = 0; p < parts.size(); ++p)
    for (size_t j = 0; j < parts[p].second.cols(); ++j, ++row)
      for (const auto& q : (*coords)[row])
        if (!denominator_divides(q, parts[p].first)) return std::nullopt;
  for (const auto& [m, k] : parts) add_class(m, k.cols());
  return sum;
}
}  // namespace

Recognition recognize_with_rule(const DirectLimitGroup& g) {
  Recognition out;
  if (g.trivial()) {
    out.rule = RecognitionRule::Trivial;
    return out;
  }
  const mpz_class det = abs(g.det_prime);
  if (det == 1) {
    out.expr = GroupExpr::Z(static_cast<unsigned>(g.r));
    out.rule = RecognitionRule::Unimodular;
    return out;
  }
  if (g.r == 1) {
    out.expr = GroupExpr::zloc(g.a_prime(0, 0));
    out.rule = RecognitionRule::RankOne;
    return out;
  }
  if (is_irreducible(g.charpoly_prime)) {
    out.expr = GroupExpr::algloc(g.charpoly_prime);
    out.rule = RecognitionRule::Irreducible;
    return out;
  }
  std::map<mpz_class, int> eig;
  if (integer_roots(g.charpoly_prime, eig)) {
    if (auto split = integer_eigen_split(g.a_prime, eig)) {
      out.expr = *split;
      out.rule = RecognitionRule::IntegerEigen;
      return out;
    }
  }
  out.expr = GroupExpr::limit(g);
  out.rule = RecognitionRule::Unrecognized;
  return out;
}

GroupExpr recognize(const DirectLimitGroup& g) { return recognize_with_rule(g).expr; }

}  // namespace faultline
