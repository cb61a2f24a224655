#include "faultline/spectral.hpp"

#include "faultline/errors.hpp"
#include "faultline/roots.hpp"
#include "faultline/substitution.hpp"

namespace faultline {

bool is_primitive(const IntMatrix& m) {
  if (!m.is_square() || m.empty()) return false;
  if (!m.is_nonnegative()) return false;
  const size_t n = m.rows();
  const size_t cap = (n - 1) * (n - 1) + 1;
  // Only the zero pattern matters, so clamp entries to 0/1 each step.
  IntMatrix pattern(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) pattern(i, j) = m(i, j) > 0 ? 1 : 0;
  IntMatrix p = pattern;
  for (size_t k = 1; k <= cap; ++k) {
    if (p.is_positive()) return true;
    p = p * pattern;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (p(i, j) > 0) p(i, j) = 1;
  }
  return false;
}

PerronData perron_data(const IntMatrix& m) {
  if (!m.is_square() || m.empty()) throw ValidationError("Perron data needs a non-empty square matrix");
  if (!m.is_nonnegative()) throw ValidationError("Perron data needs a non-negative matrix");
  if (m.is_zero()) throw HypothesisError("zero matrix has no Perron root");
  PerronData out;
  out.charpoly = m.charpoly();
  out.field = NumberField::largest_real_root_of(out.charpoly);
  out.lambda = AlgebraicNumber::generator(out.field);
  if (out.lambda.sign() <= 0) throw HypothesisError("matrix has no positive Perron root");
  out.primitive = is_primitive(m);
  return out;
}

std::string to_string(SpectralKind kind) {
  switch (kind) {
    case SpectralKind::Pisot: return "Pisot";
    case SpectralKind::Salem: return "Salem";
    case SpectralKind::NonPisotExpanding: return "NonPisotExpanding";
    case SpectralKind::Unimodular: return "Unimodular";
    case SpectralKind::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

namespace {

int multiplicity_of_factor(Poly p, const Poly& f) {
  int k = 0;
  while (true) {
    auto [q, r] = Poly::divmod(p, f);
    if (!r.is_zero()) return k;
    p = q;
    ++k;
  }
}

enum class Side { Inside, Outside, Unknown };

Side classify_root(const RootEnclosure& r) {
  RationalInterval mod = r.modulus(96);
  if (mod.hi < 1) return Side::Inside;
  if (mod.lo > 1) return Side::Outside;
  return Side::Unknown;
}

}  // namespace

SpectralClass spectral_classify(const IntMatrix& m, int bits) {
  PerronData perron = perron_data(m);
  SpectralClass out;
  const Poly& minimal = perron.field->poly();

  if (perron.lambda == AlgebraicNumber::rational(perron.field, 1)) {
    out.kind = SpectralKind::Unimodular;
  }

  // Conjugates of lambda, for the Pisot-number flag. Lambda is the largest
  // real root of both its minimal polynomial and the charpoly.
  if (perron.field->degree() > 1) {
    RootIsolation iso = isolate_roots(minimal, bits);
    const size_t top = *iso.largest_real();
    bool all_inside = true;
    for (size_t i = 0; i < iso.roots.size(); ++i)
      if (i != top && classify_root(iso.roots[i]) != Side::Inside) all_inside = false;
    out.perron_is_pisot = all_inside;
  } else {
    out.perron_is_pisot = compare(perron.lambda, AlgebraicNumber::rational(perron.field, 1)) ==
                          std::strong_ordering::greater;
  }

  // Non-Perron spectrum: every root of the squarefree charpoly except one
  // copy of lambda (kept when lambda is a repeated eigenvalue).
  Poly sf = perron.charpoly.squarefree();
  RootIsolation iso = isolate_roots(sf, bits);
  const size_t top = *iso.largest_real();
  const bool lambda_repeated = multiplicity_of_factor(perron.charpoly, minimal) > 1;
  bool unknown = false, outside = false;
  int straddling = 0;
  mpq_class max_lo = -1, max_hi = -1;
  for (size_t i = 0; i < iso.roots.size(); ++i) {
    if (i == top && !lambda_repeated) continue;
    const auto& r = iso.roots[i];
    out.has_second = true;
    RationalInterval mod = r.modulus(bits + 16);
    if (mod.lo > max_lo) max_lo = mod.lo;
    if (mod.hi > max_hi) max_hi = mod.hi;
    switch (classify_root(r)) {
      case Side::Outside: outside = true; break;
      case Side::Inside: break;
      default: ++straddling; break;
    }
  }
  if (out.has_second) out.second_modulus = {max_lo < 0 ? mpq_class(0) : max_lo, max_hi};
  if (straddling > 0) {
    // Roots whose modulus brackets 1 are exactly on the circle iff the
    // exact count agrees; otherwise refuse to guess.
    if (unit_circle_root_count(sf) != straddling) unknown = true;
  }

  if (out.kind == SpectralKind::Unimodular) return out;
  if (outside) out.kind = SpectralKind::NonPisotExpanding;
  else if (unknown) out.kind = SpectralKind::Undetermined;
  else if (straddling > 0) out.kind = SpectralKind::Salem;
  else out.kind = SpectralKind::Pisot;
  return out;
}

std::vector<AlgebraicNumber> tile_lengths(const Substitution& s) {
  IntMatrix m = abelianization(s);
  return tile_lengths(m, perron_data(m));
}

std::vector<AlgebraicNumber> tile_lengths(const IntMatrix& m, const PerronData& perron) {
  const size_t n = m.rows();
  const FieldPtr& f = perron.field;
  // Row-reduce (M^T - lambda I) over Q(lambda).
  std::vector<std::vector<AlgebraicNumber>> a(n, std::vector<AlgebraicNumber>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      a[i][j] = AlgebraicNumber::rational(f, mpq_class(m(j, i)));
      if (i == j) a[i][j] = a[i][j] - perron.lambda;
    }
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t p = row;
    while (p < n && a[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    AlgebraicNumber inv = a[row][col].inverse();
    for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      AlgebraicNumber factor = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] = a[i][j] - factor * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (n - pivot_col.size() != 1) throw HypothesisError("Perron eigenspace is not one-dimensional");
  size_t free_col = 0;
  for (size_t c = 0, k = 0; c < n; ++c) {
    if (k < pivot_col.size() && pivot_col[k] == c) ++k;
    else free_col = c;
  }
  std::vector<AlgebraicNumber> v(n, AlgebraicNumber::rational(f, 0));
  v[free_col] = AlgebraicNumber::rational(f, 1);
  for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];

  if (v[0].is_zero()) throw HypothesisError("Perron eigenvector has a zero entry");
  const bool flip = v[0].sign() < 0;
  for (auto& x : v)
    if (flip) x = -x;
  for (const auto& x : v)
    if (x.sign() <= 0) throw HypothesisError("Perron eigenvector is not positive");

  auto scale_to = [&](const AlgebraicNumber& first) {
    AlgebraicNumber k = first / v[0];
    std::vector<AlgebraicNumber> out;
    for (const auto& x : v) out.push_back(k * x);
    return out;
  };
  if (f->degree() >= 2) {
    auto with_lambda = scale_to(perron.lambda);
    bool integral = true;
    for (const auto& x : with_lambda) integral = integral && x.is_integral();
    if (integral) return with_lambda;
  }
  return scale_to(AlgebraicNumber::rational(f, 1));
}

}  // namespace faultline
