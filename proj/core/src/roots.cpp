#include "faultline/roots.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "faultline/errors.hpp"

namespace faultline {

namespace {

struct CF {
  mpf_class re, im;
};

CF cf(mp_bitcnt_t prec) { return {mpf_class(0, prec), mpf_class(0, prec)}; }

CF mul(const CF& a, const CF& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
CF add(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
CF sub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
CF divide(const CF& a, const CF& b) {
  mpf_class den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
mpf_class abs2(const CF& a) { return a.re * a.re + a.im * a.im; }

struct CQ {
  mpq_class re, im;
};
CQ mul(const CQ& a, const CQ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
mpq_class abs2(const CQ& a) { return a.re * a.re + a.im * a.im; }

mpq_class to_q(const mpf_class& f) {
  mpq_class q;
  mpq_set_f(q.get_mpq_t(), f.get_mpf_t());
  return q;
}

// Durand-Kerner simultaneous iteration on the monic version of p.
std::vector<CF> durand_kerner(const Poly& p, mp_bitcnt_t prec) {
  const int n = p.degree();
  std::vector<CF> coeffs;
  for (int i = 0; i <= n; ++i) {
    mpf_class c(p.coeff(i) / p.leading(), prec);
    coeffs.push_back({c, mpf_class(0, prec)});
  }
  auto eval = [&](const CF& z) {
    CF acc = cf(prec);
    for (int i = n; i >= 0; --i) acc = add(mul(acc, z), coeffs[static_cast<size_t>(i)]);
    return acc;
  };
  mpf_class radius(root_bound(p), prec);
  CF seed{mpf_class(0.4, prec), mpf_class(0.9, prec)};
  std::vector<CF> z(static_cast<size_t>(n));
  CF pw{mpf_class(1, prec), mpf_class(0, prec)};
  for (int i = 0; i < n; ++i) {
    pw = mul(pw, seed);
    z[static_cast<size_t>(i)] = {pw.re * radius, pw.im * radius};
  }
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 24);
  for (int iter = 0; iter < 4000; ++iter) {
    mpf_class worst(0, prec);
    for (int i = 0; i < n; ++i) {
      CF num = eval(z[static_cast<size_t>(i)]);
      CF den{mpf_class(1, prec), mpf_class(0, prec)};
      for (int j = 0; j < n; ++j)
        if (j != i) den = mul(den, sub(z[static_cast<size_t>(i)], z[static_cast<size_t>(j)]));
      if (den.re == 0 && den.im == 0) {
        den.re = tol;
      }
      CF step = divide(num, den);
      z[static_cast<size_t>(i)] = sub(z[static_cast<size_t>(i)], step);
      mpf_class s = abs2(step);
      if (s > worst) worst = s;
    }
    if (worst < tol * tol) break;
  }
  return z;
}

}  // namespace

RationalInterval RootEnclosure::modulus(int bits) const {
  RationalInterval center = sqrt_bounds(re * re + im * im, bits);
  mpq_class lo = center.lo - radius;
  if (lo < 0) lo = 0;
  return {lo, center.hi + radius};
}

std::optional<size_t> RootIsolation::largest_real() const {
  std::optional<size_t> best;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].real) continue;
    if (!best || roots[i].re > roots[*best].re) best = i;
  }
  return best;
}

RootIsolation isolate_roots(const Poly& p, int bits) {
  if (p.degree() < 1) throw std::invalid_argument("isolate_roots needs degree >= 1");
  RootIsolation out;
  if (p.degree() == 1) {
    RootEnclosure r;
    r.re = -p.coeff(0) / p.coeff(1);
    r.im = 0;
    r.radius = 0;
    r.real = true;
    out.roots.push_back(r);
    out.max_radius = 0;
    out.working_bits = bits;
    return out;
  }
  const int n = p.degree();
  mpq_class target(1);
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));

  for (int attempt = 0; attempt < 5; ++attempt) {
    const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>((2 * bits + 128) << attempt);
    std::vector<CF> approx = durand_kerner(p, prec);

    // Snap near-real approximations onto the axis and make complex
    // approximations exact conjugate pairs.
    mpf_class snap(1, prec);
    mpf_div_2exp(snap.get_mpf_t(), snap.get_mpf_t(), prec / 2);
    std::vector<bool> done(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      auto& zi = approx[static_cast<size_t>(i)];
      if (abs(zi.im) < snap) {
        zi.im = 0;
        done[static_cast<size_t>(i)] = true;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<size_t>(i)] || approx[static_cast<size_t>(i)].im < 0) continue;
      int best = -1;
      mpf_class best_d(0, prec);
      for (int j = 0; j < n; ++j) {
        if (done[static_cast<size_t>(j)] || approx[static_cast<size_t>(j)].im >= 0) continue;
        CF conj{approx[static_cast<size_t>(i)].re, -approx[static_cast<size_t>(i)].im};
        mpf_class d = abs2(sub(conj, approx[static_cast<size_t>(j)]));
        if (best < 0 || d < best_d) {
          best = j;
          best_d = d;
        }
      }
      done[static_cast<size_t>(i)] = true;
      if (best >= 0) {
        approx[static_cast<size_t>(best)] = {approx[static_cast<size_t>(i)].re, -approx[static_cast<size_t>(i)].im};
        done[static_cast<size_t>(best)] = true;
      }
    }

    std::vector<CQ> zq;
    zq.reserve(approx.size());
    for (const auto& z : approx) zq.push_back({to_q(z.re), to_q(z.im)});

    // Weierstrass inclusion radii r_i = n |p(z_i)| / (|a_n| prod |z_i - z_j|).
    std::vector<mpq_class> radius(static_cast<size_t>(n));
    bool degenerate = false;
    for (int i = 0; i < n && !degenerate; ++i) {
      CQ val{0, 0};
      for (int k = n; k >= 0; --k) {
        val = mul(val, zq[static_cast<size_t>(i)]);
        val.re += p.coeff(k);
      }
      mpq_class den2 = p.leading() * p.leading();
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        CQ diff{zq[static_cast<size_t>(i)].re - zq[static_cast<size_t>(j)].re,
                zq[static_cast<size_t>(i)].im - zq[static_cast<size_t>(j)].im};
        den2 *= abs2(diff);
      }
      if (den2 == 0) {
        degenerate = true;
        break;
      }
      mpq_class r2 = abs2(val) / den2 * (n * n);
      radius[static_cast<size_t>(i)] = sqrt_bounds(r2, bits + 16).hi;
    }
    if (degenerate) continue;

    bool separated = true;
    for (int i = 0; i < n && separated; ++i)
      for (int j = i + 1; j < n; ++j) {
        CQ diff{zq[static_cast<size_t>(i)].re - zq[static_cast<size_t>(j)].re,
                zq[static_cast<size_t>(i)].im - zq[static_cast<size_t>(j)].im};
        mpq_class sum = radius[static_cast<size_t>(i)] + radius[static_cast<size_t>(j)];
        if (abs2(diff) <= sum * sum) {
          separated = false;
          break;
        }
      }
    mpq_class worst = *std::max_element(radius.begin(), radius.end());
    if (!separated || worst >= target) continue;

    out.roots.clear();
    for (int i = 0; i < n; ++i) {
      RootEnclosure r;
      r.re = zq[static_cast<size_t>(i)].re;
      r.im = zq[static_cast<size_t>(i)].im;
      r.radius = radius[static_cast<size_t>(i)];
      r.real = (r.im == 0);
      out.roots.push_back(std::move(r));
    }
    out.max_radius = worst;
    out.working_bits = static_cast<int>(prec);
    return out;
  }
  throw InternalError("root isolation failed to certify for " + p.to_string());
}

Poly factor_containing(const Poly& p, const RootIsolation& iso, size_t index) {
  const int n = p.degree();
  if (n <= 1) return p.monic();

  // Conjugation classes: a real root alone, or a complex pair.
  std::vector<std::vector<size_t>> classes;
  std::vector<bool> used(iso.roots.size(), false);
  size_t target_class = 0;
  for (size_t i = 0; i < iso.roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<size_t> cls{i};
    used[i] = true;
    if (!iso.roots[i].real) {
      for (size_t j = i + 1; j < iso.roots.size(); ++j)
        if (!used[j] && iso.roots[j].re == iso.roots[i].re && iso.roots[j].im == -iso.roots[i].im) {
          cls.push_back(j);
          used[j] = true;
          break;
        }
    }
    if (std::find(cls.begin(), cls.end(), index) != cls.end()) target_class = classes.size();
    classes.push_back(std::move(cls));
  }
  std::vector<size_t> others;
  for (size_t c = 0; c < classes.size(); ++c)
    if (c != target_class) others.push_back(c);
  if (others.size() > 18) return p.monic();

  const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(std::max(iso.working_bits, 256));
  std::vector<CF> z;
  for (const auto& r : iso.roots) {
    mpf_class re(0, prec), im(0, prec);
    mpf_set_q(re.get_mpf_t(), r.re.get_mpq_t());
    mpf_set_q(im.get_mpf_t(), r.im.get_mpq_t());
    z.push_back({re, im});
  }
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 40);

  std::vector<uint32_t> masks(size_t{1} << others.size());
  std::iota(masks.begin(), masks.end(), 0u);
  auto degree_of = [&](uint32_t m) {
    size_t d = classes[target_class].size();
    for (size_t k = 0; k < others.size(); ++k)
      if (m & (1u << k)) d += classes[others[k]].size();
    return d;
  };
  std::stable_sort(masks.begin(), masks.end(),
                   [&](uint32_t a, uint32_t b) { return degree_of(a) < degree_of(b); });

  for (uint32_t m : masks) {
    if (degree_of(m) >= static_cast<size_t>(n)) break;
    std::vector<size_t> roots = classes[target_class];
    for (size_t k = 0; k < others.size(); ++k)
      if (m & (1u << k)) roots.insert(roots.end(), classes[others[k]].begin(), classes[others[k]].end());
    std::vector<CF> g{{mpf_class(1, prec), mpf_class(0, prec)}};
    for (size_t r : roots) {
      std::vector<CF> next(g.size() + 1, cf(prec));
      for (size_t i = 0; i < g.size(); ++i) {
        next[i + 1] = add(next[i + 1], g[i]);
        next[i] = sub(next[i], mul(g[i], z[r]));
      }
      g = std::move(next);
    }
    std::vector<mpq_class> ints;
    bool ok = true;
    for (const auto& c : g) {
      mpf_class rounded = floor(c.re + 0.5);
      if (abs(c.re - rounded) > tol || abs(c.im) > tol) {
        ok = false;
        break;
      }
      ints.push_back(to_q(rounded));
    }
    if (!ok) continue;
    Poly cand(std::move(ints));
    if (Poly::divmod(p, cand).second.is_zero()) return cand;
  }
  return p.monic();
}

bool is_irreducible(const Poly& p) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  Poly m = p.monic();
  if (Poly::gcd(m, m.derivative()).degree() > 0) return false;
  RootIsolation iso = isolate_roots(m, 64);
  return factor_containing(m, iso, 0).degree() == m.degree();
}

int unit_circle_root_count(const Poly& p) {
  Poly q = p.squarefree();
  if (q.degree() <= 0) return 0;
  int count = 0;
  for (long s : {1L, -1L}) {
    if (q.eval(s) == 0) {
      ++count;
      q = Poly::divmod(q, Poly::from_ints({-s, 1})).first;
    }
  }
  if (q.degree() <= 0) return count;
  Poly g = Poly::gcd(q, q.reversed());
  if (g.degree() <= 0) return count;
  // g is palindromic of even degree 2d with no roots at +-1; write
  // x^-d g(x) = h(x + 1/x) using T_0 = 2, T_1 = y, T_{k+1} = y T_k - T_{k-1}.
  const int d = g.degree() / 2;
  Poly h = Poly::constant(g.coeff(d));
  Poly t_prev = Poly::constant(2), t_cur = Poly::x();
  for (int k = 1; k <= d; ++k) {
    h = h + g.coeff(d + k) * t_cur;
    Poly t_next = Poly::x() * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  h = h.squarefree();
  if (h.degree() <= 0) return count;
  SturmChain chain(h);
  int inside = chain.count_roots(-2, 2);
  if (h.eval(2) == 0) --inside;
  return count + 2 * inside;
}

}  // namespace faultline
