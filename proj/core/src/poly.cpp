#include "faultline/poly.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "faultline/errors.hpp"

namespace faultline {

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  mpq_class p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(p, p + 4);
  return {*mn, *mx};
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::constant(const mpq_class& c) { return Poly(std::vector<mpq_class>{c}); }

Poly Poly::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> v(static_cast<size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_ints(const std::vector<long>& coeffs_low_first) {
  std::vector<mpq_class> v;
  v.reserve(coeffs_low_first.size());
  for (long c : coeffs_low_first) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

bool Poly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const mpq_class& q) { return q.get_den() == 1; });
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  mpq_class lead = c_.back();
  std::vector<mpq_class> v = c_;
  for (auto& q : v) q /= lead;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::primitive_part() const {
  if (c_.empty()) return {};
  mpz_class den_lcm = 1;
  for (const auto& q : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(c_.size());
  for (const auto& q : c_) ints.push_back(mpz_class(q * den_lcm));
  mpz_class g = 0;
  for (const auto& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (ints.back() < 0) g = -g;
  std::vector<mpq_class> v;
  v.reserve(ints.size());
  for (const auto& z : ints) v.emplace_back(mpz_class(z / g));
  return Poly(std::move(v));
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalInterval Poly::eval(const RationalInterval& x) const {
  RationalInterval acc{0, 0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

int Poly::sign_at(const mpq_class& x) const { return sgn(eval(x)); }

Poly Poly::reversed() const {
  std::vector<mpq_class> v(c_.rbegin(), c_.rend());
  return Poly(std::move(v));
}

Poly Poly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> v = c_;
  mpq_class pw = 1;
  for (auto& q : v) {
    q *= pw;
    pw *= s;
  }
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a) {
  std::vector<mpq_class> v = a.c_;
  for (auto& q : v) q = -q;
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const mpq_class& s, const Poly& p) {
  std::vector<mpq_class> v = p.c_;
  for (auto& q : v) q *= s;
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<mpq_class> quo(static_cast<size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    const mpq_class& top = rem[static_cast<size_t>(i)];
    if (top == 0) continue;
    mpq_class f = top / b.leading();
    quo[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::tuple<Poly, Poly, Poly> Poly::xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = constant(1), s1;
  Poly t0, t1 = constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class lead = r0.leading();
  mpq_class inv = 1 / lead;
  return {inv * r0, inv * s0, inv * t0};
}

Poly Poly::squarefree() const {
  if (degree() <= 0) return monic();
  Poly g = gcd(*this, derivative());
  return divmod(*this, g).first.monic();
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (c < 0) out << "-";
    else if (!first) out << "+";
    if (i == 0) {
      out << rational_to_string(mag);
    } else {
      if (mag != 1) out << rational_to_string(mag) << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (!chain_.back().is_zero()) {
    Poly r = Poly::divmod(chain_[chain_.size() - 2], chain_.back()).second;
    chain_.push_back(-r);
  }
  chain_.pop_back();
}

int SturmChain::sign_changes(const mpq_class& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
  return sign_changes(a) - sign_changes(b);
}

mpq_class root_bound(const Poly& p) {
  if (p.degree() <= 0) return 1;
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpq_class(abs(p.coeff(i) / p.leading())));
  return m + 1;
}

RationalInterval sqrt_bounds(const mpq_class& q, int bits) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  // floor(sqrt(q * 4^bits)) / 2^bits <= sqrt(q) <= (that + 1) / 2^bits
  mpz_class scale = 1;
  scale <<= 2 * bits;
  mpq_class scaled = q * scale;
  mpz_class fl = scaled.get_num() / scaled.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  mpz_class den = 1;
  den <<= bits;
  mpq_class lo(root, den), hi(root + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

}  // namespace faultline
