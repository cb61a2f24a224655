#include "faultline/algebraic.hpp"

#include <stdexcept>
#include <tuple>

#include "faultline/errors.hpp"
#include "faultline/roots.hpp"

namespace faultline {

namespace {

mpz_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

mpq_class two_pow_neg(int bits) {
  mpq_class t(1);
  mpq_div_2exp(t.get_mpq_t(), t.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return t;
}

}  // namespace

NumberField::NumberField(Poly p, RationalInterval iv) : poly_(std::move(p)), interval_(std::move(iv)) {
  if (!poly_.is_monic() || !poly_.is_integral() || poly_.degree() < 1)
    throw std::invalid_argument("number field needs a monic integer polynomial");
  if (poly_.degree() == 1) {
    mpq_class r = -poly_.coeff(0);
    interval_ = {r, r};
    tight_ = interval_;
  } else {
    if (poly_.sign_at(interval_.lo) * poly_.sign_at(interval_.hi) >= 0)
      throw std::invalid_argument("interval does not bracket a simple root");
    tight_ = interval_;
    mpq_class target = two_pow_neg(128);
    while (tight_.width() > target) tight_ = bisect(tight_);
  }
  approx_ = mpq_class((tight_.lo + tight_.hi) / 2).get_d();
}

std::shared_ptr<const NumberField> NumberField::create(const Poly& minimal, RationalInterval isolating) {
  return std::shared_ptr<const NumberField>(new NumberField(minimal, std::move(isolating)));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const FieldPtr q = create(Poly::x(), {0, 0});
  return q;
}

std::shared_ptr<const NumberField> NumberField::largest_real_root_of(const Poly& p) {
  Poly q = p.squarefree();
  if (q.degree() < 1) throw std::invalid_argument("constant polynomial has no roots");
  if (!q.is_integral()) q = q.primitive_part().monic();
  if (!q.is_integral()) throw ValidationError("expected a monic integer polynomial: " + p.to_string());
  RootIsolation iso = isolate_roots(q, 64);
  auto idx = iso.largest_real();
  if (!idx) throw HypothesisError("polynomial has no real root: " + p.to_string());
  Poly minimal = factor_containing(q, iso, *idx);
  if (minimal.degree() == 1) return create(minimal, {});
  // Isolate the largest real root of the minimal polynomial with Sturm.
  SturmChain chain(minimal);
  mpq_class bound = root_bound(minimal);
  mpq_class lo = -bound, hi = bound;
  while (chain.count_roots(lo, hi) > 1) {
    mpq_class mid = (lo + hi) / 2;
    if (chain.count_roots(mid, hi) >= 1) lo = mid;
    else hi = mid;
  }
  // Nudge endpoints off any rational value (none are roots of an
  // irreducible polynomial of degree >= 2, so this is a no-op guard).
  return create(minimal, {lo, hi});
}

RationalInterval NumberField::root_interval(int bits) const {
  RationalInterval iv = tight_;
  mpq_class target = two_pow_neg(bits);
  while (iv.width() > target) iv = bisect(iv);
  return iv;
}

RationalInterval NumberField::bisect(const RationalInterval& iv) const {
  if (degree() == 1) return iv;
  mpq_class mid = (iv.lo + iv.hi) / 2;
  int s_lo = poly_.sign_at(iv.lo);
  int s_mid = poly_.sign_at(mid);
  if (s_mid == 0) throw InternalError("rational root of an irreducible polynomial");
  if (s_lo * s_mid < 0) return {iv.lo, mid};
  return {mid, iv.hi};
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<mpq_class> coeffs) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("algebraic number without a field");
  Poly p(std::move(coeffs));
  Poly r = Poly::divmod(p, field_->poly()).second;
  coeffs_.assign(static_cast<size_t>(field_->degree()), 0);
  for (int i = 0; i <= r.degree(); ++i) coeffs_[static_cast<size_t>(i)] = r.coeff(i);
}

AlgebraicNumber AlgebraicNumber::rational(FieldPtr field, const mpq_class& q) {
  return AlgebraicNumber(std::move(field), {q});
}

AlgebraicNumber AlgebraicNumber::generator(FieldPtr field) {
  return AlgebraicNumber(std::move(field), {0, 1});
}

AlgebraicNumber AlgebraicNumber::from_poly(FieldPtr field, const Poly& p) {
  return AlgebraicNumber(std::move(field), p.coeffs());
}

bool AlgebraicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool AlgebraicNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpq_class AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational value");
  return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

bool AlgebraicNumber::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

int AlgebraicNumber::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coeffs_[0]);
  Poly p = as_poly();
  RationalInterval iv = field_->tight_;
  for (;;) {
    RationalInterval e = p.eval(iv);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    iv = field_->bisect(iv);
  }
}

RationalInterval AlgebraicNumber::enclosure(int bits) const {
  if (is_rational()) {
    mpq_class v = rational_value();
    return {v, v};
  }
  Poly p = as_poly();
  mpq_class target = two_pow_neg(bits);
  RationalInterval iv = field_->tight_;
  for (;;) {
    RationalInterval e = p.eval(iv);
    if (e.width() <= target) return e;
    iv = field_->bisect(iv);
  }
}

double AlgebraicNumber::to_double() const {
  RationalInterval e = enclosure(60);
  return mpq_class((e.lo + e.hi) / 2).get_d();
}

mpz_class AlgebraicNumber::floor() const {
  if (is_rational()) return floor_q(rational_value());
  Poly p = as_poly();
  RationalInterval iv = field_->tight_;
  for (;;) {
    RationalInterval e = p.eval(iv);
    mpz_class a = floor_q(e.lo), b = floor_q(e.hi);
    // An irrational value is never an integer, so the bracket eventually
    // falls strictly between consecutive integers.
    if (a == b && e.lo != a) return a;
    if (a == b && e.lo == a && e.hi != a) return a;
    iv = field_->bisect(iv);
  }
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(L)");
  auto [g, s, t] = Poly::xgcd(as_poly(), field_->poly());
  if (g.degree() != 0) throw InternalError("defining polynomial is not irreducible");
  return from_poly(field_, s);
}

void AlgebraicNumber::check_same_field(const AlgebraicNumber& other) const {
  if (field_ != other.field_ && !(field_ && other.field_ && field_->poly() == other.field_->poly() &&
                                  field_->tight_.lo <= other.field_->tight_.hi &&
                                  other.field_->tight_.lo <= field_->tight_.hi))
    throw std::invalid_argument("algebraic numbers from different fields");
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  a.check_same_field(b);
  std::vector<mpq_class> c = a.coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return AlgebraicNumber(a.field_, std::move(c));
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
  std::vector<mpq_class> c = a.coeffs_;
  for (auto& q : c) q = -q;
  return AlgebraicNumber(a.field_, std::move(c));
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  a.check_same_field(b);
  return AlgebraicNumber::from_poly(a.field_, a.as_poly() * b.as_poly());
}

AlgebraicNumber operator*(const mpq_class& s, const AlgebraicNumber& a) {
  std::vector<mpq_class> c = a.coeffs_;
  for (auto& q : c) q *= s;
  return AlgebraicNumber(a.field_, std::move(c));
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  a.check_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b); }

std::string AlgebraicNumber::to_string() const { return as_poly().to_string('L'); }

AlgebraicNumber mod_reduce(const AlgebraicNumber& a, const AlgebraicNumber& modulus) {
  if (modulus.sign() <= 0) throw std::domain_error("mod_reduce needs a positive modulus");
  mpz_class k = (a / modulus).floor();
  AlgebraicNumber r = a - mpq_class(k) * modulus;
  if (r.sign() < 0 || compare(r, modulus) != std::strong_ordering::less)
    throw InternalError("mod_reduce left the fundamental interval");
  return r;
}

}  // namespace faultline
