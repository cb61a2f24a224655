#pragma once

#include <gmpxx.h>

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace faultline {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  mpq_class lo;
  mpq_class hi;

  mpq_class width() const { return hi - lo; }
  bool contains(const mpq_class& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);

/// Dense univariate polynomial with rational coefficients, stored
/// lowest degree first with no trailing zeros (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpq_class> coeffs);
  static Poly constant(const mpq_class& c);
  static Poly monomial(const mpq_class& c, int degree);
  static Poly x() { return monomial(1, 1); }
  static Poly from_ints(const std::vector<long>& coeffs_low_first);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;
  const mpq_class& leading() const { return c_.back(); }

  bool is_integral() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly monic() const;
  Poly derivative() const;
  /// Scales to a primitive integer polynomial with positive leading coefficient.
  Poly primitive_part() const;

  mpq_class eval(const mpq_class& x) const;
  RationalInterval eval(const RationalInterval& x) const;
  int sign_at(const mpq_class& x) const;

  /// Exact evaluation at x and 1/x reversal x^deg * p(1/x).
  Poly reversed() const;
  /// p(s*x).
  Poly scaled(const mpq_class& s) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const mpq_class& s, const Poly& p);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on division by the zero polynomial.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);
  /// Returns (g, s, t) with s*a + t*b = g, g monic.
  static std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);

  /// Squarefree part, normalized monic.
  Poly squarefree() const;

  /// Canonical text such as "x^2-x-3" or "2*x^3+x-1/2".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Sturm chain for a squarefree polynomial.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);
  /// Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const mpq_class& a, const mpq_class& b) const;

 private:
  int sign_changes(const mpq_class& x) const;
  std::vector<Poly> chain_;
};

/// Cauchy bound: every complex root has modulus strictly below the result.
mpq_class root_bound(const Poly& p);

/// Rational bracket of sqrt(q) with width at most 2^-bits.
RationalInterval sqrt_bounds(const mpq_class& q, int bits);

std::string rational_to_string(const mpq_class& q);

}  // namespace faultline
