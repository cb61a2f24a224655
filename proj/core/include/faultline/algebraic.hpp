#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "faultline/poly.hpp"

namespace faultline {

/// Q(L) for a real algebraic number L, given by its minimal polynomial and
/// a rational interval isolating L among the real roots.
class NumberField {
 public:
  /// `minimal` must be monic, integral and irreducible with exactly one
  /// root in `isolating`.
  static std::shared_ptr<const NumberField> create(const Poly& minimal, RationalInterval isolating);
  /// Field generated by the largest real root of `p` (any nonzero integer
  /// polynomial with a real root). Reduces to the irreducible factor.
  static std::shared_ptr<const NumberField> largest_real_root_of(const Poly& p);
  static std::shared_ptr<const NumberField> rationals();

  const Poly& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  const RationalInterval& root_interval() const { return interval_; }
  /// Isolating interval shrunk to width at most 2^-bits (fresh value).
  RationalInterval root_interval(int bits) const;
  /// One bisection step keeping the root inside.
  RationalInterval bisect(const RationalInterval& iv) const;
  double approx() const { return approx_; }

 private:
  NumberField(Poly p, RationalInterval iv);
  Poly poly_;
  RationalInterval interval_;
  RationalInterval tight_;
  double approx_ = 0;
  friend class AlgebraicNumber;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q(L) in the power basis 1, L, ..., L^(d-1).
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(FieldPtr field, std::vector<mpq_class> coeffs);
  static AlgebraicNumber rational(FieldPtr field, const mpq_class& q);
  static AlgebraicNumber generator(FieldPtr field);
  static AlgebraicNumber from_poly(FieldPtr field, const Poly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  Poly as_poly() const { return Poly(coeffs_); }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  mpq_class rational_value() const;
  bool is_integral() const;  // all power-basis coordinates are integers

  int sign() const;
  /// Certified enclosure of the real value.
  RationalInterval enclosure(int bits = 64) const;
  double to_double() const;
  mpz_class floor() const;

  AlgebraicNumber inverse() const;

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a);
  friend AlgebraicNumber operator*(const mpq_class& s, const AlgebraicNumber& a);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b);

  /// Power-basis text in the generator, e.g. "L-1", "3", "2*L^2-1/2".
  std::string to_string() const;

 private:
  void check_same_field(const AlgebraicNumber& other) const;
  FieldPtr field_;
  std::vector<mpq_class> coeffs_;
};

std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// a - k*modulus for the unique integer k putting the result in [0, modulus).
AlgebraicNumber mod_reduce(const AlgebraicNumber& a, const AlgebraicNumber& modulus);

}  // namespace faultline
