#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "faultline/poly.hpp"

namespace faultline {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  mpz_class& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix power(unsigned k) const;
  IntMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;

  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_positive() const;

  mpz_class determinant() const;
  /// Rank over Q.
  size_t rank() const;
  /// det(xI - A), monic with integer coefficients.
  Poly charpoly() const;

  std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  /// "[[1,1],[3,0]]".
  std::string to_string() const;
  std::vector<std::vector<std::string>> to_string_rows() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);
/// Companion matrix of a monic integer polynomial (acts on the column basis 1, x, ...).
IntMatrix companion(const Poly& monic_integer_poly);

}  // namespace faultline
