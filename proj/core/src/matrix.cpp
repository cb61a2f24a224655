#include "faultline/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace faultline {

IntMatrix::IntMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::power(unsigned k) const {
  if (!is_square()) throw std::invalid_argument("power of non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  IntMatrix b(nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_nonnegative() const {
  for (const auto& v : data_)
    if (v < 0) return false;
  return true;
}

bool IntMatrix::is_positive() const {
  for (const auto& v : data_)
    if (v <= 0) return false;
  return true;
}

namespace {

// Bareiss fraction-free elimination; returns rank and, for square input,
// the signed determinant in *det.
size_t bareiss(IntMatrix m, mpz_class* det) {
  const size_t rows = m.rows(), cols = m.cols();
  mpz_class prev = 1;
  int sign = 1;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
      sign = -sign;
    }
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        mpz_class v = m(rank, col) * m(i, j) - m(i, col) * m(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  if (det) {
    if (rows != cols || rank < rows) *det = 0;
    else *det = sign * m(rows - 1, cols - 1);
  }
  return rank;
}

}  // namespace

mpz_class IntMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  if (rows_ == 0) return 1;
  mpz_class d;
  bareiss(*this, &d);
  return d;
}

size_t IntMatrix::rank() const {
  if (empty()) return 0;
  return bareiss(*this, nullptr);
}

Poly IntMatrix::charpoly() const {
  if (!is_square()) throw std::invalid_argument("charpoly of non-square matrix");
  // Faddeev-LeVerrier; every intermediate quantity is integral and the
  // division by k is exact.
  const size_t n = rows_;
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  IntMatrix mk(n, n);
  for (size_t k = 1; k <= n; ++k) {
    IntMatrix next = (*this) * mk;
    for (size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    IntMatrix am = (*this) * mk;
    mpz_class tr = 0;
    for (size_t i = 0; i < n; ++i) tr += am(i, i);
    mpz_class kk = static_cast<unsigned long>(k);
    mpz_divexact(tr.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -tr;
  }
  std::vector<mpq_class> q;
  q.reserve(c.size());
  for (auto& z : c) q.emplace_back(z);
  return Poly(std::move(q));
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<mpz_class> out(rows_, 0);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  IntMatrix c = a;
  for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  IntMatrix c = a;
  for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < rows_; ++i) {
    if (i) out << ",";
    out << "[";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) out << ",";
      out << (*this)(i, j).get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::vector<std::vector<std::string>> IntMatrix::to_string_rows() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).get_str());
  return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      for (size_t p = 0; p < b.rows(); ++p)
        for (size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  IntMatrix m(r, c);
  size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

IntMatrix companion(const Poly& p) {
  if (!p.is_monic() || !p.is_integral()) throw std::invalid_argument("companion needs a monic integer polynomial");
  const size_t n = static_cast<size_t>(p.degree());
  IntMatrix c(n, n);
  for (size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (size_t i = 0; i < n; ++i) c(i, n - 1) = -mpz_class(p.coeff(static_cast<int>(i)));
  return c;
}

}  // namespace faultline
