#include "faultline/smith.hpp"

#include <utility>

namespace faultline {

namespace {

// Row/column operations applied simultaneously to the working matrix, the
// transform, and the transform's inverse.
class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& a)
      : m_(a),
        u_(IntMatrix::identity(a.rows())),
        u_inv_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())),
        v_inv_(IntMatrix::identity(a.cols())) {}

  // row_i += k * row_j
  void add_row(size_t i, size_t j, const mpz_class& k) {
    if (k == 0) return;
    for (size_t c = 0; c < m_.cols(); ++c) m_(i, c) += k * m_(j, c);
    for (size_t c = 0; c < u_.cols(); ++c) u_(i, c) += k * u_(j, c);
    // inverse: col_j -= k * col_i
    for (size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, j) -= k * u_inv_(r, i);
  }
  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < m_.cols(); ++c) std::swap(m_(i, c), m_(j, c));
    for (size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    for (size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < m_.cols(); ++c) m_(i, c) = -m_(i, c);
    for (size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    for (size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
  }
  // col_i += k * col_j
  void add_col(size_t i, size_t j, const mpz_class& k) {
    if (k == 0) return;
    for (size_t r = 0; r < m_.rows(); ++r) m_(r, i) += k * m_(r, j);
    for (size_t r = 0; r < v_.rows(); ++r) v_(r, i) += k * v_(r, j);
    // inverse: row_j -= k * row_i
    for (size_t c = 0; c < v_inv_.cols(); ++c) v_inv_(j, c) -= k * v_inv_(i, c);
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < m_.rows(); ++r) std::swap(m_(r, i), m_(r, j));
    for (size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
    for (size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
  }

  SmithForm run() {
    const size_t rows = m_.rows(), cols = m_.cols();
    size_t t = 0;
    for (; t < rows && t < cols; ++t) {
      if (!move_smallest_to(t)) break;
      for (;;) {
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
          if (m_(i, t) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), m_(i, t).get_mpz_t(), m_(t, t).get_mpz_t());
          add_row(i, t, -q);
          if (m_(i, t) != 0) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
          if (m_(t, j) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), m_(t, j).get_mpz_t(), m_(t, t).get_mpz_t());
          add_col(j, t, -q);
          if (m_(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_smallest_to(t);
          continue;
        }
        // Divisibility: if some entry of the trailing block is not a
        // multiple of the pivot, fold its row in and repeat.
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
          for (size_t j = t + 1; j < cols; ++j)
            if (!mpz_divisible_p(m_(i, j).get_mpz_t(), m_(t, t).get_mpz_t())) {
              add_row(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
        move_smallest_to(t);
      }
      if (m_(t, t) < 0) negate_row(t);
    }
    SmithForm out;
    out.rank = 0;
    for (size_t i = 0; i < rows && i < cols; ++i)
      if (m_(i, i) != 0) ++out.rank;
    out.u = std::move(u_);
    out.u_inv = std::move(u_inv_);
    out.d = std::move(m_);
    out.v = std::move(v_);
    out.v_inv = std::move(v_inv_);
    return out;
  }

 private:
  // Moves the nonzero entry of least magnitude in the trailing block to
  // (t, t). Returns false when the block is zero.
  bool move_smallest_to(size_t t) {
    size_t bi = 0, bj = 0;
    bool found = false;
    mpz_class best;
    for (size_t i = t; i < m_.rows(); ++i)
      for (size_t j = t; j < m_.cols(); ++j) {
        if (m_(i, j) == 0) continue;
        mpz_class a = abs(m_(i, j));
        if (!found || a < best) {
          best = a;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  IntMatrix m_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

std::vector<mpz_class> SmithForm::invariant_factors() const {
  std::vector<mpz_class> f;
  for (size_t i = 0; i < d.rows() && i < d.cols(); ++i) f.push_back(d(i, i));
  return f;
}

SmithForm smith_normal_form(const IntMatrix& a) { return SmithWorker(a).run(); }

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  const size_t n = a.cols();
  return s.v.block(0, s.rank, n, n - s.rank);
}

}  // namespace faultline
