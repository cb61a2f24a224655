#pragma once

// Independent reference computations used to cross-check the library.
// They favor obviously-correct brute force over speed.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "faultline/algebraic.hpp"
#include "faultline/matrix.hpp"
#include "faultline/spectral.hpp"
#include "faultline/substitution.hpp"

namespace oracle {

using faultline::AlgebraicNumber;
using faultline::IntMatrix;
using faultline::LetterId;
using faultline::Substitution;
using faultline::Word;

/// Plain string rewriting for one-character letters.
inline std::string rewrite(const std::map<char, std::string>& rules, std::string w, unsigned k) {
  for (unsigned i = 0; i < k; ++i) {
    std::string next;
    for (char c : w) next += rules.at(c);
    w = std::move(next);
  }
  return w;
}

inline void subsets(size_t n, size_t k, size_t start, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline mpz_class leibniz_det(const std::vector<std::vector<mpz_class>>& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    mpz_class term = 1;
    for (size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    size_t inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Invariant factors from determinantal divisors: d_k is the gcd of all
/// k x k minors and the k-th factor is d_k / d_(k-1). Zero factors are
/// omitted, so the result has length rank(a).
inline std::vector<mpz_class> minor_invariant_factors(const IntMatrix& a) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<size_t>> rs, cs;
    std::vector<size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
        for (size_t i = 0; i < k; ++i)
          for (size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        mpz_class d = leibniz_det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, size_t rows, size_t cols, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

inline Substitution random_primitive(std::mt19937& rng, size_t letters, size_t max_image) {
  std::vector<std::string> names;
  for (size_t i = 0; i < letters; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::uniform_int_distribution<size_t> len(1, max_image), pick(0, letters - 1);
  for (;;) {
    std::vector<Word> rules(letters);
    for (auto& r : rules) {
      size_t n = len(rng);
      for (size_t i = 0; i < n; ++i) r.push_back(static_cast<LetterId>(pick(rng)));
    }
    Substitution s(faultline::Alphabet(names), rules, "random");
    if (faultline::is_primitive(faultline::abelianization(s))) return s;
  }
}

/// Same letter counts in every image, letters shuffled.
inline Substitution shuffled(const Substitution& s, std::mt19937& rng) {
  std::vector<Word> rules = s.rules();
  for (auto& r : rules) std::shuffle(r.begin(), r.end(), rng);
  return Substitution(s.alphabet(), rules, s.name() + "'");
}

/// Prefix discrepancies by direct exact comparison of edge positions:
/// entry j compares the first j top tiles with the longest bottom prefix
/// whose right end is not to the right of the top prefix's right end.
inline std::vector<long> naive_discrepancies(const Word& top, const Word& bottom,
                                             const std::vector<AlgebraicNumber>& lengths, LetterId tracked) {
  auto positions = [&](const Word& w) {
    std::vector<AlgebraicNumber> pos{AlgebraicNumber::rational(lengths.front().field(), 0)};
    for (LetterId x : w) pos.push_back(pos.back() + lengths[x]);
    return pos;
  };
  auto pt = positions(top), pb = positions(bottom);
  std::vector<long> out;
  for (size_t j = 0; j < top.size(); ++j) {
    size_t i = 0;
    while (i < bottom.size() && faultline::compare(pb[i + 1], pt[j]) <= 0) ++i;
    long a = std::count(top.begin(), top.begin() + static_cast<long>(j), tracked);
    long b = std::count(bottom.begin(), bottom.begin() + static_cast<long>(i), tracked);
    out.push_back(a - b);
  }
  return out;
}

/// Column sums of m^k: the number of tiles in the order-k supertile of each tile.
inline std::vector<mpz_class> supertile_sizes(const IntMatrix& m, unsigned k) {
  IntMatrix p = IntMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) p = m * p;
  std::vector<mpz_class> out(m.cols(), 0);
  for (size_t j = 0; j < m.cols(); ++j)
    for (size_t i = 0; i < m.rows(); ++i) out[j] += p(i, j);
  return out;
}

}  // namespace oracle
