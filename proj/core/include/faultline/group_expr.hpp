#pragma once

#include <string>
#include <vector>

#include "faultline/direct_limit.hpp"

namespace faultline {

enum class AtomKind { AlgLoc, Limit, ZLoc };

/// Indecomposable factor of a tensor product.
struct Atom {
  AtomKind kind = AtomKind::ZLoc;
  mpz_class m;          // ZLoc: squarefree m >= 2
  Poly p;               // AlgLoc: monic irreducible integer polynomial
  DirectLimitGroup g;   // Limit

  IntMatrix presentation() const;
  std::string to_string() const;
};

/// Normalized expression: a direct sum of terms, each a multiplicity times
/// a sorted tensor product of atoms. The empty product is Z; the empty sum
/// is the trivial group.
class GroupExpr {
 public:
  struct Term {
    std::vector<Atom> factors;
    unsigned multiplicity = 1;
  };

  GroupExpr() = default;  // trivial group
  static GroupExpr zero() { return {}; }
  static GroupExpr Z(unsigned power = 1);
  static GroupExpr zloc(const mpz_class& m);
  static GroupExpr algloc(const Poly& p);
  static GroupExpr limit(const DirectLimitGroup& g);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_trivial() const { return terms_.empty(); }

  friend GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b);
  friend GroupExpr tensor(const GroupExpr& a, const GroupExpr& b);
  GroupExpr power(unsigned k) const;

  /// Block-diagonal of Kronecker products of atom presentations.
  IntMatrix presentation() const;
  std::string to_string() const;

  friend bool operator==(const GroupExpr& a, const GroupExpr& b) { return a.to_string() == b.to_string(); }

 private:
  void normalize();
  std::vector<Term> terms_;
};

GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b);
GroupExpr tensor(const GroupExpr& a, const GroupExpr& b);

struct GroupInvariants {
  size_t rank = 0;
  Poly charpoly;
  mpz_class det = 1;  // absolute value
};

GroupInvariants invariants(const GroupExpr& x);

/// Which recognition rule fired, for reports.
enum class RecognitionRule { Unimodular, RankOne, Irreducible, IntegerEigen, Unrecognized, Trivial };
std::string to_string(RecognitionRule rule);

struct Recognition {
  GroupExpr expr;
  RecognitionRule rule = RecognitionRule::Unrecognized;
};

Recognition recognize_with_rule(const DirectLimitGroup& g);
GroupExpr recognize(const DirectLimitGroup& g);

}  // namespace faultline
