#include "faultline/direct_limit.hpp"

#include "faultline/errors.hpp"
#include "faultline/smith.hpp"

namespace faultline {

DirectLimitGroup direct_limit(const IntMatrix& a) {
  if (!a.is_square()) throw ValidationError("direct limit needs a square bonding matrix");
  DirectLimitGroup g;
  g.n = a.rows();
  g.a = a;
  if (g.n == 0) {
    g.charpoly_prime = Poly::constant(1);
    return g;
  }
  // ker(a^n) is the eventual kernel; its integer kernel basis is saturated,
  // so V^-1 a V is block lower triangular with the quotient action on top.
  SmithForm snf = smith_normal_form(a.power(static_cast<unsigned>(g.n)));
  g.r = snf.rank;
  IntMatrix conj = snf.v_inv * a * snf.v;
  for (size_t i = 0; i < g.r; ++i)
    for (size_t j = g.r; j < g.n; ++j)
      if (conj(i, j) != 0) throw InternalError("eventual kernel is not invariant");
  g.a_prime = conj.block(0, 0, g.r, g.r);
  g.charpoly_prime = g.r ? g.a_prime.charpoly() : Poly::constant(1);
  g.det_prime = g.r ? g.a_prime.determinant() : mpz_class(1);
  if (g.det_prime == 0) throw InternalError("reduced bonding map is not injective");
  return g;
}

mpz_class radical(const mpz_class& m) {
  if (m == 0) throw std::domain_error("radical of zero");
  mpz_class x = abs(m);
  mpz_class out = 1;
  for (unsigned long p = 2; p <= 1'000'000 && mpz_class(p) * p <= x; ++p) {
    if (mpz_divisible_ui_p(x.get_mpz_t(), p) == 0) continue;
    out *= p;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) x /= p;
  }
  // A large cofactor has no prime factor below 10^6; strip perfect powers
  // so a prime power contributes its prime once.
  while (x > 1 && mpz_perfect_power_p(x.get_mpz_t())) {
    mpz_class root;
    for (unsigned long k = 2; k < 64; ++k)
      if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), k)) {
        x = root;
        break;
      }
  }
  return out * x;
}

}  // namespace faultline
