#pragma once

#include "faultline/matrix.hpp"

namespace faultline {

/// lim(Z^n, a), reduced to the injective part on Z^n / (eventual kernel).
struct DirectLimitGroup {
  size_t n = 0;
  IntMatrix a;
  size_t r = 0;
  IntMatrix a_prime;
  Poly charpoly_prime;
  mpz_class det_prime = 1;

  bool trivial() const { return r == 0; }
};

DirectLimitGroup direct_limit(const IntMatrix& a);

/// Product of the distinct primes dividing m (m != 0); rad(1) = 1.
mpz_class radical(const mpz_class& m);

}  // namespace faultline
