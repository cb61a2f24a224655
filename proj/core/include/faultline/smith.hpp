#pragma once

#include "faultline/matrix.hpp"

namespace faultline {

/// u * a * v = d with u, v unimodular and d diagonal, d(i,i) | d(i+1,i+1),
/// all diagonal entries non-negative. Inverses of u and v are tracked
/// alongside so callers never invert unimodular matrices themselves.
struct SmithForm {
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix d;
  IntMatrix v;
  IntMatrix v_inv;
  size_t rank = 0;

  std::vector<mpz_class> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis of the integer kernel {x : a x = 0} as matrix columns (saturated).
IntMatrix integer_kernel(const IntMatrix& a);

}  // namespace faultline
