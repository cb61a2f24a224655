#pragma once

#include <optional>
#include <vector>

#include "faultline/poly.hpp"

namespace faultline {

/// A disk {|z - center| <= radius} certified to contain exactly one root.
struct RootEnclosure {
  mpq_class re;
  mpq_class im;
  mpq_class radius;  // rational upper bound
  bool real = false;

  /// Certified bracket of |root|.
  RationalInterval modulus(int bits = 80) const;
  /// Certified bracket of the root when it is real.
  RationalInterval real_interval() const { return {re - radius, re + radius}; }
  double approx_re() const { return re.get_d(); }
  double approx_im() const { return im.get_d(); }
};

/// Certified isolation of every complex root of a squarefree polynomial.
struct RootIsolation {
  std::vector<RootEnclosure> roots;
  mpq_class max_radius;
  int working_bits = 0;

  /// Index of the largest real root, if any.
  std::optional<size_t> largest_real() const;
};

/// Isolates all roots of `squarefree` with enclosure radius below 2^-bits.
/// Uses Durand-Kerner approximations in GMP floating point and certifies
/// them with exact Weierstrass inclusion disks. Throws InternalError if
/// certification fails after several precision increases.
RootIsolation isolate_roots(const Poly& squarefree, int bits = 64);

/// The monic integer factor of `p` of least degree that vanishes at
/// root `index` of `iso`. `p` must be monic, integral and squarefree.
/// Returns `p` itself when no proper factor exists (or the search is capped).
Poly factor_containing(const Poly& p, const RootIsolation& iso, size_t index);

/// Exact irreducibility test over Q for a monic integer polynomial.
bool is_irreducible(const Poly& p);

/// Exact count of roots of `p` (with multiplicity ignored) on the unit circle.
int unit_circle_root_count(const Poly& p);

}  // namespace faultline
