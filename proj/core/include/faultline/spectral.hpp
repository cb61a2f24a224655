#pragma once

#include <string>
#include <vector>

#include "faultline/algebraic.hpp"
#include "faultline/matrix.hpp"

namespace faultline {

class Substitution;

struct PerronData {
  Poly charpoly;
  FieldPtr field;
  AlgebraicNumber lambda;
  bool primitive = false;
};

/// Positivity of some power m^k, k <= (n-1)^2 + 1.
bool is_primitive(const IntMatrix& m);

/// Throws HypothesisError when the matrix has no positive real eigenvalue.
PerronData perron_data(const IntMatrix& m);

enum class SpectralKind { Pisot, Salem, NonPisotExpanding, Unimodular, Undetermined };

std::string to_string(SpectralKind kind);

/// Classification of the non-Perron part of the matrix spectrum.
struct SpectralClass {
  SpectralKind kind = SpectralKind::Undetermined;
  /// False when the spectrum is the Perron root alone.
  bool has_second = false;
  /// Bracket of the largest modulus among the non-Perron eigenvalues.
  RationalInterval second_modulus;
  /// Whether the Perron root itself is a Pisot number (conjugates over its
  /// minimal polynomial strictly inside the unit circle).
  bool perron_is_pisot = false;
};

SpectralClass spectral_classify(const IntMatrix& m, int bits = 64);

/// Left Perron eigenvector with entries in Q(lambda).
std::vector<AlgebraicNumber> tile_lengths(const Substitution& s);
std::vector<AlgebraicNumber> tile_lengths(const IntMatrix& m, const PerronData& perron);

}  // namespace faultline
