#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "faultline/algebraic.hpp"
#include "faultline/spectral.hpp"
#include "faultline/substitution.hpp"

namespace faultline {

inline constexpr unsigned kDefaultRounds = 12;

struct TraceOptions {
  size_t max_len = kDefaultMaxWordLength;
  /// Offsets are reduced modulo this length; defaults to the widest tile.
  std::optional<AlgebraicNumber> modulus;
  /// Letter whose count difference is the discrepancy.
  LetterId tracked = 0;
  /// Root-isolation precision for the spectral test.
  int precision_bits = 64;
};

struct TraceRound {
  Word top;
  Word bottom;
  /// Entry j compares the top prefix of j tiles with the bottom prefix
  /// ending at or before the same exact position; j < |top|.
  std::vector<long> prefix_discrepancies;
  /// Distinct offsets of top left edges against the bottom row, ascending.
  std::vector<AlgebraicNumber> offsets;
  long max_abs_discrepancy = 0;
};

struct BoundaryTrace {
  Alphabet alphabet;
  std::vector<AlgebraicNumber> lengths;
  AlgebraicNumber modulus;
  LetterId seed = 0;
  LetterId tracked = 0;
  std::vector<TraceRound> rounds;  // rounds[i] holds round i + 1
};

/// (top, bottom) substitutions applied in one round.
using RowPair = std::pair<const Substitution*, const Substitution*>;

BoundaryTrace boundary_trace(const Substitution& top, const Substitution& bottom, LetterId seed, unsigned k,
                             const TraceOptions& options = {});
/// Round i applies schedule[i - 1] to the previous round's rows.
BoundaryTrace scheduled_trace(const std::vector<RowPair>& schedule, LetterId seed, const TraceOptions& options = {});

/// Geometric mean ratio of max |discrepancy| over the last half of the
/// rounds. Zero when those discrepancies vanish.
RationalInterval discrepancy_growth(const BoundaryTrace& trace);

struct OffsetStatistics {
  size_t distinct_count = 0;
  std::optional<AlgebraicNumber> min_gap;
};

/// Statistics of round `round` (1-based); 0 means the last round.
OffsetStatistics offset_statistics(const BoundaryTrace& trace, size_t round = 0);

enum class BoundaryKind { Rigid, RegularFault, Undetermined };
std::string to_string(BoundaryKind kind);

struct BoundaryEvidence {
  LetterId seed = 0;
  RationalInterval growth;
  std::vector<long> max_discrepancy;
  std::vector<size_t> offset_counts;
};

struct BoundaryClass {
  BoundaryKind kind = BoundaryKind::Undetermined;
  SpectralKind spectral = SpectralKind::Undetermined;
  std::vector<BoundaryEvidence> evidence;  // one per seed letter
  std::string reason;
};

BoundaryClass classify_boundary(const Substitution& top, const Substitution& bottom, unsigned cap = kDefaultRounds,
                                const TraceOptions& options = {});
/// Classifies a boundary whose row substitutions vary by round. Every seed
/// letter is traced. Rounds stop early once the rows would exceed
/// options.max_len; fewer than 4 remaining rounds is a ResourceError.
BoundaryClass classify_schedule(const std::vector<RowPair>& schedule, const TraceOptions& options = {});

/// o_1 = L, o_{k+1} = L * o_k - L.
std::vector<AlgebraicNumber> offset_recurrence(const AlgebraicNumber& lambda, unsigned k);

}  // namespace faultline
