#include "faultline/fault.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "faultline/errors.hpp"

namespace faultline {

namespace {

using Counts = std::vector<long>;

// Signs and reduced values of integer combinations of the tile lengths,
// memoized by coefficient vector. A double evaluation decides the sign
// whenever it clears a conservative error bound.
class LengthCombos {
 public:
  LengthCombos(const std::vector<AlgebraicNumber>& lengths, AlgebraicNumber modulus)
      : lengths_(lengths), modulus_(std::move(modulus)) {
    for (const auto& l : lengths_) approx_.push_back(l.to_double());
  }

  AlgebraicNumber value(const Counts& d) const {
    AlgebraicNumber v = AlgebraicNumber::rational(lengths_.front().field(), 0);
    for (size_t i = 0; i < d.size(); ++i)
      if (d[i]) v = v + mpq_class(d[i]) * lengths_[i];
    return v;
  }

  int sign(const Counts& d) {
    double v = 0, scale = 0;
    for (size_t i = 0; i < d.size(); ++i) {
      v += static_cast<double>(d[i]) * approx_[i];
      scale += std::fabs(static_cast<double>(d[i]) * approx_[i]);
    }
    if (std::fabs(v) > 1e-9 * (scale + 1)) return v > 0 ? 1 : -1;
    auto it = signs_.find(d);
    if (it != signs_.end()) return it->second;
    int s = value(d).sign();
    signs_.emplace(d, s);
    return s;
  }

  const AlgebraicNumber& offset(const Counts& d) {
    auto it = offsets_.find(d);
    if (it == offsets_.end()) it = offsets_.emplace(d, mod_reduce(value(d), modulus_)).first;
    return it->second;
  }

 private:
  std::vector<AlgebraicNumber> lengths_;
  AlgebraicNumber modulus_;
  std::vector<double> approx_;
  std::map<Counts, int> signs_;
  std::map<Counts, AlgebraicNumber> offsets_;
};

void fill_round(TraceRound& round, LengthCombos& combos, size_t alphabet_size, LetterId tracked) {
  const Word& top = round.top;
  const Word& bot = round.bottom;
  Counts ct(alphabet_size, 0), cb(alphabet_size, 0);
  Counts diff(alphabet_size, 0);
  size_t jb = 0;  // bottom prefix length currently aligned
  std::map<std::vector<mpq_class>, AlgebraicNumber> distinct;
  round.prefix_discrepancies.reserve(top.size());
  for (size_t j = 0; j < top.size(); ++j) {
    // Advance while the next bottom edge is at or before the top edge.
    while (jb < bot.size()) {
      for (size_t i = 0; i < alphabet_size; ++i) diff[i] = ct[i] - cb[i];
      diff[bot[jb]] -= 1;
      if (combos.sign(diff) < 0) break;
      cb[bot[jb]] += 1;
      ++jb;
    }
    for (size_t i = 0; i < alphabet_size; ++i) diff[i] = ct[i] - cb[i];
    long m = diff[tracked];
    round.prefix_discrepancies.push_back(m);
    round.max_abs_discrepancy = std::max(round.max_abs_discrepancy, std::labs(m));
    const AlgebraicNumber& off = combos.offset(diff);
    distinct.emplace(off.coeffs(), off);
    ct[top[j]] += 1;
  }
  for (auto& [k, v] : distinct) round.offsets.push_back(v);
  std::sort(round.offsets.begin(), round.offsets.end(),
            [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });
}

}  // namespace

BoundaryTrace boundary_trace(const Substitution& top, const Substitution& bottom, LetterId seed, unsigned k,
                             const TraceOptions& options) {
  std::vector<RowPair> schedule(k, RowPair{&top, &bottom});
  return scheduled_trace(schedule, seed, options);
}

BoundaryTrace scheduled_trace(const std::vector<RowPair>& schedule, LetterId seed, const TraceOptions& options) {
  if (schedule.empty()) throw ValidationError("boundary trace needs at least one round");
  const Substitution& ref = *schedule.front().first;
  for (const auto& [t, b] : schedule) {
    for (const Substitution* s : {t, b}) {
      if (!(s->alphabet() == ref.alphabet())) throw HypothesisError("row substitutions use different alphabets");
      if (s->image_lengths() != ref.image_lengths())
        throw HypothesisError("row substitutions have different image lengths");
      if (!(abelianization(*s) == abelianization(ref)))
        throw HypothesisError("row substitutions have different abelianizations");
    }
  }
  if (seed >= ref.size()) throw ValidationError("seed letter outside alphabet");
  if (options.tracked >= ref.size()) throw ValidationError("tracked letter outside alphabet");

  BoundaryTrace trace;
  trace.alphabet = ref.alphabet();
  trace.lengths = tile_lengths(ref);
  trace.seed = seed;
  trace.tracked = options.tracked;
  if (options.modulus) {
    trace.modulus = *options.modulus;
    if (trace.modulus.sign() <= 0) throw ValidationError("offset modulus must be positive");
  } else {
    trace.modulus = *std::max_element(trace.lengths.begin(), trace.lengths.end(),
                                      [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });
  }
  LengthCombos combos(trace.lengths, trace.modulus);
  Word top{seed}, bottom{seed};
  for (const auto& [t, b] : schedule) {
    TraceRound round;
    round.top = top = faultline::apply(*t, top, options.max_len);
    round.bottom = bottom = faultline::apply(*b, bottom, options.max_len);
    fill_round(round, combos, ref.size(), options.tracked);
    trace.rounds.push_back(std::move(round));
  }
  return trace;
}

RationalInterval discrepancy_growth(const BoundaryTrace& trace) {
  const size_t k = trace.rounds.size();
  if (k < 4) throw ValidationError("discrepancy growth needs at least 4 rounds");
  size_t k0 = k - k / 2;  // 1-based round index starting the last half
  auto d = [&](size_t round) { return trace.rounds[round - 1].max_abs_discrepancy; };
  while (k0 < k && d(k0) == 0) ++k0;
  if (d(k0) == 0 || k0 == k) return {0, 0};
  const mpq_class target(d(k), d(k0));
  const unsigned n = static_cast<unsigned>(k - k0);
  auto pow_n = [&](const mpq_class& x) {
    mpq_class r = 1;
    for (unsigned i = 0; i < n; ++i) r *= x;
    return r;
  };
  mpq_class lo = 0, hi = target > 1 ? target : mpq_class(1);
  for (int i = 0; i < 48; ++i) {
    mpq_class mid = (lo + hi) / 2;
    if (pow_n(mid) <= target) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

OffsetStatistics offset_statistics(const BoundaryTrace& trace, size_t round) {
  if (trace.rounds.empty()) throw ValidationError("offset statistics need at least one round");
  if (round == 0) round = trace.rounds.size();
  if (round > trace.rounds.size()) throw ValidationError("round out of range");
  const auto& offs = trace.rounds[round - 1].offsets;
  OffsetStatistics st;
  st.distinct_count = offs.size();
  for (size_t i = 1; i < offs.size(); ++i) {
    AlgebraicNumber gap = offs[i] - offs[i - 1];
    if (!st.min_gap || compare(gap, *st.min_gap) < 0) st.min_gap = gap;
  }
  return st;
}

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Rigid: return "Rigid";
    case BoundaryKind::RegularFault: return "RegularFault";
    case BoundaryKind::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

BoundaryClass classify_boundary(const Substitution& top, const Substitution& bottom, unsigned cap,
                                const TraceOptions& options) {
  std::vector<RowPair> schedule(cap, RowPair{&top, &bottom});
  return classify_schedule(schedule, options);
}

namespace {

// Longest prefix of the schedule whose row words stay within max_len.
size_t rounds_within(const std::vector<RowPair>& schedule, size_t max_len) {
  const size_t letters = schedule.front().first->size();
  std::vector<mpz_class> top(letters, 1), bottom(letters, 1);
  auto grow = [&](const Substitution& s, const std::vector<mpz_class>& len) {
    std::vector<mpz_class> next(letters, 0);
    for (size_t x = 0; x < letters; ++x)
      for (LetterId y : s.image(static_cast<LetterId>(x))) next[x] += len[y];
    return next;
  };
  for (size_t k = 0; k < schedule.size(); ++k) {
    top = grow(*schedule[k].first, top);
    bottom = grow(*schedule[k].second, bottom);
    for (size_t x = 0; x < letters; ++x)
      if (top[x] > max_len || bottom[x] > max_len) return k;
  }
  return schedule.size();
}

}  // namespace

BoundaryClass classify_schedule(const std::vector<RowPair>& full_schedule, const TraceOptions& options) {
  if (full_schedule.size() < 4) throw ValidationError("boundary classification needs at least 4 rounds");
  const size_t fit = rounds_within(full_schedule, options.max_len);
  if (fit < 4)
    throw ResourceError("boundary classification needs 4 rounds, but only " + std::to_string(fit) +
                        " fit within the word-length cap of " + std::to_string(options.max_len));
  const std::vector<RowPair> schedule(full_schedule.begin(), full_schedule.begin() + static_cast<long>(fit));
  const Substitution& ref = *schedule.front().first;
  BoundaryClass out;
  out.spectral = spectral_classify(abelianization(ref), options.precision_bits).kind;
  const size_t cap = schedule.size();
  const size_t checkpoints[3] = {cap / 4, cap / 2, cap};

  bool all_constant = true;
  bool any_growth = false;
  std::optional<AlgebraicNumber> constant;
  for (LetterId seed = 0; seed < ref.size(); ++seed) {
    BoundaryTrace trace = scheduled_trace(schedule, seed, options);
    BoundaryEvidence ev;
    ev.seed = seed;
    ev.growth = discrepancy_growth(trace);
    for (const auto& r : trace.rounds) {
      ev.max_discrepancy.push_back(r.max_abs_discrepancy);
      ev.offset_counts.push_back(r.offsets.size());
      for (const auto& o : r.offsets) {
        if (!constant) constant = o;
        else if (!(o == *constant)) all_constant = false;
      }
    }
    const long d1 = ev.max_discrepancy[checkpoints[0] - 1];
    const long d2 = ev.max_discrepancy[checkpoints[1] - 1];
    const long d3 = ev.max_discrepancy[checkpoints[2] - 1];
    if (d1 < d2 && d2 < d3) any_growth = true;
    out.evidence.push_back(std::move(ev));
  }

  if (all_constant) {
    out.kind = BoundaryKind::Rigid;
    out.reason = "offsets constant through " + std::to_string(cap) + " rounds";
  } else if (any_growth && out.spectral == SpectralKind::NonPisotExpanding && ref.size() == 2) {
    out.kind = BoundaryKind::RegularFault;
    out.reason = "discrepancy grows at every doubling checkpoint and the second eigenvalue is expanding";
  } else if (any_growth && out.spectral == SpectralKind::NonPisotExpanding) {
    out.kind = BoundaryKind::Undetermined;
    out.reason = "discrepancy grows, but density of offsets is only established on two letters";
  } else {
    out.kind = BoundaryKind::Undetermined;
    out.reason = "offsets vary without certified unbounded growth";
  }
  if (fit < full_schedule.size())
    out.reason += " (stopped after " + std::to_string(fit) + " of " + std::to_string(full_schedule.size()) +
                  " rounds at the word-length cap)";
  return out;
}

std::vector<AlgebraicNumber> offset_recurrence(const AlgebraicNumber& lambda, unsigned k) {
  std::vector<AlgebraicNumber> out;
  if (k == 0) return out;
  out.push_back(lambda);
  while (out.size() < k) out.push_back(lambda * out.back() - lambda);
  return out;
}

}  // namespace faultline
