#include "faultline/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "faultline/errors.hpp"
#include "faultline/spectral.hpp"

namespace faultline {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty()) throw ValidationError("empty letter name");
    if (std::any_of(n.begin(), n.end(), [](unsigned char c) { return std::isspace(c); }))
      throw ValidationError("letter name contains whitespace: '" + n + "'");
    if (!index_.emplace(n, static_cast<LetterId>(i)).second)
      throw ValidationError("duplicate letter name '" + n + "'");
  }
}

const std::string& Alphabet::name(LetterId id) const {
  if (id >= names_.size()) throw ValidationError("letter id " + std::to_string(id) + " outside alphabet");
  return names_[id];
}

LetterId Alphabet::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ValidationError("unknown letter '" + name + "'");
  return it->second;
}

Word Alphabet::parse(const std::string& text) const {
  Word w;
  bool spaced = std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  if (spaced) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.push_back(id(tok));
    return w;
  }
  size_t pos = 0;
  while (pos < text.size()) {
    size_t best = 0;
    LetterId best_id = 0;
    for (const auto& [n, i] : index_) {
      if (n.size() > best && text.compare(pos, n.size(), n) == 0) {
        best = n.size();
        best_id = i;
      }
    }
    if (best == 0) throw ValidationError("cannot parse '" + text.substr(pos) + "' as letters");
    w.push_back(best_id);
    pos += best;
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  bool single = std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!single && i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Substitution::Substitution(Alphabet alphabet, std::vector<Word> rules, std::string name)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), name_(std::move(name)) {
  if (alphabet_.size() == 0) throw ValidationError("substitution over an empty alphabet");
  if (rules_.size() != alphabet_.size())
    throw ValidationError("substitution needs exactly one rule per letter");
  for (size_t a = 0; a < rules_.size(); ++a) {
    if (rules_[a].empty()) throw ValidationError("empty image for letter '" + alphabet_.name(static_cast<LetterId>(a)) + "'");
    for (LetterId x : rules_[a])
      if (x >= alphabet_.size()) throw ValidationError("rule letter outside alphabet");
  }
}

Substitution Substitution::from_strings(const std::vector<std::string>& letters,
                                        const std::vector<std::string>& images, std::string name) {
  Alphabet alpha(letters);
  if (images.size() != letters.size()) throw ValidationError("one image per letter required");
  std::vector<Word> rules;
  for (const auto& img : images) rules.push_back(alpha.parse(img));
  return Substitution(std::move(alpha), std::move(rules), std::move(name));
}

std::vector<size_t> Substitution::image_lengths() const {
  std::vector<size_t> out;
  for (const auto& r : rules_) out.push_back(r.size());
  return out;
}

void validate_word(const Substitution& s, const Word& w) {
  for (LetterId x : w)
    if (x >= s.size()) throw ValidationError("word letter id " + std::to_string(x) + " outside alphabet");
}

Word apply(const Substitution& s, const Word& w, size_t max_len) {
  validate_word(s, w);
  size_t total = 0;
  for (LetterId x : w) total += s.image(x).size();
  if (total > max_len)
    throw ResourceError("substituted word length " + std::to_string(total) + " exceeds cap " + std::to_string(max_len));
  Word out;
  out.reserve(total);
  for (LetterId x : w) {
    const Word& img = s.image(x);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word iterate(const Substitution& s, Word seed, unsigned k, size_t max_len) {
  validate_word(s, seed);
  for (unsigned i = 0; i < k; ++i) seed = faultline::apply(s, seed, max_len);
  return seed;
}

IntMatrix abelianization(const Substitution& s) {
  const size_t n = s.size();
  IntMatrix m(n, n);
  for (size_t j = 0; j < n; ++j)
    for (LetterId i : s.image(static_cast<LetterId>(j))) m(i, j) += 1;
  return m;
}

std::vector<mpz_class> letter_counts(const Word& w, size_t alphabet_size) {
  std::vector<mpz_class> c(alphabet_size, 0);
  for (LetterId x : w) c.at(x) += 1;
  return c;
}

namespace {

void collect_factors(const Word& w, size_t n, std::set<Word>& out) {
  if (w.size() < n) return;
  for (size_t i = 0; i + n <= w.size(); ++i) out.emplace(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + n));
}

}  // namespace

std::set<Word> legal_words(const Substitution& s, size_t n, size_t max_len) {
  if (n == 0) throw ValidationError("legal word length must be positive");
  double lambda = 1.0;
  try {
    lambda = perron_data(abelianization(s)).lambda.to_double();
  } catch (const std::exception&) {
  }
  const size_t target = std::max<size_t>(64, static_cast<size_t>(4.0 * static_cast<double>(n) * std::ceil(lambda)));
  std::set<Word> words;
  for (LetterId a = 0; a < s.size(); ++a) {
    Word w{a};
    for (int i = 0; i < 64 && w.size() < target; ++i) w = faultline::apply(s, w, max_len);
    collect_factors(w, n, words);
  }
  int stable_rounds = 0;
  while (stable_rounds < 2) {
    std::set<Word> next = words;
    for (const Word& w : words) collect_factors(faultline::apply(s, w, max_len), n, next);
    if (next.size() == words.size()) ++stable_rounds;
    else stable_rounds = 0;
    words = std::move(next);
  }
  return words;
}

std::optional<Word> shift_conjugacy(const Substitution& s1, const Substitution& s2, size_t max_len) {
  if (!(s1.alphabet() == s2.alphabet())) throw HypothesisError("shift conjugacy needs a shared alphabet");
  if (s1.image_lengths() != s2.image_lengths())
    throw HypothesisError("shift conjugacy needs equal image lengths per letter");
  // Any solution u is a prefix of s2(x)^infinity for every x.
  const Word& period = s2.image(0);
  for (size_t len = 0; len <= max_len; ++len) {
    Word u;
    u.reserve(len);
    for (size_t i = 0; i < len; ++i) u.push_back(period[i % period.size()]);
    bool ok = true;
    for (LetterId x = 0; x < s1.size() && ok; ++x) {
      Word lhs = s2.image(x);
      lhs.insert(lhs.end(), u.begin(), u.end());
      Word rhs = u;
      rhs.insert(rhs.end(), s1.image(x).begin(), s1.image(x).end());
      ok = (lhs == rhs);
    }
    if (ok) return u;
  }
  return std::nullopt;
}

}  // namespace faultline
