#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "faultline/matrix.hpp"

namespace faultline {

using LetterId = std::uint32_t;
using Word = std::vector<LetterId>;

inline constexpr size_t kDefaultMaxWordLength = 1'000'000;

struct Letter {
  LetterId id;
  std::string name;
};

/// Ordered set of letter names; ids are dense 0..size-1.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::string& name(LetterId id) const;
  LetterId id(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  Letter letter(LetterId id) const { return {id, name(id)}; }
  const std::vector<std::string>& names() const { return names_; }

  /// Accepts either whitespace-separated letter names or, when no
  /// whitespace is present, a greedy longest-match concatenation.
  Word parse(const std::string& text) const;
  /// Concatenated when every name is one character, else space-separated.
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, LetterId> index_;
};

/// A 1-d substitution: one non-empty image word per letter.
class Substitution {
 public:
  Substitution() = default;
  Substitution(Alphabet alphabet, std::vector<Word> rules, std::string name = {});
  /// Rules given as text, in alphabet order.
  static Substitution from_strings(const std::vector<std::string>& letters,
                                   const std::vector<std::string>& images, std::string name = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& rules() const { return rules_; }
  const Word& image(LetterId a) const { return rules_.at(a); }
  const std::string& name() const { return name_; }
  size_t size() const { return rules_.size(); }
  std::vector<size_t> image_lengths() const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.alphabet_ == b.alphabet_ && a.rules_ == b.rules_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> rules_;
  std::string name_;
};

void validate_word(const Substitution& s, const Word& w);

Word apply(const Substitution& s, const Word& w, size_t max_len = kDefaultMaxWordLength);
Word iterate(const Substitution& s, Word seed, unsigned k, size_t max_len = kDefaultMaxWordLength);

/// Entry (i, j) counts letter i in the image of letter j.
IntMatrix abelianization(const Substitution& s);

std::vector<mpz_class> letter_counts(const Word& w, size_t alphabet_size);

/// Every length-n factor of the substitution's language, closed under
/// substitution. Non-primitive input yields the union over all letters.
std::set<Word> legal_words(const Substitution& s, size_t n, size_t max_len = kDefaultMaxWordLength);

/// Shortest u, |u| <= max_len, with s2(x) u = u s1(x) for every letter x.
std::optional<Word> shift_conjugacy(const Substitution& s1, const Substitution& s2, size_t max_len = 64);

}  // namespace faultline
