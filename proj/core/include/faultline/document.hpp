#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "faultline/dpv.hpp"
#include "faultline/substitution.hpp"

namespace faultline {

struct SubstitutionDecl {
  std::string alphabet;
  /// Letter name -> image as letter names.
  std::map<std::string, std::vector<std::string>> rules;

  friend bool operator==(const SubstitutionDecl&, const SubstitutionDecl&) = default;
};

struct TileDecl {
  std::string vertical;
  std::string horizontal;

  friend bool operator==(const TileDecl&, const TileDecl&) = default;
};

struct TileGridDecl {
  /// Image rows as written, top row first.
  std::vector<std::vector<std::string>> rows;
  /// Optional horizontal substitution name per row, top row first.
  std::vector<std::string> sigma;

  friend bool operator==(const TileGridDecl&, const TileGridDecl&) = default;
};

struct DPVDecl {
  std::string vertical;
  std::vector<std::string> horizontal;
  std::map<std::string, TileDecl> tiles;
  std::map<std::string, TileGridDecl> tile_grid;

  friend bool operator==(const DPVDecl&, const DPVDecl&) = default;
};

struct DocumentOptions {
  std::optional<unsigned> rounds;
  std::optional<size_t> max_word_len;
  std::optional<size_t> max_tiles;
  std::optional<int> precision_bits;
  std::optional<unsigned> border_cap;
  /// Horizontal letter whose width is the offset modulus.
  std::optional<std::string> modulus_letter;
  /// Horizontal letter whose count difference is the discrepancy.
  std::optional<std::string> tracked_letter;

  friend bool operator==(const DocumentOptions&, const DocumentOptions&) = default;
};

struct InputDocument {
  std::map<std::string, std::vector<std::string>> alphabets;
  std::map<std::string, SubstitutionDecl> substitutions;
  std::optional<DPVDecl> dpv;
  DocumentOptions options;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Strict parse: unknown fields, wrong types and dangling names are
/// rejected with ValidationError.
InputDocument parse_document(const std::string& json_text);
InputDocument load_document(const std::string& path);
/// Canonical JSON text with sorted keys.
std::string serialize_document(const InputDocument& doc);

Substitution build_substitution(const InputDocument& doc, const std::string& name);
DPVSubstitution build_dpv(const InputDocument& doc);
/// Options resolved against the document's horizontal alphabet (the DPV's,
/// or `horizontal` when given).
AnalysisOptions analysis_options(const InputDocument& doc, const Substitution* horizontal = nullptr);

}  // namespace faultline
