#include "faultline/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "faultline/errors.hpp"
#include "faultline/spectral.hpp"

namespace faultline {

using nlohmann::json;

namespace {

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ValidationError("unknown field '" + k + "' in " + where);
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> get_strings(const json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(get_string(x, where));
  return out;
}

template <typename T>
T get_unsigned(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ValidationError(where + " must be a non-negative integer");
  return static_cast<T>(j.get<unsigned long long>());
}

// Rule images are either letter-name arrays or text parsed by the alphabet.
std::vector<std::string> parse_image(const json& j, const Alphabet& alpha, const std::string& where) {
  if (j.is_array()) return get_strings(j, where);
  Word w = alpha.parse(get_string(j, where));
  std::vector<std::string> out;
  for (LetterId x : w) out.push_back(alpha.name(x));
  return out;
}

json image_to_json(const std::vector<std::string>& names) {
  bool single = true;
  for (const auto& n : names) single = single && n.size() == 1;
  std::string text;
  for (size_t i = 0; i < names.size(); ++i) text += (i && !single ? " " : "") + names[i];
  return text;
}

}  // namespace

InputDocument parse_document(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  only_keys(root, {"alphabets", "substitutions", "dpv", "options"}, "document");
  InputDocument doc;

  if (root.contains("alphabets") && !root["alphabets"].is_object())
    throw ValidationError("alphabets must be an object");
  const json alphabets = root.value("alphabets", json::object());
  for (const auto& [name, letters] : alphabets.items()) {
    doc.alphabets[name] = get_strings(letters, "alphabet '" + name + "'");
    Alphabet check(doc.alphabets[name]);
    (void)check;
  }
  if (!root.contains("substitutions") || !root["substitutions"].is_object())
    throw ValidationError("document needs a 'substitutions' object");
  for (const auto& [name, body] : root["substitutions"].items()) {
    const std::string where = "substitution '" + name + "'";
    only_keys(body, {"alphabet", "rules"}, where);
    if (!body.contains("alphabet") || !body.contains("rules")) throw ValidationError(where + " needs alphabet and rules");
    SubstitutionDecl decl;
    decl.alphabet = get_string(body["alphabet"], where + " alphabet");
    auto it = doc.alphabets.find(decl.alphabet);
    if (it == doc.alphabets.end()) throw ValidationError(where + " uses unknown alphabet '" + decl.alphabet + "'");
    Alphabet alpha(it->second);
    if (!body["rules"].is_object()) throw ValidationError(where + " rules must be an object");
    for (const auto& [letter, image] : body["rules"].items()) {
      if (!alpha.contains(letter)) throw ValidationError(where + " has a rule for unknown letter '" + letter + "'");
      decl.rules[letter] = parse_image(image, alpha, where + " rule '" + letter + "'");
      if (decl.rules[letter].empty()) throw ValidationError(where + " rule '" + letter + "' has an empty image");
      for (const auto& n : decl.rules[letter]) (void)alpha.id(n);
    }
    for (const auto& letter : alpha.names())
      if (!decl.rules.count(letter)) throw ValidationError(where + " has no rule for letter '" + letter + "'");
    doc.substitutions[name] = std::move(decl);
  }

  if (root.contains("dpv")) {
    const json& d = root["dpv"];
    only_keys(d, {"vertical", "horizontal", "tiles", "tile_grid"}, "dpv");
    for (const char* k : {"vertical", "horizontal", "tiles", "tile_grid"})
      if (!d.contains(k)) throw ValidationError(std::string("dpv needs '") + k + "'");
    DPVDecl decl;
    decl.vertical = get_string(d["vertical"], "dpv.vertical");
    decl.horizontal = get_strings(d["horizontal"], "dpv.horizontal");
    if (!d["tiles"].is_object()) throw ValidationError("dpv.tiles must be an object");
    for (const auto& [name, pair] : d["tiles"].items()) {
      auto v = get_strings(pair, "tile '" + name + "'");
      if (v.size() != 2) throw ValidationError("tile '" + name + "' must be [vertical letter, horizontal letter]");
      decl.tiles[name] = {v[0], v[1]};
    }
    if (!d["tile_grid"].is_object()) throw ValidationError("dpv.tile_grid must be an object");
    for (const auto& [name, g] : d["tile_grid"].items()) {
      const std::string where = "tile_grid '" + name + "'";
      only_keys(g, {"rows", "sigma"}, where);
      if (!g.contains("rows") || !g["rows"].is_array()) throw ValidationError(where + " needs 'rows'");
      TileGridDecl grid;
      for (const auto& row : g["rows"]) grid.rows.push_back(get_strings(row, where + " row"));
      if (g.contains("sigma")) grid.sigma = get_strings(g["sigma"], where + " sigma");
      decl.tile_grid[name] = std::move(grid);
    }
    doc.dpv = std::move(decl);
  }

  if (root.contains("options")) {
    const json& o = root["options"];
    only_keys(o, {"rounds", "max_word_len", "max_tiles", "precision_bits", "border_cap", "modulus_letter",
                  "tracked_letter"},
              "options");
    if (o.contains("rounds")) doc.options.rounds = get_unsigned<unsigned>(o["rounds"], "options.rounds");
    if (o.contains("max_word_len")) doc.options.max_word_len = get_unsigned<size_t>(o["max_word_len"], "options.max_word_len");
    if (o.contains("max_tiles")) doc.options.max_tiles = get_unsigned<size_t>(o["max_tiles"], "options.max_tiles");
    if (o.contains("precision_bits"))
      doc.options.precision_bits = get_unsigned<int>(o["precision_bits"], "options.precision_bits");
    if (o.contains("border_cap")) doc.options.border_cap = get_unsigned<unsigned>(o["border_cap"], "options.border_cap");
    if (o.contains("modulus_letter")) doc.options.modulus_letter = get_string(o["modulus_letter"], "options.modulus_letter");
    if (o.contains("tracked_letter")) doc.options.tracked_letter = get_string(o["tracked_letter"], "options.tracked_letter");
  }
  if (doc.options.rounds && *doc.options.rounds < 4) throw ValidationError("options.rounds must be at least 4");
  if (doc.dpv) (void)build_dpv(doc);
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read input document '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_document(const InputDocument& doc) {
  json root;
  root["alphabets"] = json::object();
  for (const auto& [k, v] : doc.alphabets) root["alphabets"][k] = v;
  root["substitutions"] = json::object();
  for (const auto& [k, s] : doc.substitutions) {
    json rules = json::object();
    for (const auto& [letter, image] : s.rules) rules[letter] = image_to_json(image);
    root["substitutions"][k] = {{"alphabet", s.alphabet}, {"rules", rules}};
  }
  if (doc.dpv) {
    json d;
    d["vertical"] = doc.dpv->vertical;
    d["horizontal"] = doc.dpv->horizontal;
    d["tiles"] = json::object();
    for (const auto& [k, t] : doc.dpv->tiles) d["tiles"][k] = {t.vertical, t.horizontal};
    d["tile_grid"] = json::object();
    for (const auto& [k, g] : doc.dpv->tile_grid) {
      json entry = {{"rows", g.rows}};
      if (!g.sigma.empty()) entry["sigma"] = g.sigma;
      d["tile_grid"][k] = entry;
    }
    root["dpv"] = d;
  }
  json o = json::object();
  const auto& op = doc.options;
  if (op.rounds) o["rounds"] = *op.rounds;
  if (op.max_word_len) o["max_word_len"] = *op.max_word_len;
  if (op.max_tiles) o["max_tiles"] = *op.max_tiles;
  if (op.precision_bits) o["precision_bits"] = *op.precision_bits;
  if (op.border_cap) o["border_cap"] = *op.border_cap;
  if (op.modulus_letter) o["modulus_letter"] = *op.modulus_letter;
  if (op.tracked_letter) o["tracked_letter"] = *op.tracked_letter;
  root["options"] = o;
  return root.dump(2) + "\n";
}

Substitution build_substitution(const InputDocument& doc, const std::string& name) {
  auto it = doc.substitutions.find(name);
  if (it == doc.substitutions.end()) throw ValidationError("unknown substitution '" + name + "'");
  const SubstitutionDecl& decl = it->second;
  Alphabet alpha(doc.alphabets.at(decl.alphabet));
  std::vector<Word> rules;
  for (const auto& letter : alpha.names()) {
    Word w;
    for (const auto& n : decl.rules.at(letter)) w.push_back(alpha.id(n));
    rules.push_back(std::move(w));
  }
  return Substitution(std::move(alpha), std::move(rules), name);
}

DPVSubstitution build_dpv(const InputDocument& doc) {
  if (!doc.dpv) throw ValidationError("document has no 'dpv' section");
  const DPVDecl& d = *doc.dpv;
  Substitution vertical = build_substitution(doc, d.vertical);
  std::vector<Substitution> horizontal;
  for (const auto& h : d.horizontal) horizontal.push_back(build_substitution(doc, h));
  if (horizontal.empty()) throw ValidationError("dpv.horizontal is empty");

  std::vector<std::string> names;
  for (const auto& [name, t] : d.tiles) names.push_back(name);
  auto index_of = [&](const std::string& n) -> size_t {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    throw ValidationError("unknown tile '" + n + "'");
  };
  auto sigma_of = [&](const std::string& n) -> size_t {
    for (size_t i = 0; i < d.horizontal.size(); ++i)
      if (d.horizontal[i] == n) return i;
    throw ValidationError("'" + n + "' is not in dpv.horizontal");
  };

  std::vector<DPVTile> tiles;
  std::vector<std::vector<size_t>> row_sigma(vertical.size());
  std::vector<bool> sigma_declared(vertical.size(), false);
  bool any_sigma = false;
  for (const auto& [name, t] : d.tiles) {
    DPVTile tile;
    tile.name = name;
    tile.vertical = vertical.alphabet().id(t.vertical);
    tile.horizontal = horizontal.front().alphabet().id(t.horizontal);
    auto g = d.tile_grid.find(name);
    if (g == d.tile_grid.end()) throw ValidationError("tile '" + name + "' has no tile_grid entry");
    // Rows are written top first; store bottom first.
    for (auto row = g->second.rows.rbegin(); row != g->second.rows.rend(); ++row) {
      std::vector<size_t> r;
      for (const auto& n : *row) r.push_back(index_of(n));
      if (r.empty()) throw ValidationError("tile '" + name + "' has an empty image row");
      tile.rows.push_back(std::move(r));
    }
    if (!g->second.sigma.empty()) {
      any_sigma = true;
      if (g->second.sigma.size() != g->second.rows.size())
        throw ValidationError("tile_grid '" + name + "' needs one sigma per row");
      std::vector<size_t> ks;
      for (auto s = g->second.sigma.rbegin(); s != g->second.sigma.rend(); ++s) ks.push_back(sigma_of(*s));
      if (sigma_declared[tile.vertical] && row_sigma[tile.vertical] != ks)
        throw ValidationError("tiles over vertical letter '" + t.vertical + "' declare different row substitutions");
      row_sigma[tile.vertical] = ks;
      sigma_declared[tile.vertical] = true;
    }
    tiles.push_back(std::move(tile));
  }
  for (const auto& [name, g] : d.tile_grid)
    if (!d.tiles.count(name)) throw ValidationError("tile_grid entry '" + name + "' has no tile");
  if (any_sigma)
    for (size_t v = 0; v < vertical.size(); ++v)
      if (!sigma_declared[v])
        throw ValidationError("row substitutions declared for some vertical letters but not '" +
                              vertical.alphabet().name(static_cast<LetterId>(v)) + "'");
  return DPVSubstitution(std::move(vertical), std::move(horizontal), std::move(tiles),
                         any_sigma ? row_sigma : std::vector<std::vector<size_t>>{});
}

AnalysisOptions analysis_options(const InputDocument& doc, const Substitution* horizontal) {
  AnalysisOptions a;
  const auto& o = doc.options;
  if (o.rounds) a.rounds = *o.rounds;
  if (o.border_cap) a.border_cap = *o.border_cap;
  if (o.max_word_len) a.trace.max_len = *o.max_word_len;
  if (o.precision_bits) a.trace.precision_bits = *o.precision_bits;
  std::optional<Substitution> h;
  if (horizontal) h = *horizontal;
  else if (doc.dpv && !doc.dpv->horizontal.empty()) h = build_substitution(doc, doc.dpv->horizontal.front());
  if ((o.tracked_letter || o.modulus_letter) && !h)
    throw ValidationError("letter options need a horizontal substitution to resolve against");
  if (o.tracked_letter) a.trace.tracked = h->alphabet().id(*o.tracked_letter);
  if (o.modulus_letter) a.trace.modulus = tile_lengths(*h).at(h->alphabet().id(*o.modulus_letter));
  return a;
}

}  // namespace faultline
