#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "faultline/document.hpp"
#include "faultline/errors.hpp"
#include "faultline/render.hpp"
#include "faultline/report.hpp"
#include "faultline/selftest.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kUndetermined = 2, kResource = 3, kInternal = 4 };

struct Flags {
  std::string input;
  std::string output;
  std::string format = "json";
  std::optional<unsigned> rounds;
  std::optional<int> precision_bits;
  std::optional<size_t> max_word_len;
  std::optional<std::string> subst;
  std::optional<std::string> top;
  std::optional<std::string> bottom;
  std::optional<std::string> seed;
  unsigned overlay = 0;
  bool faults = false;
  std::string colors;
};

std::optional<size_t> env_size(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    size_t pos = 0;
    unsigned long long n = std::stoull(v, &pos);
    if (pos != std::string(v).size()) throw std::invalid_argument(v);
    return static_cast<size_t>(n);
  } catch (const std::exception&) {
    throw faultline::ValidationError(std::string(name) + " must be a non-negative integer");
  }
}

// "bundled:<name>" selects a document compiled into the library.
faultline::InputDocument load(const std::string& input) {
  if (input.empty()) throw faultline::ValidationError("--input is required");
  const std::string prefix = "bundled:";
  if (input.rfind(prefix, 0) == 0)
    return faultline::parse_document(faultline::bundled_document(input.substr(prefix.size())).json);
  return faultline::load_document(input);
}

faultline::ReportRequest request(const Flags& f) {
  faultline::ReportRequest r;
  r.subst = f.subst;
  r.top = f.top;
  r.bottom = f.bottom;
  r.seed = f.seed;
  r.rounds = f.rounds;
  r.precision_bits = f.precision_bits;
  r.max_word_len = f.max_word_len ? f.max_word_len : env_size("FAULTLINE_MAX_WORD_LEN");
  return r;
}

void write(const Flags& f, const std::string& body) {
  if (f.output.empty() || f.output == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(f.output, std::ios::binary);
  if (!out) throw faultline::ValidationError("cannot write '" + f.output + "'");
  out << body;
}

std::map<std::string, std::string> parse_colors(const std::string& spec) {
  std::map<std::string, std::string> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw faultline::ValidationError("--colors expects tile=color pairs, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

int emit_report(const Flags& f, const faultline::Report& r) {
  write(f, f.format == "text" ? faultline::format_text(r.json) : r.json);
  return r.undetermined ? kUndetermined : kOk;
}

int run_render(const Flags& f) {
  faultline::InputDocument doc = load(f.input);
  faultline::DPVSubstitution d = faultline::build_dpv(doc);
  size_t seed = f.seed ? d.tile_index(*f.seed) : 0;
  unsigned k = f.rounds.value_or(3);
  size_t cap = faultline::kDefaultMaxTiles;
  if (doc.options.max_tiles) cap = *doc.options.max_tiles;
  if (auto env = env_size("FAULTLINE_MAX_TILES")) cap = *env;
  faultline::Patch patch = faultline::generate_patch(d, seed, k, cap);
  if (!faultline::verify_patch(patch)) throw faultline::InternalError("generated patch does not tile its rectangle");
  faultline::SvgOptions opts;
  opts.colors = parse_colors(f.colors);
  opts.overlay_order = f.overlay;
  opts.fault_overlay = f.faults;
  write(f, faultline::emit_svg(patch, opts));
  return kOk;
}

int run_selftest(const Flags& f) {
  faultline::SelftestResult r = faultline::run_selftest();
  std::string body = r.json();
  write(f, f.format == "text" ? faultline::format_text(body) : body);
  return r.passed() ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault lines and cohomology of direct product variation tilings"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("-i,--input", f.input, "Input JSON document, or bundled:<name>");
    if (needs_input) in->required();
    sub->add_option("-o,--output", f.output, "Output path (default stdout)");
    sub->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  };
  auto caps = [&](CLI::App* sub) {
    sub->add_option("--rounds", f.rounds, "Substitution rounds")->check(CLI::PositiveNumber);
    sub->add_option("--precision-bits", f.precision_bits, "Root isolation precision")->check(CLI::Range(8, 4096));
    sub->add_option("--max-word-len", f.max_word_len, "Word length cap (env FAULTLINE_MAX_WORD_LEN)");
  };

  auto* analyze = app.add_subcommand("analyze", "Spectral data of the declared substitutions");
  common(analyze, true);
  caps(analyze);
  analyze->add_option("--subst", f.subst, "Analyze only this substitution");

  auto* ap = app.add_subcommand("ap", "Anderson-Putnam complex of a 1-d substitution");
  common(ap, true);
  caps(ap);
  ap->add_option("--subst", f.subst, "Substitution (default: the DPV vertical one)");

  auto* mu = app.add_subcommand("mu", "First cohomology of a 1-d substitution tiling space");
  common(mu, true);
  caps(mu);
  mu->add_option("--subst", f.subst, "Substitution (default: the first horizontal one)");

  auto* fault = app.add_subcommand("fault", "Trace the boundary between two aligned rows");
  common(fault, true);
  caps(fault);
  fault->add_option("--top", f.top, "Top row substitution");
  fault->add_option("--bottom", f.bottom, "Bottom row substitution");
  fault->add_option("--seed", f.seed, "Seed letter");

  auto* cohom = app.add_subcommand("cohomology", "Cohomology H0..H3 of a DPV tiling space");
  common(cohom, true);
  caps(cohom);

  auto* render = app.add_subcommand("render", "SVG patch of a DPV tiling");
  common(render, true);
  render->add_option("--rounds", f.rounds, "Substitution rounds (default 3)");
  render->add_option("--seed", f.seed, "Seed tile name");
  render->add_option("--overlay", f.overlay, "Draw order-(j-1) supertile band boundaries");
  render->add_option("--colors", f.colors, "Comma separated tile=color pairs");
  render->add_flag("--faults", f.faults, "Mark misaligned row boundaries");

  auto* selftest = app.add_subcommand("selftest", "Run the bundled examples against expected results");
  common(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    faultline::ReportRequest req = request(f);
    if (*analyze) return emit_report(f, faultline::analyze_report(load(f.input), req));
    if (*ap) return emit_report(f, faultline::ap_report(load(f.input), req));
    if (*mu) return emit_report(f, faultline::mu_report(load(f.input), req));
    if (*fault) return emit_report(f, faultline::fault_report(load(f.input), req));
    if (*cohom) return emit_report(f, faultline::cohomology_report(load(f.input), req));
    if (*render) return run_render(f);
    if (*selftest) return run_selftest(f);
  } catch (const faultline::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const faultline::HypothesisError& e) {
    std::cerr << "hypothesis not satisfied: " << e.what() << "\n";
    return kValidation;
  } catch (const faultline::UndeterminedError& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return kUndetermined;
  } catch (const faultline::ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
