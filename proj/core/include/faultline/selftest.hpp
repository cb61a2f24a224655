#pragma once

#include <string>
#include <vector>

namespace faultline {

struct BundledDocument {
  std::string name;
  std::string json;
};

/// The worked example documents compiled into the library.
const std::vector<BundledDocument>& bundled_documents();
/// Throws ValidationError for an unknown name.
const BundledDocument& bundled_document(const std::string& name);

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::vector<std::string> mismatches;
};

struct SelftestResult {
  std::vector<SelftestCase> cases;
  bool passed() const;
  std::string json() const;
};

/// Runs the cohomology pipeline on every bundled document and compares
/// against the expected groups.
SelftestResult run_selftest();

}  // namespace faultline
