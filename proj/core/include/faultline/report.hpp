#pragma once

#include <optional>
#include <string>

#include "faultline/document.hpp"

namespace faultline {

/// Selection and cap overrides shared by the report builders. Unset fields
/// fall back to the document options and then to library defaults.
struct ReportRequest {
  std::optional<std::string> subst;
  std::optional<std::string> top;
  std::optional<std::string> bottom;
  std::optional<std::string> seed;
  std::optional<unsigned> rounds;
  std::optional<size_t> max_word_len;
  std::optional<int> precision_bits;
};

/// A rendered report. `undetermined` marks a classification the tool
/// refused to commit to.
struct Report {
  std::string json;
  bool undetermined = false;
};

Report analyze_report(const InputDocument& doc, const ReportRequest& req = {});
Report ap_report(const InputDocument& doc, const ReportRequest& req = {});
Report mu_report(const InputDocument& doc, const ReportRequest& req = {});
Report fault_report(const InputDocument& doc, const ReportRequest& req = {});
Report cohomology_report(const InputDocument& doc, const ReportRequest& req = {});

/// Indented key/value text for any report; `table` objects with `columns`
/// and `rows` are laid out as aligned tables.
std::string format_text(const std::string& report_json);

}  // namespace faultline
