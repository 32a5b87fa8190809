#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "covmat/concurrence.hpp"
#include "covmat/criteria.hpp"

namespace covmat::cli {

enum class Format { kText, kJson, kCsv };

Format format_from_string(const std::string& text);

/// Everything `covmat analyze` reports about one state.
struct AnalysisReport {
  std::string state_description;
  std::vector<int> dims;
  std::vector<double> purities;
  std::vector<CriterionVerdict> verdicts;
  std::optional<MultipartiteReport> multipartite;
  std::optional<ConcurrenceBounds> bounds;
  std::map<std::string, double> timing_ms;

  bool any_entangled() const;
  bool operator==(const AnalysisReport&) const = default;
};

/// 12 significant digits, '.' as decimal point regardless of locale.
std::string format_number(double x);

std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& text);

void write_report(std::ostream& out, const AnalysisReport& report, Format format);

}  // namespace covmat::cli
