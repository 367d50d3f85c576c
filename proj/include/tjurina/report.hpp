#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tjurina/singularity.hpp"

namespace tjurina {

inline constexpr const char* kToolVersion = "1.0.0";

/// Serializable analysis report. Integers stay integers and rationals are
/// "p/q" strings; nothing is ever a float.
struct ReportDocument {
  std::string version = kToolVersion;
  std::string curve;
  std::vector<std::string> point;
  int multiplicity = 0;
  std::optional<bool> ordinary;
  std::optional<long> tjurina;
  std::optional<long> milnor;
  std::optional<int> symmetry_order;
  std::string classification;
  std::vector<std::pair<int, long>> trace_tjurina;
  std::vector<std::pair<int, long>> trace_milnor;
  std::vector<std::string> warnings;
  long elapsed_ms = 0;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_report(const std::string& curve_text, const SingularityReport& report, long elapsed_ms);

nlohmann::json to_json(const ReportDocument& doc);
/// Throws nlohmann::json exceptions on missing keys or wrong types.
ReportDocument report_from_json(const nlohmann::json& j);

/// Human-readable classification line, e.g. "A_5 (tau = 5)".
std::string classification_line(const Polynomial& f, const SingularityReport& report);

}  // namespace tjurina
