#include "tjurina/report.hpp"

#include "tjurina/expr.hpp"

namespace tjurina {

namespace {

std::vector<std::pair<int, long>> steps_of(const TruncationTrace& t) { return t.steps; }

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

nlohmann::json trace_json(const std::vector<std::pair<int, long>>& steps) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [r, alpha] : steps) arr.push_back({r, alpha});
  return arr;
}

std::vector<std::pair<int, long>> trace_from(const nlohmann::json& j) {
  std::vector<std::pair<int, long>> out;
  for (const auto& step : j) out.emplace_back(step.at(0).get<int>(), step.at(1).get<long>());
  return out;
}

}  // namespace

ReportDocument make_report(const std::string& curve_text, const SingularityReport& report, long elapsed_ms) {
  ReportDocument doc;
  doc.curve = curve_text;
  doc.point = {to_string(report.point.x), to_string(report.point.y)};
  doc.multiplicity = report.multiplicity;
  doc.ordinary = report.ordinary;
  doc.tjurina = report.tjurina;
  doc.milnor = report.milnor;
  doc.symmetry_order = report.symmetry_order;
  doc.classification = to_string(report.classification);
  doc.trace_tjurina = steps_of(report.trace_tjurina);
  doc.trace_milnor = steps_of(report.trace_milnor);
  doc.warnings = report.errors;
  doc.elapsed_ms = elapsed_ms;
  return doc;
}

nlohmann::json to_json(const ReportDocument& doc) {
  return {
      {"version", doc.version},
      {"curve", doc.curve},
      {"point", doc.point},
      {"multiplicity", doc.multiplicity},
      {"ordinary", optional_json(doc.ordinary)},
      {"tjurina", optional_json(doc.tjurina)},
      {"milnor", optional_json(doc.milnor)},
      {"symmetry_order", optional_json(doc.symmetry_order)},
      {"classification", doc.classification},
      {"trace_tjurina", trace_json(doc.trace_tjurina)},
      {"trace_milnor", trace_json(doc.trace_milnor)},
      {"warnings", doc.warnings},
      {"elapsed_ms", doc.elapsed_ms},
  };
}

ReportDocument report_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.version = j.at("version").get<std::string>();
  doc.curve = j.at("curve").get<std::string>();
  doc.point = j.at("point").get<std::vector<std::string>>();
  doc.multiplicity = j.at("multiplicity").get<int>();
  doc.ordinary = optional_from<bool>(j.at("ordinary"));
  doc.tjurina = optional_from<long>(j.at("tjurina"));
  doc.milnor = optional_from<long>(j.at("milnor"));
  doc.symmetry_order = optional_from<int>(j.at("symmetry_order"));
  doc.classification = j.at("classification").get<std::string>();
  doc.trace_tjurina = trace_from(j.at("trace_tjurina"));
  doc.trace_milnor = trace_from(j.at("trace_milnor"));
  doc.warnings = j.at("warnings").get<std::vector<std::string>>();
  doc.elapsed_ms = j.at("elapsed_ms").get<long>();
  return doc;
}

std::string classification_line(const Polynomial& f, const SingularityReport& report) {
  const Classification& c = report.classification;
  switch (c.kind) {
    case PointKind::SmoothPoint: {
      const Polynomial g = translate_to_origin(f, report.point);
      const Polynomial linear = homogeneous_component(g, 1);
      return "smooth point, tangent: " + render_poly(linear) + " = 0";
    }
    case PointKind::DoublePoint:
      if (!report.tjurina) return "double point (tau unavailable)";
      return "A_" + std::to_string(c.index) + (c.index == 1 ? " (node, tau = 1)" : " (tau = " + std::to_string(c.index) + ")");
    default:
      return to_string(c);
  }
}

}  // namespace tjurina
