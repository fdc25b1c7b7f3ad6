#include "mahlerlab/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mahlerlab {

namespace {

using nlohmann::json;

// RFC 4180 style quoting, applied only when the cell needs it.
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string emit_csv(const ExperimentReport& r) {
  std::ostringstream os;
  os << "# experiment: " << r.experiment << '\n';
  for (const auto& [k, v] : r.params) os << "# param " << k << '=' << v << '\n';
  for (const auto& [k, v] : r.summary)
    os << "# summary " << k << '=' << v << '\n';
  os << "# verdict: " << verdict_name(r.verdict) << '\n';
  for (size_t i = 0; i < r.columns.size(); ++i)
    os << (i ? "," : "") << csv_escape(r.columns[i]);
  os << '\n';
  for (const auto& row : r.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_escape(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string emit_json(const ExperimentReport& r) {
  json j;
  j["experiment"] = r.experiment;
  j["params"] = json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["param_order"] = json::array();
  for (const auto& [k, v] : r.params) j["param_order"].push_back(k);
  j["columns"] = r.columns;
  j["rows"] = r.rows;
  j["summary"] = json::object();
  for (const auto& [k, v] : r.summary) j["summary"][k] = v;
  j["summary_order"] = json::array();
  for (const auto& [k, v] : r.summary) j["summary_order"].push_back(k);
  j["verdict"] = verdict_name(r.verdict);
  return j.dump(2) + "\n";
}

// One whitespace-separated block per data column, first column as abscissa.
std::string emit_plotdata(const ExperimentReport& r) {
  std::ostringstream os;
  os << "# experiment: " << r.experiment << '\n';
  for (const auto& [k, v] : r.params) os << "# param " << k << '=' << v << '\n';
  os << "# verdict: " << verdict_name(r.verdict) << '\n';
  for (size_t col = 1; col < r.columns.size(); ++col) {
    os << "\n# series: " << r.columns[col] << '\n';
    for (const auto& row : r.rows) {
      if (col < row.size()) os << row[0] << ' ' << row[col] << '\n';
    }
  }
  return os.str();
}

Verdict parse_verdict(const std::string& name) {
  if (name == "consistent") return Verdict::Consistent;
  if (name == "inconsistent") return Verdict::Inconsistent;
  if (name == "inconclusive") return Verdict::Inconclusive;
  throw std::invalid_argument("unknown verdict: " + name);
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "plotdata") return ReportFormat::PlotData;
  throw std::invalid_argument("unknown format: " + name);
}

std::string report_emit(const ExperimentReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv: return emit_csv(r);
    case ReportFormat::Json: return emit_json(r);
    case ReportFormat::PlotData: return emit_plotdata(r);
  }
  throw std::logic_error("unreachable");
}

ExperimentReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  ExperimentReport r;
  r.experiment = j.at("experiment").get<std::string>();
  for (const auto& k : j.at("param_order"))
    r.params.emplace_back(k.get<std::string>(),
                          j.at("params").at(k.get<std::string>()));
  r.columns = j.at("columns").get<std::vector<std::string>>();
  r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  for (const auto& k : j.at("summary_order"))
    r.summary.emplace_back(k.get<std::string>(),
                           j.at("summary").at(k.get<std::string>()));
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  return r;
}

}  // namespace mahlerlab
