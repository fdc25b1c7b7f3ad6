// Machine-readable experiment reports with deterministic serialization.
#ifndef MAHLERLAB_REPORT_HPP
#define MAHLERLAB_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace mahlerlab {

enum class Verdict { Consistent, Inconsistent, Inconclusive };

const char* verdict_name(Verdict v);

// Generic tabular report. Every cell is a string rendered from exact or
// certified values; serialization is byte-deterministic for fixed parameters.
struct ExperimentReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
  Verdict verdict = Verdict::Inconclusive;

  bool operator==(const ExperimentReport& o) const = default;
};

enum class ReportFormat { Csv, Json, PlotData };

ReportFormat parse_format(const std::string& name);  // "csv"|"json"|"plotdata"

std::string report_emit(const ExperimentReport& r, ReportFormat format);

/// Inverse of report_emit for the json format.
ExperimentReport report_from_json(const std::string& text);

}  // namespace mahlerlab

#endif  // MAHLERLAB_REPORT_HPP
