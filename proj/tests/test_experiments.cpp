#include "doctest.h"
#include "mahlerlab/experiments.hpp"

using namespace mahlerlab;

namespace {

AlgebraicReal golden() {
  return AlgebraicReal::kth_real_root(parse_polynomial("-1,-1,1"), 1);
}

const std::string* summary_value(const ExperimentReport& r,
                                 const std::string& key) {
  for (const auto& [k, v] : r.summary)
    if (k == key) return &v;
  return nullptr;
}

}  // namespace

TEST_CASE("theorem1 experiment on the golden ratio") {
  ExperimentReport r = exp_theorem1(golden(), make_rational(7, 10), 40);
  CHECK(r.verdict == Verdict::Consistent);
  REQUIRE(r.rows.size() == 40);
  for (const auto& row : r.rows) CHECK(row[4] == "hit");
  const std::string* pisot = summary_value(r, "pisot_power");
  REQUIRE(pisot);
  CHECK(*pisot == "1");
}

TEST_CASE("theorem1 experiment rejects bad parameters") {
  CHECK_THROWS_AS(exp_theorem1(golden(), Rational(2), 10), std::domain_error);
  AlgebraicReal small =
      AlgebraicReal::kth_real_root(parse_polynomial("-1,-1,1"), 0);
  CHECK_THROWS_AS(exp_theorem1(small, make_rational(1, 2), 10),
                  std::domain_error);
}

TEST_CASE("theorem1 hits die off for the non-integer pseudo-pisot root") {
  AlgebraicReal x = AlgebraicReal::kth_real_root(parse_polynomial("1,-6,2"), 1);
  ExperimentReport r = exp_theorem1(x, make_rational(1, 2), 40);
  CHECK(r.verdict == Verdict::Consistent);
  const std::string* tail = summary_value(r, "tail_hits");
  REQUIRE(tail);
  CHECK(*tail == "0");
}

TEST_CASE("theorem2 trichotomy") {
  ExperimentReport unit = exp_theorem2(parse_quadirr("1+sqrt(2)"), 20);
  CHECK(unit.verdict == Verdict::Consistent);
  CHECK(*summary_value(unit, "branch") == "bounded (unit)");

  ExperimentReport root = exp_theorem2(parse_quadirr("sqrt(2)"), 15);
  CHECK(root.verdict == Verdict::Consistent);
  CHECK(*summary_value(root, "branch") == "sqrt of rational");

  ExperimentReport generic = exp_theorem2(parse_quadirr("1+sqrt(3)"), 14);
  CHECK(generic.verdict == Verdict::Consistent);
  CHECK(*summary_value(generic, "branch") == "unbounded trend (non-unit)");
}

TEST_CASE("mahler rational experiment is exact") {
  ExperimentReport r =
      exp_mahler_rational(make_rational(3, 2), make_rational(1, 2), 60);
  CHECK(r.verdict == Verdict::Consistent);
  CHECK(*summary_value(r, "violations") == "1,2,4");

  // spot-check a row against exact recomputation: frac((3/2)^5) = 19/32
  REQUIRE(r.rows.size() == 60);
  CHECK(r.rows[4][1] == "19/32");

  CHECK_THROWS_AS(exp_mahler_rational(Rational(2), make_rational(1, 2), 10),
                  std::domain_error);
  CHECK_THROWS_AS(exp_mahler_rational(make_rational(1, 2), make_rational(1, 2),
                                      10),
                  std::domain_error);
}

TEST_CASE("main theorem scan on the golden ratio") {
  ExperimentReport r = scan_main_theorem(golden(), Rational(1),
                                         make_rational(1, 5), 40, 1);
  CHECK(r.verdict == Verdict::Consistent);
  CHECK(*summary_value(r, "solutions") == "40");
  CHECK(*summary_value(r, "non_pseudo_pisot_solutions") == "0");
  for (const auto& row : r.rows) {
    CHECK(row[6] == "solution");
    CHECK(row[7] == "Pisot");
  }
}

TEST_CASE("main theorem scan rejects zero delta") {
  CHECK_THROWS_AS(
      scan_main_theorem(golden(), Rational(0), make_rational(1, 5), 5, 1),
      std::domain_error);
  CHECK_THROWS_AS(
      scan_main_theorem(golden(), Rational(1), Rational(0), 5, 1),
      std::domain_error);
}

TEST_CASE("main theorem scan on a non-pisot quadratic stays consistent") {
  AlgebraicReal x = AlgebraicReal::kth_real_root(parse_polynomial("-3,-1,1"), 1);
  ExperimentReport r =
      scan_main_theorem(x, Rational(1), make_rational(1, 5), 40, 1);
  CHECK(r.verdict == Verdict::Consistent);
  // sporadic early solutions are fine; none may be classified pseudo-pisot
  for (const auto& row : r.rows)
    if (row[6] == "solution") CHECK(row[7] == "Neither");
}

TEST_CASE("reports are deterministic") {
  ExperimentReport a = exp_theorem1(golden(), make_rational(7, 10), 15);
  ExperimentReport b = exp_theorem1(golden(), make_rational(7, 10), 15);
  CHECK(report_emit(a, ReportFormat::Csv) == report_emit(b, ReportFormat::Csv));
  CHECK(report_emit(a, ReportFormat::Json) ==
        report_emit(b, ReportFormat::Json));
  CHECK(report_emit(a, ReportFormat::PlotData) ==
        report_emit(b, ReportFormat::PlotData));
}

TEST_CASE("json report round-trip") {
  ExperimentReport r = exp_theorem2(parse_quadirr("1+sqrt(2)"), 6);
  ExperimentReport back = report_from_json(report_emit(r, ReportFormat::Json));
  CHECK(back == r);
}

TEST_CASE("plotdata has one block per data series") {
  ExperimentReport r = exp_theorem2(parse_quadirr("1+sqrt(2)"), 5);
  std::string text = report_emit(r, ReportFormat::PlotData);
  size_t blocks = 0;
  for (size_t pos = 0; (pos = text.find("# series: ", pos)) != std::string::npos;
       ++pos)
    ++blocks;
  CHECK(blocks == r.columns.size() - 1);
}

TEST_CASE("csv cells are escaped when needed") {
  ExperimentReport r;
  r.experiment = "demo";
  r.columns = {"a", "b"};
  r.rows = {{"1,2", "he said \"hi\""}};
  std::string text = report_emit(r, ReportFormat::Csv);
  CHECK(text.find("\"1,2\"") != std::string::npos);
  CHECK(text.find("\"he said \"\"hi\"\"\"") != std::string::npos);
}

TEST_CASE("format names parse") {
  CHECK(parse_format("csv") == ReportFormat::Csv);
  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK(parse_format("plotdata") == ReportFormat::PlotData);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
