// Python bindings for the mahlerlab core. The interface is string-first:
// surds, continued fractions, polynomials, and rationals cross the boundary
// in the same text formats the CLI uses, so every result stays exact.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mahlerlab/cfrac.hpp"
#include "mahlerlab/experiments.hpp"
#include "mahlerlab/liouville.hpp"
#include "mahlerlab/report.hpp"

namespace py = pybind11;
using namespace mahlerlab;

namespace {

Rational parse_rational(const std::string& text) {
  Rational r(text);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

AlgebraicReal make_root(const std::string& poly, size_t root_index) {
  return AlgebraicReal::kth_real_root(parse_polynomial(poly), root_index);
}

py::dict report_dict(const ExperimentReport& r) {
  py::dict out;
  out["experiment"] = r.experiment;
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  out["params"] = params;
  out["columns"] = r.columns;
  out["rows"] = r.rows;
  py::dict summary;
  for (const auto& [k, v] : r.summary) summary[py::str(k)] = v;
  out["summary"] = summary;
  out["verdict"] = verdict_name(r.verdict);
  return out;
}

py::dict interval_dict(const DyadicInterval& iv) {
  py::dict out;
  out["lo"] = rational_str(iv.lo_rational());
  out["hi"] = rational_str(iv.hi_rational());
  out["lo_decimal"] = dyadic_to_decimal(iv.lo(), 18, false);
  out["hi_decimal"] = dyadic_to_decimal(iv.hi(), 18, true);
  return out;
}

}  // namespace

PYBIND11_MODULE(_mahlerlab, m) {
  m.doc() =
      "Exact continued fractions, Pisot classification, and certified "
      "fractional-part experiments for quadratic and algebraic numbers.";

  // --- continued fractions ---------------------------------------------
  m.def(
      "cf_expand",
      [](const std::string& surd) {
        return format_cf(expand(parse_quadirr(surd)));
      },
      py::arg("surd"),
      "Exact continued fraction of a surd '(a+b*sqrt(D))/c', as "
      "'[a0; a1, (p1, p2, ...)]'.");

  m.def(
      "cf_evaluate",
      [](const std::string& cf) { return evaluate(parse_cf(cf)).str(); },
      py::arg("cf"),
      "Exact value of an eventually periodic continued fraction, as a surd "
      "string.");

  m.def(
      "cf_convergents",
      [](const std::string& cf, size_t count) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [p, q] : convergents(parse_cf(cf), count))
          out.emplace_back(p.get_str(), q.get_str());
        return out;
      },
      py::arg("cf"), py::arg("count"),
      "First `count` convergents (p, q) as decimal strings.");

  m.def(
      "surd_classify",
      [](const std::string& surd) {
        QuadIrr x = parse_quadirr(surd);
        QuadClassification c = classify(x);
        py::dict out;
        out["trace"] = rational_str(c.trace);
        out["norm"] = rational_str(c.norm);
        out["is_algebraic_integer"] = c.is_algebraic_integer;
        out["is_unit"] = c.is_unit;
        out["is_sqrt_of_rational"] = c.is_sqrt_of_rational;
        out["min_poly"] = min_poly(x).str();
        return out;
      },
      py::arg("surd"),
      "Trace, norm, unit/integer flags and minimal polynomial of a surd.");

  m.def(
      "period_table",
      [](const std::string& surd, unsigned long max_exponent) {
        std::vector<py::dict> out;
        for (const PowerPeriodRow& row :
             period_of_power_table(parse_quadirr(surd), max_exponent)) {
          py::dict d;
          d["n"] = row.n;
          d["rational"] = row.rational;
          d["preperiod"] = row.preperiod_length;
          d["period"] = row.period_length;
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("surd"), py::arg("max_exponent"),
      "Continued-fraction period lengths of x^n for n up to max_exponent.");

  // --- algebraic numbers ------------------------------------------------
  m.def(
      "pisot_classify",
      [](const std::string& poly, size_t root_index) {
        PisotClassification c = classify_pisot(make_root(poly, root_index));
        py::dict out;
        out["kind"] = pisot_kind_name(c.kind);
        out["trace"] = rational_str(c.trace);
        out["conjugates_inside"] = c.conjugates_inside;
        out["conjugates_on_circle"] = c.conjugates_on_circle;
        out["monic"] = c.monic;
        return out;
      },
      py::arg("poly"), py::arg("root_index") = 0,
      "Pisot / pseudo-Pisot / Neither classification of the root_index-th "
      "real root (ascending) of an integer polynomial given as ascending "
      "coefficients 'c0,c1,...'.");

  m.def(
      "mahler_measure",
      [](const std::string& poly, long prec) {
        return interval_dict(mahler_measure(parse_polynomial(poly), prec));
      },
      py::arg("poly"), py::arg("prec") = 128,
      "Certified enclosure of the Mahler measure.");

  m.def(
      "weil_height",
      [](const std::string& poly, size_t root_index, long prec) {
        return interval_dict(weil_height(make_root(poly, root_index), prec));
      },
      py::arg("poly"), py::arg("root_index") = 0, py::arg("prec") = 128,
      "Certified enclosure of the absolute Weil height of a root.");

  m.def(
      "frac_power",
      [](const std::string& poly, size_t root_index, unsigned long n,
         const std::string& scale, long prec) {
        FracPowerResult fp = frac_power_scaled(
            make_root(poly, root_index), n, parse_rational(scale), prec);
        py::dict out;
        out["nearest"] = fp.nearest.get_str();
        out["dist"] = interval_dict(fp.dist);
        out["ambiguous_at_cap"] = fp.ambiguous_at_cap;
        out["precision_used"] = fp.precision_used;
        return out;
      },
      py::arg("poly"), py::arg("root_index"), py::arg("n"),
      py::arg("scale") = "1", py::arg("prec") = 64,
      "Certified nearest integer and distance for scale * alpha^n.");

  m.def(
      "schur_cohn_inside",
      [](const std::string& poly) {
        return schur_cohn_inside(parse_polynomial(poly));
      },
      py::arg("poly"),
      "Exact number of roots strictly inside the unit disk.");

  // --- experiments ------------------------------------------------------
  m.def(
      "run_theorem1",
      [](const std::string& poly, size_t root_index, const std::string& l,
         unsigned long max_n) {
        return report_dict(exp_theorem1(make_root(poly, root_index),
                                        parse_rational(l), max_n));
      },
      py::arg("poly"), py::arg("root_index"), py::arg("l"), py::arg("max_n"),
      "Certified ||alpha^n|| vs l^n table with persistence verdict.");

  m.def(
      "run_theorem2",
      [](const std::string& surd, unsigned long max_n) {
        return report_dict(exp_theorem2(parse_quadirr(surd), max_n));
      },
      py::arg("surd"), py::arg("max_n"),
      "Period-growth trichotomy report for powers of a surd.");

  m.def(
      "run_mahler_rational",
      [](const std::string& value, const std::string& l, unsigned long max_n) {
        return report_dict(exp_mahler_rational(parse_rational(value),
                                               parse_rational(l), max_n));
      },
      py::arg("value"), py::arg("l"), py::arg("max_n"),
      "Exact fractional-part table for a rational p/q > 1.");

  m.def(
      "run_scan",
      [](const std::string& poly, size_t root_index, const std::string& delta,
         const std::string& eps, unsigned long n_max, unsigned long q_max) {
        return report_dict(scan_main_theorem(
            make_root(poly, root_index), parse_rational(delta),
            parse_rational(eps), n_max, q_max));
      },
      py::arg("poly"), py::arg("root_index"), py::arg("delta"),
      py::arg("eps"), py::arg("n_max"), py::arg("q_max"),
      "Inequality scan over (q, n) with per-solution classification.");

  m.def(
      "report_emit",
      [](const py::dict& report, const std::string& format) {
        // round-trip through json to reuse the exact emitters
        ExperimentReport r;
        r.experiment = report["experiment"].cast<std::string>();
        for (auto item : report["params"].cast<py::dict>())
          r.params.emplace_back(item.first.cast<std::string>(),
                                item.second.cast<std::string>());
        r.columns = report["columns"].cast<std::vector<std::string>>();
        r.rows =
            report["rows"].cast<std::vector<std::vector<std::string>>>();
        for (auto item : report["summary"].cast<py::dict>())
          r.summary.emplace_back(item.first.cast<std::string>(),
                                 item.second.cast<std::string>());
        std::string v = report["verdict"].cast<std::string>();
        r.verdict = v == "consistent"     ? Verdict::Consistent
                    : v == "inconsistent" ? Verdict::Inconsistent
                                          : Verdict::Inconclusive;
        return report_emit(r, parse_format(format));
      },
      py::arg("report"), py::arg("format") = "csv",
      "Serializes a report dict to 'csv', 'json', or 'plotdata'.");

  // --- nested-interval construction ------------------------------------
  m.def(
      "liouville_trace",
      [](unsigned long depth, const std::string& schedule) {
        BetaSchedule s = schedule == "zeros" ? BetaSchedule::zeros()
                                             : BetaSchedule::standard();
        return serialize_trace(construct(s, depth));
      },
      py::arg("depth"), py::arg("schedule") = "standard",
      "Serialized deterministic construction trace ('standard' or 'zeros' "
      "beta schedule).");

  m.def(
      "liouville_verify",
      [](const std::string& trace_text) {
        ConstructionTrace t = parse_trace(trace_text);
        std::vector<py::dict> out;
        for (const CertificateVerdict& c : verify_certificates(t)) {
          py::dict d;
          d["n"] = c.n;
          d["certified"] = c.certified;
          d["frac_lo"] = rational_str(c.frac_lo);
          d["frac_hi"] = rational_str(c.frac_hi);
          d["norm_lo"] = rational_str(c.norm_lo);
          d["norm_hi"] = rational_str(c.norm_hi);
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("trace"),
      "Re-validates a serialized trace and returns one certificate per "
      "depth.");

  m.def(
      "liouville_alpha",
      [](const std::string& trace_text, long prec) {
        return interval_dict(alpha_enclosure(parse_trace(trace_text), prec));
      },
      py::arg("trace"), py::arg("prec") = 256,
      "Certified enclosure of the limit point of a serialized trace.");
}
