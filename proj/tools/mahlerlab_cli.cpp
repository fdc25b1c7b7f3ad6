// Command-line surface for the laboratory: continued fractions, period
// tables, Pisot classification, fractional parts of powers, the experiment
// runners and the nested-interval construction.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mahlerlab/cfrac.hpp"
#include "mahlerlab/experiments.hpp"
#include "mahlerlab/liouville.hpp"

namespace ml = mahlerlab;

namespace {

constexpr int kExitConsistent = 0;
constexpr int kExitInconsistent = 2;
constexpr int kExitInconclusive = 3;

// Accepts "p/q", integers and plain decimals like "0.7".
ml::Rational parse_rational_arg(const std::string& text) {
  std::string s = text;
  size_t dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    ml::Rational r{ml::Integer(digits)};
    for (size_t i = 0; i < frac_len; ++i) r /= 10;
    return r;
  }
  ml::Rational r(s);
  r.canonicalize();
  return r;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << text;
}

int verdict_exit(ml::Verdict v) {
  switch (v) {
    case ml::Verdict::Consistent: return kExitConsistent;
    case ml::Verdict::Inconsistent: return kExitInconsistent;
    default: return kExitInconclusive;
  }
}

int emit_report(const ml::ExperimentReport& r, const std::string& format,
                const std::string& out_path) {
  write_output(ml::report_emit(r, ml::parse_format(format)), out_path);
  return verdict_exit(r.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact continued-fraction and fractional-part laboratory"};
  app.require_subcommand(1);

  long prec = 256;
  std::string format = "csv";
  std::string out_path;
  app.add_option("--prec", prec, "working precision in bits")
      ->capture_default_str();
  app.add_option("--format", format, "report format: csv, json or plotdata")
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this file");

  // cf <surd>
  std::string cf_surd;
  CLI::App* cf = app.add_subcommand("cf", "continued fraction of a surd");
  cf->add_option("surd", cf_surd, "value, e.g. \"(1+sqrt(5))/2\"")->required();

  // powers <surd> --max-n N
  std::string powers_surd;
  unsigned long powers_max_n = 14;
  CLI::App* powers = app.add_subcommand("powers", "period table of x^n");
  powers->add_option("surd", powers_surd)->required();
  powers->add_option("--max-n", powers_max_n, "largest exponent")
      ->capture_default_str();

  // pisot <poly> --root k
  std::string pisot_poly;
  size_t pisot_root = 0;
  CLI::App* pisot = app.add_subcommand("pisot", "classify a polynomial root");
  pisot->add_option("poly", pisot_poly, "ascending coefficients, e.g. -1,-1,1")
      ->required();
  pisot->add_option("--root", pisot_root, "real root index, ascending from 0")
      ->capture_default_str();

  // fracpow <poly> --root k --n N
  std::string fracpow_poly;
  size_t fracpow_root = 0;
  unsigned long fracpow_n = 1;
  CLI::App* fracpow =
      app.add_subcommand("fracpow", "nearest integer and distance for x^n");
  fracpow->add_option("poly", fracpow_poly)->required();
  fracpow->add_option("--root", fracpow_root)->capture_default_str();
  fracpow->add_option("--n", fracpow_n, "exponent")->capture_default_str();

  // thm1 <poly> --root k --l RAT --max-n N
  std::string thm1_poly, thm1_l = "1/2";
  size_t thm1_root = 0;
  unsigned long thm1_max_n = 40;
  CLI::App* thm1 = app.add_subcommand("thm1", "decay of ||x^n|| against l^n");
  thm1->add_option("poly", thm1_poly)->required();
  thm1->add_option("--root", thm1_root)->capture_default_str();
  thm1->add_option("--l", thm1_l, "comparison base in (0,1)")
      ->capture_default_str();
  thm1->add_option("--max-n", thm1_max_n)->capture_default_str();

  // thm2 <surd> --max-n N
  std::string thm2_surd;
  unsigned long thm2_max_n = 14;
  CLI::App* thm2 = app.add_subcommand("thm2", "period trichotomy experiment");
  thm2->add_option("surd", thm2_surd)->required();
  thm2->add_option("--max-n", thm2_max_n)->capture_default_str();

  // mahler <rational> --l RAT --max-n N
  std::string mahler_value, mahler_l = "1/2";
  unsigned long mahler_max_n = 60;
  CLI::App* mahler =
      app.add_subcommand("mahler", "exact fractional parts of (p/q)^n");
  mahler->add_option("value", mahler_value, "rational > 1, not an integer")
      ->required();
  mahler->add_option("--l", mahler_l)->capture_default_str();
  mahler->add_option("--max-n", mahler_max_n)->capture_default_str();

  // scan11 <poly> --root k --delta RAT --eps RAT --n-max N --q-max Q
  std::string scan_poly, scan_delta = "1", scan_eps = "1/5";
  size_t scan_root = 0;
  unsigned long scan_n_max = 40, scan_q_max = 1;
  CLI::App* scan11 =
      app.add_subcommand("scan11", "approximation inequality scan");
  scan11->add_option("poly", scan_poly)->required();
  scan11->add_option("--root", scan_root)->capture_default_str();
  scan11->add_option("--delta", scan_delta)->capture_default_str();
  scan11->add_option("--eps", scan_eps)->capture_default_str();
  scan11->add_option("--n-max", scan_n_max)->capture_default_str();
  scan11->add_option("--q-max", scan_q_max)->capture_default_str();

  // liouville --depth K --schedule default|zeros|FILE
  unsigned long liouville_depth = 4;
  std::string liouville_schedule = "default";
  CLI::App* liouville =
      app.add_subcommand("liouville", "nested-interval construction");
  liouville->add_option("--depth", liouville_depth)->capture_default_str();
  liouville->add_option("--schedule", liouville_schedule,
                        "default, zeros, or a file of rational beta values")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  ml::ExperimentOptions opt;
  opt.prec = prec;

  try {
    if (cf->parsed()) {
      ml::QuadIrr x = ml::parse_quadirr(cf_surd);
      write_output(ml::format_cf(ml::expand(x)) + "\n", out_path);
      return kExitConsistent;
    }
    if (powers->parsed()) {
      ml::QuadIrr x = ml::parse_quadirr(powers_surd);
      return emit_report(ml::exp_theorem2(x, powers_max_n, opt), format,
                         out_path);
    }
    if (pisot->parsed()) {
      ml::AlgebraicReal x = ml::AlgebraicReal::kth_real_root(
          ml::parse_polynomial(pisot_poly), pisot_root);
      ml::PisotClassification pc = ml::classify_pisot(x);
      std::ostringstream os;
      os << "kind: " << ml::pisot_kind_name(pc.kind) << "\n"
         << "trace: " << pc.trace << "\n"
         << "monic: " << (pc.monic ? "yes" : "no") << "\n"
         << "conjugates_inside_unit_disk: " << pc.conjugates_inside << "\n";
      write_output(os.str(), out_path);
      return kExitConsistent;
    }
    if (fracpow->parsed()) {
      ml::AlgebraicReal x = ml::AlgebraicReal::kth_real_root(
          ml::parse_polynomial(fracpow_poly), fracpow_root);
      ml::FracPowerResult res = ml::frac_power(x, fracpow_n, prec);
      if (res.ambiguous_at_cap) {
        write_output("inconclusive at precision cap\n", out_path);
        return kExitInconclusive;
      }
      std::ostringstream os;
      os << "nearest: " << res.nearest << "\n"
         << "dist_lo: " << ml::dyadic_to_decimal(res.dist.lo(), 30, false)
         << "\n"
         << "dist_hi: " << ml::dyadic_to_decimal(res.dist.hi(), 30, true)
         << "\n"
         << "precision_bits: " << res.precision_used << "\n";
      write_output(os.str(), out_path);
      return kExitConsistent;
    }
    if (thm1->parsed()) {
      ml::AlgebraicReal x = ml::AlgebraicReal::kth_real_root(
          ml::parse_polynomial(thm1_poly), thm1_root);
      return emit_report(
          ml::exp_theorem1(x, parse_rational_arg(thm1_l), thm1_max_n, opt),
          format, out_path);
    }
    if (thm2->parsed()) {
      ml::QuadIrr x = ml::parse_quadirr(thm2_surd);
      return emit_report(ml::exp_theorem2(x, thm2_max_n, opt), format,
                         out_path);
    }
    if (mahler->parsed()) {
      return emit_report(
          ml::exp_mahler_rational(parse_rational_arg(mahler_value),
                                  parse_rational_arg(mahler_l), mahler_max_n,
                                  opt),
          format, out_path);
    }
    if (scan11->parsed()) {
      ml::AlgebraicReal x = ml::AlgebraicReal::kth_real_root(
          ml::parse_polynomial(scan_poly), scan_root);
      return emit_report(
          ml::scan_main_theorem(x, parse_rational_arg(scan_delta),
                                parse_rational_arg(scan_eps), scan_n_max,
                                scan_q_max, opt),
          format, out_path);
    }
    if (liouville->parsed()) {
      ml::BetaSchedule schedule = ml::BetaSchedule::standard();
      if (liouville_schedule == "zeros") {
        schedule = ml::BetaSchedule::zeros();
      } else if (liouville_schedule != "default") {
        std::ifstream in(liouville_schedule);
        if (!in)
          throw std::runtime_error("cannot open schedule file: " +
                                   liouville_schedule);
        std::vector<ml::Rational> values;
        std::string tok;
        while (in >> tok) values.push_back(parse_rational_arg(tok));
        schedule = ml::BetaSchedule::from_values(std::move(values));
      }
      ml::ConstructionTrace trace = ml::construct(schedule, liouville_depth);
      std::vector<ml::CertificateVerdict> certs =
          ml::verify_certificates(trace);
      ml::DyadicInterval alpha = ml::alpha_enclosure(trace, prec);
      std::ostringstream os;
      os << ml::serialize_trace(trace);
      bool all_ok = true;
      for (const ml::CertificateVerdict& c : certs) {
        os << "# cert " << c.n << (c.certified ? " ok" : " FAIL") << " frac ["
           << c.frac_lo << ", " << c.frac_hi << "] norm [" << c.norm_lo << ", "
           << c.norm_hi << "]\n";
        all_ok = all_ok && c.certified;
      }
      os << "# alpha in [" << ml::dyadic_to_decimal(alpha.lo(), 30, false)
         << ", " << ml::dyadic_to_decimal(alpha.hi(), 30, true) << "]\n";
      write_output(os.str(), out_path);
      return all_ok ? kExitConsistent : kExitInconsistent;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitConsistent;
}
