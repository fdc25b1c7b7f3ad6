#include "mahlerlab/liouville.hpp"

#include <sstream>
#include <stdexcept>

namespace mahlerlab {

namespace {

unsigned long to_ulong(const Integer& n, const char* what) {
  if (sgn(n) < 0 || !n.fits_ulong_p())
    throw std::overflow_error(std::string(what) + " out of range");
  return n.get_ui();
}

Rational rat_pow(const Rational& x, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), x.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), x.get_den().get_mpz_t(), e);
  return r;  // stays canonical: powering preserves coprimality
}

Rational pow2_inv(const Integer& big_b) {
  Rational w(1);
  mpz_mul_2exp(w.get_den().get_mpz_t(), w.get_den().get_mpz_t(),
               to_ulong(big_b, "B_n"));
  return w;
}

RationalInterval interval_pow(const RationalInterval& iv, unsigned long e) {
  return {rat_pow(iv.lo, e), rat_pow(iv.hi, e)};
}

}  // namespace

BetaSchedule BetaSchedule::standard() {
  BetaSchedule s;
  s.rule_ = [](unsigned long n) {
    return n % 2 == 0 ? Rational(0) : Rational(1, 3);
  };
  return s;
}

BetaSchedule BetaSchedule::zeros() {
  BetaSchedule s;
  s.rule_ = [](unsigned long) { return Rational(0); };
  return s;
}

BetaSchedule BetaSchedule::from_values(std::vector<Rational> values) {
  BetaSchedule s;
  s.rule_ = [values = std::move(values)](unsigned long n) {
    if (n == 0 || n > values.size())
      throw std::out_of_range("beta schedule has no value for this step");
    return values[n - 1];
  };
  return s;
}

Rational BetaSchedule::at(unsigned long n) const {
  if (!rule_) throw std::logic_error("empty beta schedule");
  Rational beta = rule_(n);
  if (sgn(beta) < 0 || beta > Rational(1, 2))
    throw std::domain_error("beta outside [0, 1/2]");
  return beta;
}

ConstructionTrace construct(const BetaSchedule& schedule, unsigned long depth) {
  ConstructionTrace trace;
  ConstructionStep base;
  base.n = 0;
  base.b = 1;
  base.big_b = 1;
  base.q = 2;
  base.beta = 0;
  base.interval = {Rational(2), Rational(3)};
  trace.steps.push_back(base);

  for (unsigned long n = 1; n <= depth; ++n) {
    const ConstructionStep& prev = trace.steps.back();
    ConstructionStep step;
    step.n = n;
    step.beta = schedule.at(n);

    // Minimal multiple of n whose power stretches I_{n-1} past length 2, so
    // the image contains a full unit interval and the offset q below exists.
    Integer b = n;
    RationalInterval powered = interval_pow(prev.interval, to_ulong(b, "b_n"));
    while (powered.length() <= 2) {
      b += n;
      powered = interval_pow(prev.interval, to_ulong(b, "b_n"));
    }
    step.b = b;
    step.big_b = prev.big_b * b;

    step.q = rational_ceil(powered.lo - step.beta);
    Rational lo = step.q + step.beta;
    step.interval = {lo, lo + pow2_inv(step.big_b)};
    if (step.interval.lo < powered.lo || step.interval.hi > powered.hi)
      throw std::logic_error("constructed interval escapes the power image");
    trace.steps.push_back(step);
  }
  return trace;
}

void validate_trace(const ConstructionTrace& trace) {
  if (trace.steps.empty()) throw std::invalid_argument("empty trace");
  const ConstructionStep& base = trace.steps.front();
  if (base.n != 0 || base.b != 1 || base.big_b != 1 ||
      base.interval.lo != 2 || base.interval.hi != 3 || sgn(base.beta) != 0)
    throw std::invalid_argument("trace must start from [2, 3]");

  for (size_t i = 1; i < trace.steps.size(); ++i) {
    const ConstructionStep& prev = trace.steps[i - 1];
    const ConstructionStep& step = trace.steps[i];
    auto fail = [&](const char* msg) {
      std::ostringstream os;
      os << "trace step " << step.n << ": " << msg;
      throw std::invalid_argument(os.str());
    };

    if (step.n != i) fail("step indices must be consecutive");
    if (sgn(step.b) <= 0 || !mpz_divisible_ui_p(step.b.get_mpz_t(), i))
      fail("b_n must be a positive multiple of n");
    if (step.big_b != prev.big_b * step.b) fail("B_n must equal B_{n-1} b_n");
    if (sgn(step.beta) < 0 || step.beta > Rational(1, 2))
      fail("beta_n must lie in [0, 1/2]");
    if (step.interval.lo != step.q + step.beta) fail("I_n must start at q_n + beta_n");
    if (step.interval.length() != pow2_inv(step.big_b))
      fail("I_n must have length 2^-B_n");

    RationalInterval powered =
        interval_pow(prev.interval, to_ulong(step.b, "b_n"));
    if (powered.length() <= 2) fail("previous interval power too short");
    if (step.interval.lo < powered.lo || step.interval.hi > powered.hi)
      fail("I_n must be contained in the power of I_{n-1}");
    if (step.interval.lo < 2) fail("intervals must stay in [2, oo)");
  }
}

DyadicInterval alpha_enclosure(const ConstructionTrace& trace, long prec) {
  validate_trace(trace);
  DyadicInterval out = DyadicInterval::from_endpoints(
      trace.steps.front().interval.lo, trace.steps.front().interval.hi, prec);
  for (size_t i = 1; i < trace.steps.size(); ++i) {
    const ConstructionStep& step = trace.steps[i];
    DyadicInterval in = DyadicInterval::from_endpoints(
        step.interval.lo, step.interval.hi, prec + 32);
    DyadicInterval root = iv_root(in, to_ulong(step.big_b, "B_n"), prec);
    out = iv_intersect(out, root);
  }
  return out;
}

std::vector<CertificateVerdict> verify_certificates(
    const ConstructionTrace& trace) {
  validate_trace(trace);
  std::vector<CertificateVerdict> out;
  if (trace.steps.size() < 2) return out;
  const ConstructionStep& deepest = trace.steps.back();

  for (size_t i = 1; i < trace.steps.size(); ++i) {
    const ConstructionStep& step = trace.steps[i];
    CertificateVerdict v;
    v.n = step.n;

    // alpha^{B_deepest} lies in I_deepest; certifying alpha^{B_n} in I_n is
    // the exact rational containment I_deepest subset I_n^(B_deepest / B_n).
    Integer ratio_z = deepest.big_b / step.big_b;  // exact by construction
    unsigned long ratio = to_ulong(ratio_z, "exponent ratio");
    RationalInterval target = interval_pow(step.interval, ratio);
    v.certified = deepest.interval.lo >= target.lo &&
                  deepest.interval.hi <= target.hi;

    // I_n = [q + beta, q + beta + 2^-B_n] with beta + 2^-B_n < 1, so the
    // fractional part of anything in I_n is pinned to that window.
    v.frac_lo = step.beta;
    v.frac_hi = step.beta + pow2_inv(step.big_b);

    Rational half(1, 2);
    if (v.frac_hi <= half) {
      v.norm_lo = v.frac_lo;
      v.norm_hi = v.frac_hi;
    } else if (v.frac_lo >= half) {
      v.norm_lo = 1 - v.frac_hi;
      v.norm_hi = 1 - v.frac_lo;
    } else {
      v.norm_lo = std::min(v.frac_lo, Rational(1 - v.frac_hi));
      v.norm_hi = half;
    }
    out.push_back(v);
  }
  return out;
}

std::string serialize_trace(const ConstructionTrace& trace) {
  std::ostringstream os;
  for (const ConstructionStep& s : trace.steps) {
    os << s.n << ' ' << s.b << ' ' << s.big_b << ' ' << s.q << ' '
       << s.interval.lo << ' ' << s.interval.hi << ' ' << s.beta << '\n';
  }
  return os.str();
}

ConstructionTrace parse_trace(const std::string& text) {
  ConstructionTrace trace;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string b, big_b, q, lo, hi, beta;
    ConstructionStep s;
    if (!(ls >> s.n >> b >> big_b >> q >> lo >> hi >> beta))
      throw std::invalid_argument("malformed trace line: " + line);
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("trailing fields in trace line: " + line);
    s.b = Integer(b);
    s.big_b = Integer(big_b);
    s.q = Integer(q);
    s.interval.lo = Rational(lo);
    s.interval.hi = Rational(hi);
    s.beta = Rational(beta);
    s.interval.lo.canonicalize();
    s.interval.hi.canonicalize();
    s.beta.canonicalize();
    trace.steps.push_back(s);
  }
  validate_trace(trace);
  return trace;
}

}  // namespace mahlerlab
