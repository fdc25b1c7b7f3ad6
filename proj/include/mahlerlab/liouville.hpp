// Inductive construction of a real alpha >= 2 whose powers alpha^{B_n} have
// prescribed fractional parts, with machine-checkable exact certificates.
#ifndef MAHLERLAB_LIOUVILLE_HPP
#define MAHLERLAB_LIOUVILLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "mahlerlab/exactnum.hpp"

namespace mahlerlab {

struct RationalInterval {
  Rational lo, hi;
  Rational length() const { return hi - lo; }
};

// Rule n >= 1 -> beta_n in [0, 1/2]. Rational values only, so every
// certificate stays exactly checkable.
class BetaSchedule {
 public:
  static BetaSchedule standard();  // 0 for even n, 1/3 for odd n
  static BetaSchedule zeros();
  static BetaSchedule from_values(std::vector<Rational> values);  // 1-based

  Rational at(unsigned long n) const;

 private:
  std::function<Rational(unsigned long)> rule_;
};

struct ConstructionStep {
  unsigned long n = 0;     // step index, n >= 1
  Integer b;               // b_n, divisible by n
  Integer big_b;           // B_n = b_0 ... b_n
  Integer q;               // integer offset of I_n
  RationalInterval interval;  // I_n = [q + beta, q + beta + 2^-B_n]
  Rational beta;
};

struct ConstructionTrace {
  std::vector<ConstructionStep> steps;
};

/// Deterministic construction: minimal b_{n+1} divisible by n+1 with
/// length(I_n^{b_{n+1}}) > 2, minimal integer q fitting the subinterval.
ConstructionTrace construct(const BetaSchedule& schedule, unsigned long depth);

/// Independent validator: re-verifies every divisibility, length and
/// containment condition from the raw trace data. Throws on violation.
void validate_trace(const ConstructionTrace& trace);

/// Certified enclosure of the limit alpha (intersection of the nested root
/// intervals J_n = I_n^{1/B_n}).
DyadicInterval alpha_enclosure(const ConstructionTrace& trace, long prec);

struct CertificateVerdict {
  unsigned long n = 0;
  bool certified = false;        // frac(alpha^{B_n}) in [beta, beta + 2^-B_n]
  Rational frac_lo, frac_hi;     // certified range of the fractional part
  Rational norm_lo;              // certified lower bound on ||alpha^{B_n}||
  Rational norm_hi;              // certified upper bound
};

/// Exact certificates: for every x with x^{B_depth} in I_depth (in particular
/// alpha), x^{B_n} lies in I_n, checked via I_depth subset of
/// I_n^(B_depth/B_n) in exact rational arithmetic.
std::vector<CertificateVerdict> verify_certificates(
    const ConstructionTrace& trace);

/// Line-oriented records "n b B q I.lo I.hi beta" with exact rational fields.
std::string serialize_trace(const ConstructionTrace& trace);
ConstructionTrace parse_trace(const std::string& text);

}  // namespace mahlerlab

#endif  // MAHLERLAB_LIOUVILLE_HPP
