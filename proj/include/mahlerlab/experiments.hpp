// Desk-scale experiment runners: fractional-part decay, period growth of
// powers of quadratic irrationals, the exact rational case, and the
// approximation-inequality scanner. Every verdict is backed by exact or
// certified-interval data carried in the report rows.
#ifndef MAHLERLAB_EXPERIMENTS_HPP
#define MAHLERLAB_EXPERIMENTS_HPP

#include "mahlerlab/algnum.hpp"
#include "mahlerlab/quadirr.hpp"
#include "mahlerlab/report.hpp"

namespace mahlerlab {

struct ExperimentOptions {
  long prec = 256;        // working precision in bits
  long prec_cap = 1 << 20;
  // "Tends to infinity" proxies: required strict increases of the running max.
  int growth_threshold = 4;
  // Tail-density threshold for calling a hit pattern persistent: at least
  // num/den of the rows with n > N/2 must be certified hits.
  Rational tail_density{1, 2};
  // Powers 1..power_cap of x are classified when judging persistence.
  unsigned long power_cap = 8;
};

/// Certified table of ||x^n|| against l^n, 1 <= n <= max_n, plus a check that
/// a persistent hit pattern only occurs when some power of x is Pisot.
ExperimentReport exp_theorem1(const AlgebraicReal& x, const Rational& l,
                              unsigned long max_n,
                              const ExperimentOptions& opt = {});

/// Period table of x^n, 1 <= n <= max_n, with the unit / sqrt-of-rational /
/// generic trichotomy verdict.
ExperimentReport exp_theorem2(const QuadIrr& x, unsigned long max_n,
                              const ExperimentOptions& opt = {});

/// Exact table of frac((p/q)^n) against l^n for a non-integer rational > 1.
ExperimentReport exp_mahler_rational(const Rational& p_over_q,
                                     const Rational& l, unsigned long max_n,
                                     const ExperimentOptions& opt = {});

/// Scan of 0 < ||delta q x^n|| < H(x)^{-eps n} q^{-d-eps} over q <= q_max,
/// n <= n_max; every certified solution is classified via the scaled power's
/// characteristic polynomial.
ExperimentReport scan_main_theorem(const AlgebraicReal& x,
                                   const Rational& delta, const Rational& eps,
                                   unsigned long n_max, unsigned long q_max,
                                   const ExperimentOptions& opt = {});

}  // namespace mahlerlab

#endif  // MAHLERLAB_EXPERIMENTS_HPP
