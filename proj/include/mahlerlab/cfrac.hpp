// Exact continued-fraction engine for quadratic irrationals: expansion with
// guaranteed least-period detection, convergents, unimodular action, and the
// closed-form expansions of unit powers.
#ifndef MAHLERLAB_CFRAC_HPP
#define MAHLERLAB_CFRAC_HPP

#include <optional>
#include <string>
#include <vector>

#include "mahlerlab/quadirr.hpp"

namespace mahlerlab {

// (P + sqrt(D))/Q with Q | D - P^2, the normal form driving the expansion.
struct SurdState {
  Integer P, Q, D;
  bool operator==(const SurdState& o) const = default;
};

struct ContinuedFraction {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;  // nonempty for irrational inputs

  bool operator==(const ContinuedFraction& o) const = default;
  bool purely_periodic() const { return preperiod.empty(); }

  /// Partial quotient a_i of the unrolled expansion (periodic past the
  /// preperiod). Requires a nonempty period when i reaches past the preperiod.
  const Integer& quotient(size_t i) const;

  std::string str() const;
};

/// Converts a quadratic irrational to the Q | D - P^2 normal form. The naive
/// (P, Q, D) read-off breaks the integer recurrence; numerator and
/// denominator are scaled to restore divisibility.
SurdState to_surd_state(const QuadIrr& x);

QuadIrr surd_value(const SurdState& s);

/// True iff x > 1 and -1 < conj(x) < 0 (exact sign tests).
bool is_reduced(const QuadIrr& x);
bool is_reduced(const SurdState& s);

/// Exact expansion: least preperiod and least period.
ContinuedFraction expand(const QuadIrr& x);

/// First k convergents p_h/q_h of the unrolled expansion.
std::vector<std::pair<Integer, Integer>> convergents(
    const ContinuedFraction& cf, size_t k);

/// Reconstructs the exact value of an eventually periodic CF by solving the
/// fixed-point quadratic of the periodic tail and folding the preperiod back.
QuadIrr evaluate(const ContinuedFraction& cf);

struct Unimodular {
  Integer a, b, c, d;  // ad - bc = +-1
  Unimodular(Integer a_, Integer b_, Integer c_, Integer d_);
};

/// (a x + b)/(c x + d), exact.
QuadIrr apply_unimodular(const Unimodular& t, const QuadIrr& x);

struct PowerPeriodRow {
  unsigned long n = 0;
  size_t period_length = 0;  // 0 when x^n is rational (finite CF)
  size_t preperiod_length = 0;
  bool rational = false;
};

std::vector<PowerPeriodRow> period_of_power_table(const QuadIrr& x,
                                                  unsigned long max_exponent);

struct UnitClosedForm {
  ContinuedFraction cf;
  Integer trace_n;
  bool below_validity_threshold = false;  // +1-norm form needs t_n >= 3
};

/// Closed-form expansion of u^n for a unit u > 1: [t_n] for norm -1 and odd
/// n, [t_n - 1; 1, t_n - 2] for norm +1 (reduced to the least period).
UnitClosedForm unit_cf_closed_form(const QuadIrr& u, unsigned long n);

struct QuotientGrowthRow {
  unsigned long n = 0;
  Integer quotient;          // a_i(n)
  double log_quotient_over_n = 0.0;
};

/// Lemma-style statistic log a_i(n) / n for the i-th partial quotient of the
/// expansion of x^n; rational powers are skipped.
std::vector<QuotientGrowthRow> partial_quotient_growth(
    const QuadIrr& x, size_t i, unsigned long max_exponent);

/// CF text format "[a0; a1, a2, (p1, p2, ...)]"; bit-exact round trip.
std::string format_cf(const ContinuedFraction& cf);
ContinuedFraction parse_cf(const std::string& text);

}  // namespace mahlerlab

#endif  // MAHLERLAB_CFRAC_HPP
