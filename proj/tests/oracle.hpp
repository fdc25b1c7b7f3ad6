// Independent cross-check helpers for the test suite. Everything here is
// deliberately implemented with different algorithms than the library:
// binary-search roots, double-precision Durand-Kerner, and a rational
// bracket-Euclid continued-fraction expander.
#ifndef MAHLERLAB_TESTS_ORACLE_HPP
#define MAHLERLAB_TESTS_ORACLE_HPP

#include <complex>
#include <vector>

#include "mahlerlab/algnum.hpp"
#include "mahlerlab/quadirr.hpp"

namespace mahlerlab::oracle {

/// Binary-search floor of the k-th root.
Integer kth_root_floor(const Integer& n, unsigned long k);

/// All complex roots of p by Durand-Kerner iteration (double precision,
/// adequate for the modest degrees and coefficient sizes in the tests).
std::vector<std::complex<double>> complex_roots(const IntPolynomial& p);

/// Number of complex_roots with |z| < 1 - margin_guard; returns -1 when some
/// root is too close to the unit circle to trust the double count.
int inside_unit_disk(const IntPolynomial& p, double guard = 1e-6);

/// Partial quotients of the simple continued fraction of x, certified by
/// running the Euclidean recursion on rational lower and upper approximations
/// of x and keeping the common prefix. Grows precision until `count`
/// quotients agree.
std::vector<Integer> cf_prefix(const QuadIrr& x, size_t count);

/// Same, for an explicit rational bracket lo < x < hi (single pass, no
/// refinement); used internally and by tests that bring their own brackets.
std::vector<Integer> cf_common_prefix(const Rational& lo, const Rational& hi);
std::vector<Integer> cf_common_prefix(const Rational& lo, const Rational& hi,
                                      size_t max_terms);

/// Lucas sequence L_0=2, L_1=1, L_{n+1}=L_n+L_{n-1} (traces of powers of the
/// golden ratio).
Integer lucas(unsigned long n);

/// Fibonacci numbers, F_0=0, F_1=1.
Integer fibonacci(unsigned long n);

}  // namespace mahlerlab::oracle

#endif  // MAHLERLAB_TESTS_ORACLE_HPP
