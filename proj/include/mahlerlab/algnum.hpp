// General-degree algebraic numbers from integer polynomials: Sturm root
// isolation, exact Schur-Cohn unit-disk counting, Pisot/pseudo-Pisot
// classification, certified Weil height and fractional parts of powers.
#ifndef MAHLERLAB_ALGNUM_HPP
#define MAHLERLAB_ALGNUM_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mahlerlab/exactnum.hpp"

namespace mahlerlab {

// Primitive integer polynomial, ascending coefficients, positive leading
// coefficient, degree >= 0.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{Integer(0)} {}
  explicit IntPolynomial(std::vector<Integer> coeffs);

  size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& operator[](size_t i) const { return coeffs_[i]; }
  bool is_zero() const { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }
  bool monic() const { return leading() == 1; }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;
  IntPolynomial derivative() const;
  IntPolynomial reversal() const;  // X^d * p(1/X)

  bool operator==(const IntPolynomial& o) const = default;

  std::string str() const;

 private:
  std::vector<Integer> coeffs_;
};

/// Comma-separated ascending coefficients, e.g. "-1,-1,1" for X^2 - X - 1.
IntPolynomial parse_polynomial(const std::string& text);
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// Rational-coefficient polynomials used internally (Sturm chains, residues).
using RatPoly = std::vector<Rational>;

IntPolynomial squarefree_part(const IntPolynomial& p);
IntPolynomial gcd_poly(const IntPolynomial& a, const IntPolynomial& b);

/// Disjoint open rational intervals, each isolating exactly one real root of
/// a squarefree p, jointly covering all real roots.
std::vector<std::pair<Rational, Rational>> sturm_isolate(
    const IntPolynomial& p);

/// Number of real roots of squarefree p in (lo, hi].
int sturm_count(const IntPolynomial& p, const Rational& lo,
                const Rational& hi);

// A real algebraic number: squarefree polynomial plus an isolating interval
// containing exactly one of its real roots.
class AlgebraicReal {
 public:
  AlgebraicReal(IntPolynomial poly, Rational lo, Rational hi);

  /// Selects the k-th real root (0-based, ascending) of squarefree p.
  static AlgebraicReal kth_real_root(const IntPolynomial& p, size_t k);
  /// Selects the unique real root inside (lo, hi).
  static AlgebraicReal root_in(const IntPolynomial& p, const Rational& lo,
                               const Rational& hi);

  const IntPolynomial& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool is_rational() const { return poly_.degree() == 1; }
  Rational rational_value() const;  // degree-1 only

  /// Certified enclosure of width <= 2^(1-prec) * max(1, |root|).
  DyadicInterval refine(long prec) const;

  /// Exact comparison of the root against a rational.
  int compare(const Rational& x) const;

 private:
  IntPolynomial poly_;
  Rational lo_, hi_;
};

/// Exact count of complex roots with |z| < 1. Throws std::domain_error when a
/// root on the unit circle is detected; strip it with unit_circle_factor
/// first.
int schur_cohn_inside(const IntPolynomial& p);

/// gcd of p and its reversal: contains every root z such that 1/z is also a
/// root (a superset of the unit-circle roots).
IntPolynomial unit_circle_factor(const IntPolynomial& p);

/// Exact test: does squarefree p have a root on the unit circle?
bool has_unit_circle_root(const IntPolynomial& p);

enum class PisotKind { Pisot, PseudoPisotNonInteger, Neither };

struct PisotClassification {
  PisotKind kind = PisotKind::Neither;
  Rational trace;
  int conjugates_inside = 0;   // roots other than the selected one, |z| < 1
  int conjugates_on_circle = 0;
  bool monic = false;
};

/// Classification of the selected root of x (assumed minimal polynomial).
/// Requires a certified |root| > 1.
PisotClassification classify_pisot(const AlgebraicReal& x);

const char* pisot_kind_name(PisotKind k);

/// Certified enclosure of the absolute Weil height
/// H = (|lead| * prod max(1, |root_i|))^(1/d).
DyadicInterval weil_height(const AlgebraicReal& x, long prec);

/// Certified enclosure of the Mahler measure |lead| * prod max(1, |root_i|).
DyadicInterval mahler_measure(const IntPolynomial& p, long prec);

/// Coefficients of X^n mod p (ascending, degree < deg p).
RatPoly power_residue(const AlgebraicReal& x, unsigned long n);

struct FracPowerResult {
  Integer nearest;
  DyadicInterval dist;   // enclosure of |alpha^n - nearest|
  bool ambiguous_at_cap = false;
  long precision_used = 0;
};

/// Certified nearest integer and distance for alpha^n; precision escalates
/// from `start_prec`, doubling up to `cap`.
FracPowerResult frac_power(const AlgebraicReal& x, unsigned long n,
                           long start_prec = 64, long cap = 1 << 20);

/// Like frac_power but for scale * alpha^n with a rational scale.
FracPowerResult frac_power_scaled(const AlgebraicReal& x, unsigned long n,
                                  const Rational& scale, long start_prec = 64,
                                  long cap = 1 << 20);

/// Power sums s_1..s_N of all roots of p, by Newton's identities.
std::vector<Rational> trace_powers(const IntPolynomial& p, size_t count);

/// Characteristic polynomial of multiplication by alpha^n on Q(alpha):
/// prod_i (X - rho_i^n) up to normalization, made integral and primitive.
IntPolynomial power_char_poly(const AlgebraicReal& x, unsigned long n);
IntPolynomial power_char_poly_scaled(const AlgebraicReal& x, unsigned long n,
                                     const Rational& scale);

}  // namespace mahlerlab

#endif  // MAHLERLAB_ALGNUM_HPP
