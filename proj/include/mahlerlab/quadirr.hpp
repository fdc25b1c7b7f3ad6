// Canonical exact arithmetic for real quadratic irrationals (a + b*sqrt(D))/c.
#ifndef MAHLERLAB_QUADIRR_HPP
#define MAHLERLAB_QUADIRR_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "mahlerlab/exactnum.hpp"

namespace mahlerlab {

class IntPolynomial;

// (a + b*sqrt(D))/c in canonical form: gcd(a,b,c)=1, c>0, b!=0, D>1
// squarefree. Equality of values is equality of representations.
class QuadIrr {
 public:
  /// Canonicalizes arbitrary inputs. Throws std::domain_error if the value is
  /// rational (D_raw a perfect square or b = 0) or if c = 0 / D_raw <= 0.
  QuadIrr(const Integer& a, const Integer& b, const Integer& c,
          const Integer& d_raw);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  bool operator==(const QuadIrr& o) const = default;

  QuadIrr conj() const;
  Rational trace() const;
  Rational norm() const;
  int sign() const;
  Integer floor() const;
  QuadIrr inv() const;
  QuadIrr neg() const;
  QuadIrr abs() const;

  /// Certified enclosure of width <= 2^(1-prec) * max(1, |x|).
  DyadicInterval enclose(long prec) const;

  std::string str() const;

 private:
  struct raw_tag {};
  QuadIrr(raw_tag, Integer a, Integer b, Integer c, Integer d);

  Integer a_, b_, c_, d_;

  friend class QuadValue;
};

// Result type for ring operations: the irrational part may cancel.
using QuadOrRational = std::variant<Rational, QuadIrr>;

QuadOrRational add(const QuadIrr& x, const QuadIrr& y);
QuadOrRational sub(const QuadIrr& x, const QuadIrr& y);
QuadOrRational mul(const QuadIrr& x, const QuadIrr& y);
QuadIrr add(const QuadIrr& x, const Rational& r);
QuadIrr mul(const QuadIrr& x, const Rational& r);  // r != 0
QuadOrRational pow(const QuadIrr& x, unsigned long n);

bool is_quadirr(const QuadOrRational& v);
const QuadIrr& as_quadirr(const QuadOrRational& v);
const Rational& as_rational(const QuadOrRational& v);

struct QuadClassification {
  bool is_algebraic_integer = false;
  bool is_unit = false;
  bool is_sqrt_of_rational = false;
  Rational trace;
  Rational norm;
};

QuadClassification classify(const QuadIrr& x);

/// Primitive minimal polynomial with positive leading coefficient.
IntPolynomial min_poly(const QuadIrr& x);

/// Parses "(a+b*sqrt(D))/c" (also bare forms like "sqrt(2)", "1+sqrt(5)",
/// "(3-2*sqrt(7))/5"). Throws std::invalid_argument on malformed input or
/// rational values.
QuadIrr parse_quadirr(const std::string& text);

std::ostream& operator<<(std::ostream& os, const QuadIrr& x);

}  // namespace mahlerlab

#endif  // MAHLERLAB_QUADIRR_HPP
