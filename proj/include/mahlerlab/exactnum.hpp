// Exact unbounded integer/rational arithmetic and certified dyadic interval
// arithmetic with outward rounding. Numeric substrate for every other module.
#ifndef MAHLERLAB_EXACTNUM_HPP
#define MAHLERLAB_EXACTNUM_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace mahlerlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Floor of the integer square root. Throws std::domain_error for n < 0.
Integer isqrt(const Integer& n);

/// Floor of the k-th root, k >= 1. Result r satisfies r^k <= n < (r+1)^k.
Integer nth_root_floor(const Integer& n, unsigned long k);

/// Reduced rational helper: makes a canonical p/q with q > 0.
Rational make_rational(const Integer& num, const Integer& den);

/// floor/ceil of an exact rational.
Integer rational_floor(const Rational& x);
Integer rational_ceil(const Rational& x);

// A dyadic rational man * 2^exp. Not kept in any normal form; exp may be
// negative. Arithmetic on raw Dyadic values is exact.
struct Dyadic {
  Integer man;
  long exp = 0;

  Dyadic() : man(0) {}
  Dyadic(Integer m, long e) : man(std::move(m)), exp(e) {}
  explicit Dyadic(const Integer& i) : man(i) {}

  Rational to_rational() const;
  int sign() const { return sgn(man); }
};

int compare(const Dyadic& a, const Dyadic& b);
Dyadic add(const Dyadic& a, const Dyadic& b);
Dyadic sub(const Dyadic& a, const Dyadic& b);
Dyadic mul(const Dyadic& a, const Dyadic& b);
Dyadic neg(const Dyadic& a);

/// Directed rounding of an exact rational to a dyadic with about `prec`
/// significant bits. up=false rounds toward -inf, up=true toward +inf.
Dyadic dyadic_round(const Rational& x, long prec, bool up);

/// Truncate an existing dyadic to about `prec` significant bits, directed.
Dyadic dyadic_trim(const Dyadic& d, long prec, bool up);

// Certified enclosure [lo, hi] of a real number, lo <= hi. Every operation
// rounds outward, so the exact image of any point of the input is contained
// in the output.
class DyadicInterval {
 public:
  DyadicInterval() = default;
  DyadicInterval(Dyadic lo, Dyadic hi);
  explicit DyadicInterval(const Integer& point)
      : lo_(point), hi_(lo_) {}

  static DyadicInterval from_rational(const Rational& x, long prec);
  static DyadicInterval from_endpoints(const Rational& lo, const Rational& hi,
                                       long prec);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }

  Rational lo_rational() const { return lo_.to_rational(); }
  Rational hi_rational() const { return hi_.to_rational(); }
  Rational width() const;

  bool contains(const Rational& x) const;
  bool contains(const DyadicInterval& other) const;  // other subset of *this
  bool strictly_positive() const { return lo_.sign() > 0; }

  /// Unique floor if both endpoints share it; returns false otherwise.
  bool common_floor(Integer& out) const;

 private:
  Dyadic lo_;
  Dyadic hi_;
};

DyadicInterval iv_add(const DyadicInterval& a, const DyadicInterval& b,
                      long prec);
DyadicInterval iv_sub(const DyadicInterval& a, const DyadicInterval& b,
                      long prec);
DyadicInterval iv_mul(const DyadicInterval& a, const DyadicInterval& b,
                      long prec);
DyadicInterval iv_neg(const DyadicInterval& a);
DyadicInterval iv_abs(const DyadicInterval& a);
DyadicInterval iv_scale(const DyadicInterval& a, const Rational& c, long prec);
DyadicInterval iv_intersect(const DyadicInterval& a, const DyadicInterval& b);

/// Enclosure of {v^k : v in x}; requires x.lo >= 0.
DyadicInterval iv_pow(const DyadicInterval& x, unsigned long k, long prec);

/// Enclosure of {v^(1/k) : v in x}; requires x.lo >= 0, k >= 1.
DyadicInterval iv_root(const DyadicInterval& x, unsigned long k, long prec);

/// Decimal rendering of a dyadic with the given number of fractional digits,
/// rounding directed so printing an interval's endpoints stays an enclosure.
std::string dyadic_to_decimal(const Dyadic& d, int digits, bool up);

/// log base e of a positive integer, accurate to double precision even for
/// huge operands.
double log_integer(const Integer& n);

}  // namespace mahlerlab

#endif  // MAHLERLAB_EXACTNUM_HPP
