#include "mahlerlab/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mahlerlab {

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt: negative input");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer nth_root_floor(const Integer& n, unsigned long k) {
  if (k == 0) throw std::domain_error("nth_root_floor: k must be positive");
  if (sgn(n) < 0) throw std::domain_error("nth_root_floor: negative input");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer rational_floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer rational_ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational Dyadic::to_rational() const {
  Rational r(man);
  if (exp >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(exp));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(),
                 static_cast<unsigned long>(-exp));
  }
  return r;
}

namespace {

// Rewrites a pair to a common exponent (the smaller one).
void align(const Dyadic& a, const Dyadic& b, Integer& ma, Integer& mb,
           long& e) {
  e = std::min(a.exp, b.exp);
  ma = a.man << static_cast<unsigned long>(a.exp - e);
  mb = b.man << static_cast<unsigned long>(b.exp - e);
}

}  // namespace

int compare(const Dyadic& a, const Dyadic& b) {
  Integer ma, mb;
  long e;
  align(a, b, ma, mb, e);
  return cmp(ma, mb);
}

Dyadic add(const Dyadic& a, const Dyadic& b) {
  Integer ma, mb;
  long e;
  align(a, b, ma, mb, e);
  return Dyadic(ma + mb, e);
}

Dyadic sub(const Dyadic& a, const Dyadic& b) {
  Integer ma, mb;
  long e;
  align(a, b, ma, mb, e);
  return Dyadic(ma - mb, e);
}

Dyadic mul(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.man * b.man, a.exp + b.exp);
}

Dyadic neg(const Dyadic& a) { return Dyadic(-a.man, a.exp); }

Dyadic dyadic_round(const Rational& x, long prec, bool up) {
  if (prec < 2) prec = 2;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (sgn(num) == 0) return Dyadic();
  long mag = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  long s = prec - mag + 1;
  Integer scaled_num = num;
  Integer scaled_den = den;
  if (s >= 0) {
    scaled_num <<= static_cast<unsigned long>(s);
  } else {
    scaled_den <<= static_cast<unsigned long>(-s);
  }
  Integer q;
  if (up) {
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  }
  return Dyadic(q, -s);
}

Dyadic dyadic_trim(const Dyadic& d, long prec, bool up) {
  if (prec < 2) prec = 2;
  size_t bits = mpz_sizeinbase(d.man.get_mpz_t(), 2);
  if (sgn(d.man) == 0 || static_cast<long>(bits) <= prec) return d;
  unsigned long drop = bits - static_cast<size_t>(prec);
  Integer q;
  if (up) {
    mpz_cdiv_q_2exp(q.get_mpz_t(), d.man.get_mpz_t(), drop);
  } else {
    mpz_fdiv_q_2exp(q.get_mpz_t(), d.man.get_mpz_t(), drop);
  }
  return Dyadic(q, d.exp + static_cast<long>(drop));
}

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (compare(lo_, hi_) > 0)
    throw std::invalid_argument("DyadicInterval: lo > hi");
}

DyadicInterval DyadicInterval::from_rational(const Rational& x, long prec) {
  return DyadicInterval(dyadic_round(x, prec, false),
                        dyadic_round(x, prec, true));
}

DyadicInterval DyadicInterval::from_endpoints(const Rational& lo,
                                              const Rational& hi, long prec) {
  if (lo > hi) throw std::invalid_argument("from_endpoints: lo > hi");
  return DyadicInterval(dyadic_round(lo, prec, false),
                        dyadic_round(hi, prec, true));
}

Rational DyadicInterval::width() const {
  return hi_.to_rational() - lo_.to_rational();
}

bool DyadicInterval::contains(const Rational& x) const {
  return lo_.to_rational() <= x && x <= hi_.to_rational();
}

bool DyadicInterval::contains(const DyadicInterval& other) const {
  return compare(lo_, other.lo_) <= 0 && compare(other.hi_, hi_) <= 0;
}

bool DyadicInterval::common_floor(Integer& out) const {
  Integer flo = rational_floor(lo_.to_rational());
  Integer fhi = rational_floor(hi_.to_rational());
  if (flo != fhi) return false;
  out = flo;
  return true;
}

DyadicInterval iv_add(const DyadicInterval& a, const DyadicInterval& b,
                      long prec) {
  return DyadicInterval(dyadic_trim(add(a.lo(), b.lo()), prec, false),
                        dyadic_trim(add(a.hi(), b.hi()), prec, true));
}

DyadicInterval iv_sub(const DyadicInterval& a, const DyadicInterval& b,
                      long prec) {
  return DyadicInterval(dyadic_trim(sub(a.lo(), b.hi()), prec, false),
                        dyadic_trim(sub(a.hi(), b.lo()), prec, true));
}

DyadicInterval iv_mul(const DyadicInterval& a, const DyadicInterval& b,
                      long prec) {
  Dyadic c[4] = {mul(a.lo(), b.lo()), mul(a.lo(), b.hi()),
                 mul(a.hi(), b.lo()), mul(a.hi(), b.hi())};
  int lo = 0, hi = 0;
  for (int i = 1; i < 4; ++i) {
    if (compare(c[i], c[lo]) < 0) lo = i;
    if (compare(c[i], c[hi]) > 0) hi = i;
  }
  return DyadicInterval(dyadic_trim(c[lo], prec, false),
                        dyadic_trim(c[hi], prec, true));
}

DyadicInterval iv_neg(const DyadicInterval& a) {
  return DyadicInterval(neg(a.hi()), neg(a.lo()));
}

DyadicInterval iv_abs(const DyadicInterval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return iv_neg(a);
  Dyadic m = neg(a.lo());
  if (compare(m, a.hi()) < 0) m = a.hi();
  return DyadicInterval(Dyadic(), m);
}

DyadicInterval iv_scale(const DyadicInterval& a, const Rational& c,
                        long prec) {
  Rational lo = a.lo_rational() * c;
  Rational hi = a.hi_rational() * c;
  if (lo > hi) std::swap(lo, hi);
  return DyadicInterval::from_endpoints(lo, hi, prec);
}

DyadicInterval iv_intersect(const DyadicInterval& a, const DyadicInterval& b) {
  Dyadic lo = compare(a.lo(), b.lo()) >= 0 ? a.lo() : b.lo();
  Dyadic hi = compare(a.hi(), b.hi()) <= 0 ? a.hi() : b.hi();
  if (compare(lo, hi) > 0)
    throw std::domain_error("iv_intersect: empty intersection");
  return DyadicInterval(std::move(lo), std::move(hi));
}

namespace {

// Directed k-th power of a nonnegative dyadic.
Dyadic pow_directed(const Dyadic& d, unsigned long k, long prec, bool up) {
  Dyadic trimmed = dyadic_trim(d, prec + 8, up);
  Integer m;
  mpz_pow_ui(m.get_mpz_t(), trimmed.man.get_mpz_t(), k);
  long e = trimmed.exp * static_cast<long>(k);
  return dyadic_trim(Dyadic(m, e), prec, up);
}

// Directed k-th root of a nonnegative dyadic, about prec significant bits.
Dyadic root_directed(const Dyadic& d, unsigned long k, long prec, bool up) {
  if (d.sign() == 0) return Dyadic();
  // Scale so the integer root carries ~prec bits: need bits(man * 2^{e+ks})
  // about k*prec.
  long bits = static_cast<long>(mpz_sizeinbase(d.man.get_mpz_t(), 2));
  long kk = static_cast<long>(k);
  long s = (kk * prec - bits - d.exp + kk - 1) / kk + 1;
  long shift = d.exp + kk * s;
  Integer scaled = d.man;
  Dyadic result;
  if (shift >= 0) {
    scaled <<= static_cast<unsigned long>(shift);
    Integer r = nth_root_floor(scaled, k);
    if (up) {
      Integer check;
      mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), k);
      if (check != scaled) r += 1;
    }
    result = Dyadic(r, -s);
  } else {
    // Shift down before rooting; floor division keeps the lower bound valid,
    // for the upper bound add one first.
    Integer adj = scaled;
    if (up) adj += (Integer(1) << static_cast<unsigned long>(-shift)) - 1;
    adj >>= static_cast<unsigned long>(-shift);
    Integer r = nth_root_floor(adj, k);
    if (up) {
      Integer check;
      mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), k);
      if (check < adj) r += 1;
    }
    result = Dyadic(r, -s);
  }
  return dyadic_trim(result, prec, up);
}

}  // namespace

DyadicInterval iv_pow(const DyadicInterval& x, unsigned long k, long prec) {
  if (k == 0) throw std::domain_error("iv_pow: k must be positive");
  if (x.lo().sign() < 0)
    throw std::domain_error("iv_pow: negative lower endpoint");
  if (k == 1) return x;
  return DyadicInterval(pow_directed(x.lo(), k, prec, false),
                        pow_directed(x.hi(), k, prec, true));
}

DyadicInterval iv_root(const DyadicInterval& x, unsigned long k, long prec) {
  if (k == 0) throw std::domain_error("iv_root: k must be positive");
  if (x.lo().sign() < 0)
    throw std::domain_error("iv_root: negative lower endpoint");
  if (k == 1) return x;
  return DyadicInterval(root_directed(x.lo(), k, prec, false),
                        root_directed(x.hi(), k, prec, true));
}

std::string dyadic_to_decimal(const Dyadic& d, int digits, bool up) {
  Rational x = d.to_rational();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = x * Rational(scale);
  Integer units = up ? rational_ceil(scaled) : rational_floor(scaled);
  bool negative = sgn(units) < 0;
  Integer mag = abs(units);
  std::string s = mag.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  std::string out;
  if (negative) out += '-';
  out += s.substr(0, s.size() - static_cast<size_t>(digits));
  if (digits > 0) {
    out += '.';
    out += s.substr(s.size() - static_cast<size_t>(digits));
  }
  return out;
}

double log_integer(const Integer& n) {
  if (sgn(n) <= 0) throw std::domain_error("log_integer: nonpositive input");
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace mahlerlab
