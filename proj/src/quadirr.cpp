#include "mahlerlab/quadirr.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "mahlerlab/algnum.hpp"

namespace mahlerlab {

namespace {

// Extracts the largest square factor: d_raw = square * d with d squarefree.
// Trial division; inputs here are desk-scale.
void extract_square_part(Integer& d, Integer& square_root_part) {
  square_root_part = 1;
  Integer f = 2;
  while (f * f <= d) {
    Integer ff = f * f;
    while (d % ff == 0) {
      d /= ff;
      square_root_part *= f;
    }
    f += 1;
  }
}

}  // namespace

QuadIrr::QuadIrr(raw_tag, Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

QuadIrr::QuadIrr(const Integer& a, const Integer& b, const Integer& c,
                 const Integer& d_raw) {
  if (sgn(c) == 0) throw std::domain_error("QuadIrr: zero denominator");
  if (sgn(d_raw) <= 0) throw std::domain_error("QuadIrr: D must be positive");
  if (sgn(b) == 0) throw std::domain_error("QuadIrr: rational input (b = 0)");
  Integer d = d_raw, sq;
  extract_square_part(d, sq);
  if (d == 1)
    throw std::domain_error("QuadIrr: rational input (D a perfect square)");
  a_ = a;
  b_ = b * sq;
  c_ = c;
  d_ = d;
  if (sgn(c_) < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Integer g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

QuadIrr QuadIrr::conj() const { return QuadIrr(raw_tag{}, a_, -b_, c_, d_); }

Rational QuadIrr::trace() const { return make_rational(2 * a_, c_); }

Rational QuadIrr::norm() const {
  return make_rational(a_ * a_ - b_ * b_ * d_, c_ * c_);
}

int QuadIrr::sign() const {
  // sign of a + b*sqrt(D); c > 0.
  int sa = sgn(a_), sb = sgn(b_);
  if (sa >= 0 && sb > 0) return 1;
  if (sa <= 0 && sb < 0) return -1;
  // Opposite signs: compare a^2 against b^2 D.
  int big = cmp(a_ * a_, b_ * b_ * d_);
  if (sb > 0) return big < 0 ? 1 : -1;
  return big > 0 ? 1 : -1;
}

Integer QuadIrr::floor() const {
  DyadicInterval e = enclose(64);
  Integer m = rational_floor(e.lo_rational());
  // Fix up with exact sign tests; the enclosure leaves at most a step or two.
  auto x_minus = [this](const Integer& k) {
    return QuadIrr(raw_tag{}, a_ - k * c_, b_, c_, d_);
  };
  while (x_minus(m + 1).sign() >= 0) m += 1;
  while (x_minus(m).sign() < 0) m -= 1;
  return m;
}

QuadIrr QuadIrr::inv() const {
  // c/(a + b sqrt D) = c(a - b sqrt D)/(a^2 - b^2 D)
  return QuadIrr(c_ * a_, -c_ * b_, a_ * a_ - b_ * b_ * d_, d_);
}

QuadIrr QuadIrr::neg() const { return QuadIrr(raw_tag{}, -a_, -b_, c_, d_); }

QuadIrr QuadIrr::abs() const { return sign() < 0 ? neg() : *this; }

DyadicInterval QuadIrr::enclose(long prec) const {
  long t = prec + 8;
  Integer shifted = d_;
  shifted <<= static_cast<unsigned long>(2 * t);
  Integer r = isqrt(shifted);
  // sqrt(D) in [r, r+1] * 2^-t
  Rational sq_lo = make_rational(r, Integer(1) << static_cast<unsigned long>(t));
  Rational sq_hi =
      make_rational(r + 1, Integer(1) << static_cast<unsigned long>(t));
  Rational av(a_), cv(c_), bv(b_);
  Rational lo, hi;
  if (sgn(b_) > 0) {
    lo = (av + bv * sq_lo) / cv;
    hi = (av + bv * sq_hi) / cv;
  } else {
    lo = (av + bv * sq_hi) / cv;
    hi = (av + bv * sq_lo) / cv;
  }
  return DyadicInterval::from_endpoints(lo, hi, prec);
}

std::string QuadIrr::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

namespace {

void require_same_field(const QuadIrr& x, const QuadIrr& y) {
  if (x.d() != y.d())
    throw std::domain_error("QuadIrr: mixed fields (different D)");
}

QuadOrRational make_value(const Integer& a, const Integer& b, const Integer& c,
                          const Integer& d) {
  if (sgn(b) == 0) return make_rational(a, c);
  return QuadIrr(a, b, c, d);
}

}  // namespace

QuadOrRational add(const QuadIrr& x, const QuadIrr& y) {
  require_same_field(x, y);
  return make_value(x.a() * y.c() + y.a() * x.c(),
                    x.b() * y.c() + y.b() * x.c(), x.c() * y.c(), x.d());
}

QuadOrRational sub(const QuadIrr& x, const QuadIrr& y) {
  require_same_field(x, y);
  return make_value(x.a() * y.c() - y.a() * x.c(),
                    x.b() * y.c() - y.b() * x.c(), x.c() * y.c(), x.d());
}

QuadOrRational mul(const QuadIrr& x, const QuadIrr& y) {
  require_same_field(x, y);
  return make_value(x.a() * y.a() + x.b() * y.b() * x.d(),
                    x.a() * y.b() + x.b() * y.a(), x.c() * y.c(), x.d());
}

QuadIrr add(const QuadIrr& x, const Rational& r) {
  return QuadIrr(x.a() * r.get_den() + r.get_num() * x.c(),
                 x.b() * r.get_den(), x.c() * r.get_den(), x.d());
}

QuadIrr mul(const QuadIrr& x, const Rational& r) {
  if (sgn(r) == 0) throw std::domain_error("mul: rational factor is zero");
  return QuadIrr(x.a() * r.get_num(), x.b() * r.get_num(),
                 x.c() * r.get_den(), x.d());
}

QuadOrRational pow(const QuadIrr& x, unsigned long n) {
  if (n == 0) return Rational(1);
  // binary exponentiation on raw (a, b, c) triples over the same D
  Integer ra = 1, rb = 0, rc = 1;
  Integer xa = x.a(), xb = x.b(), xc = x.c();
  const Integer& d = x.d();
  auto reduce = [](Integer& a, Integer& b, Integer& c) {
    Integer g = gcd(gcd(a, b), c);
    if (g > 1) {
      a /= g;
      b /= g;
      c /= g;
    }
  };
  bool started = false;
  for (int bit = static_cast<int>(mpz_sizeinbase(
           Integer(static_cast<unsigned long>(n)).get_mpz_t(), 2)) -
               1;
       bit >= 0; --bit) {
    if (started) {
      Integer na = ra * ra + rb * rb * d;
      Integer nb = 2 * ra * rb;
      rc = rc * rc;
      ra = na;
      rb = nb;
      reduce(ra, rb, rc);
    }
    if ((n >> bit) & 1UL) {
      Integer na = ra * xa + rb * xb * d;
      Integer nb = ra * xb + rb * xa;
      rc = rc * xc;
      ra = na;
      rb = nb;
      reduce(ra, rb, rc);
      started = true;
    }
  }
  return make_value(ra, rb, rc, d);
}

bool is_quadirr(const QuadOrRational& v) {
  return std::holds_alternative<QuadIrr>(v);
}

const QuadIrr& as_quadirr(const QuadOrRational& v) {
  return std::get<QuadIrr>(v);
}

const Rational& as_rational(const QuadOrRational& v) {
  return std::get<Rational>(v);
}

QuadClassification classify(const QuadIrr& x) {
  QuadClassification out;
  out.trace = x.trace();
  out.norm = x.norm();
  out.is_algebraic_integer =
      out.trace.get_den() == 1 && out.norm.get_den() == 1;
  out.is_unit = out.is_algebraic_integer && abs(out.norm.get_num()) == 1;
  out.is_sqrt_of_rational = sgn(x.a()) == 0;
  return out;
}

IntPolynomial min_poly(const QuadIrr& x) {
  // c^2 X^2 - 2ac X + (a^2 - b^2 D), made primitive with positive lead.
  std::vector<Integer> coeffs = {x.a() * x.a() - x.b() * x.b() * x.d(),
                                 -2 * x.a() * x.c(), x.c() * x.c()};
  return IntPolynomial(coeffs);
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  Integer integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw std::invalid_argument("surd parse: digit expected");
    return Integer(s.substr(start, pos - start));
  }
  bool eat_word(const char* w) {
    skip_ws();
    size_t n = std::string(w).size();
    if (s.compare(pos, n, w) == 0) {
      pos += n;
      return true;
    }
    return false;
  }
};

}  // namespace

QuadIrr parse_quadirr(const std::string& text) {
  Parser p(text);
  bool parenthesized = p.eat('(');
  Integer a = 0, b = 0, d = 0, c = 1;
  bool saw_sqrt = false;

  // one or two terms: [sign] (k | [k*]sqrt(D))
  for (int term = 0; term < 2; ++term) {
    p.skip_ws();
    int sign = 1;
    if (p.eat('-')) sign = -1;
    else if (p.eat('+')) sign = 1;
    else if (term == 1) break;

    Integer k = 1;
    bool have_k = false;
    if (p.peek_digit()) {
      k = p.integer();
      have_k = true;
    }
    if (p.eat('*') || (!have_k && true)) {
      if (p.eat_word("sqrt")) {
        if (!p.eat('(')) throw std::invalid_argument("surd parse: '(' after sqrt");
        Integer dd = p.integer();
        if (!p.eat(')')) throw std::invalid_argument("surd parse: ')' missing");
        if (saw_sqrt) throw std::invalid_argument("surd parse: two sqrt terms");
        saw_sqrt = true;
        b = sign * k;
        d = dd;
        continue;
      }
      if (!have_k) throw std::invalid_argument("surd parse: term expected");
    }
    a += sign * k;
  }
  if (parenthesized && !p.eat(')'))
    throw std::invalid_argument("surd parse: ')' missing");
  if (p.eat('/')) c = p.integer();
  p.skip_ws();
  if (p.pos != p.s.size())
    throw std::invalid_argument("surd parse: trailing input");
  if (!saw_sqrt) throw std::invalid_argument("surd parse: no sqrt term");
  try {
    return QuadIrr(a, b, c, d);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("surd parse: ") + e.what());
  }
}

std::ostream& operator<<(std::ostream& os, const QuadIrr& x) {
  os << '(' << x.a();
  if (sgn(x.b()) >= 0) os << '+';
  os << x.b() << "*sqrt(" << x.d() << "))/" << x.c();
  return os;
}

}  // namespace mahlerlab
