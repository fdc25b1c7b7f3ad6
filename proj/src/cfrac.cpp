#include "mahlerlab/cfrac.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mahlerlab {

const Integer& ContinuedFraction::quotient(size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  if (period.empty())
    throw std::logic_error("ContinuedFraction: empty period");
  return period[(i - preperiod.size()) % period.size()];
}

std::string ContinuedFraction::str() const { return format_cf(*this); }

SurdState to_surd_state(const QuadIrr& x) {
  // (a + b sqrt(D))/c with b > 0 becomes (ab' + sqrt(b^2 D))/c-like; flip the
  // representation when b < 0 so the sqrt coefficient is +1.
  Integer p, q, d;
  if (sgn(x.b()) > 0) {
    p = x.a();
    q = x.c();
    d = x.b() * x.b() * x.d();
  } else {
    p = -x.a();
    q = -x.c();
    d = x.b() * x.b() * x.d();
  }
  if ((d - p * p) % q != 0) {
    // scale to reach the Q | D - P^2 normal form
    Integer m = abs(q);
    p *= m;
    d *= m * m;
    q *= m;
  }
  return SurdState{p, q, d};
}

QuadIrr surd_value(const SurdState& s) { return QuadIrr(s.P, 1, s.Q, s.D); }

namespace {

// floor((P + sqrt(D))/Q) for nonsquare D > 0, via s = floor(sqrt(D)).
Integer surd_floor(const SurdState& st, const Integer& s) {
  Integer q;
  if (sgn(st.Q) > 0) {
    Integer t = st.P + s;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), st.Q.get_mpz_t());
  } else {
    Integer t = -st.P - s - 1;
    Integer m = -st.Q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
  }
  return q;
}

void surd_step(SurdState& st, const Integer& a) {
  Integer p_next = a * st.Q - st.P;
  Integer q_next = (st.D - p_next * p_next) / st.Q;
  st.P = p_next;
  st.Q = q_next;
}

bool surd_reduced(const SurdState& st) {
  if (sgn(st.Q) <= 0) return false;
  // x > 1:  P + sqrt(D) > Q
  Integer t = st.Q - st.P;
  if (sgn(t) > 0 && t * t >= st.D) return false;
  // conj < 0:  P < sqrt(D)
  if (sgn(st.P) >= 0 && st.P * st.P >= st.D) return false;
  // conj > -1:  sqrt(D) < Q + P
  Integer u = st.Q + st.P;
  if (sgn(u) <= 0 || u * u <= st.D) return false;
  return true;
}

// Minimal period of the infinite repetition of w, via the border array.
size_t least_period_of(const std::vector<Integer>& w) {
  size_t n = w.size();
  std::vector<size_t> border(n + 1, 0);
  size_t k = 0;
  for (size_t i = 1; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  size_t p = n - border[n];
  return (n % p == 0) ? p : n;
}

}  // namespace

bool is_reduced(const SurdState& s) { return surd_reduced(s); }

bool is_reduced(const QuadIrr& x) { return surd_reduced(to_surd_state(x)); }

ContinuedFraction expand(const QuadIrr& x) {
  SurdState st = to_surd_state(x);
  Integer s = isqrt(st.D);
  ContinuedFraction cf;
  // Preperiod: iterate until the state is reduced. Reduced states form the
  // cycle, so the first reduced state marks the least preperiod.
  size_t guard = 0;
  while (!surd_reduced(st)) {
    Integer a = surd_floor(st, s);
    cf.preperiod.push_back(a);
    surd_step(st, a);
    if (++guard > 100000000)
      throw std::logic_error("expand: preperiod did not terminate");
  }
  SurdState start = st;
  do {
    Integer a = surd_floor(st, s);
    cf.period.push_back(a);
    surd_step(st, a);
  } while (!(st == start));
  return cf;
}

std::vector<std::pair<Integer, Integer>> convergents(
    const ContinuedFraction& cf, size_t k) {
  std::vector<std::pair<Integer, Integer>> out;
  out.reserve(k);
  Integer p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  Integer p_prev2 = 0, q_prev2 = 1;
  for (size_t h = 0; h < k; ++h) {
    const Integer& a = cf.quotient(h);
    Integer p = a * p_prev + p_prev2;
    Integer q = a * q_prev + q_prev2;
    out.emplace_back(p, q);
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
  }
  return out;
}

QuadIrr evaluate(const ContinuedFraction& cf) {
  if (cf.period.empty())
    throw std::invalid_argument("evaluate: empty period");
  // Tail fixed point: y = (p_{r-1} y + p_{r-2})/(q_{r-1} y + q_{r-2}).
  Integer p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
  for (const Integer& a : cf.period) {
    Integer p = a * p_prev + p_prev2;
    Integer q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
  }
  // q_{r-1} y^2 + (q_{r-2} - p_{r-1}) y - p_{r-2} = 0, take the root > 1.
  Integer lin = q_prev2 - p_prev;
  Integer disc = lin * lin + 4 * q_prev * p_prev2;
  // disc = k^2 * D with a small squarefree kernel D (the field of the value),
  // while disc itself is huge for long periods. The smallest divisor whose
  // cofactor is a perfect square is exactly that kernel, so scan upward
  // instead of trial-dividing the full discriminant.
  Integer kernel = 1;
  for (Integer d = 1;; ++d) {
    if (disc % d == 0) {
      Integer quo = disc / d;
      if (mpz_perfect_square_p(quo.get_mpz_t())) {
        kernel = d;
        break;
      }
    }
  }
  Integer k = isqrt(disc / kernel);
  QuadIrr y(-lin, k, 2 * q_prev, kernel);
  // Fold the preperiod back: x = a + 1/y.
  for (auto it = cf.preperiod.rbegin(); it != cf.preperiod.rend(); ++it) {
    y = add(y.inv(), Rational(*it));
  }
  return y;
}

Unimodular::Unimodular(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  Integer det = a * d - b * c;
  if (det != 1 && det != -1)
    throw std::invalid_argument("Unimodular: determinant must be +-1");
}

QuadIrr apply_unimodular(const Unimodular& t, const QuadIrr& x) {
  if (sgn(t.c) == 0 && sgn(t.d) == 0)
    throw std::domain_error("apply_unimodular: zero denominator row");
  if (sgn(t.c) == 0) {
    // (a x + b)/d with a != 0
    QuadIrr num = add(mul(x, Rational(t.a)), Rational(t.b));
    return mul(num, make_rational(1, t.d));
  }
  QuadIrr den = add(mul(x, Rational(t.c)), Rational(t.d));
  if (sgn(t.a) == 0) return mul(den.inv(), Rational(t.b));
  QuadIrr num = add(mul(x, Rational(t.a)), Rational(t.b));
  return as_quadirr(mul(num, den.inv()));
}

std::vector<PowerPeriodRow> period_of_power_table(const QuadIrr& x,
                                                  unsigned long max_exponent) {
  std::vector<PowerPeriodRow> rows;
  rows.reserve(max_exponent);
  for (unsigned long n = 1; n <= max_exponent; ++n) {
    PowerPeriodRow row;
    row.n = n;
    QuadOrRational xn = pow(x, n);
    if (!is_quadirr(xn)) {
      row.rational = true;
    } else {
      ContinuedFraction cf = expand(as_quadirr(xn).abs());
      row.period_length = cf.period.size();
      row.preperiod_length = cf.preperiod.size();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

UnitClosedForm unit_cf_closed_form(const QuadIrr& u, unsigned long n) {
  QuadClassification cls = classify(u);
  if (!cls.is_unit)
    throw std::domain_error("unit_cf_closed_form: input is not a unit");
  if (u.floor() < 1)
    throw std::domain_error("unit_cf_closed_form: requires u > 1");
  Integer t1 = cls.trace.get_num();
  Integer nrm = cls.norm.get_num();  // +-1
  // t_{k+1} = t_1 t_k - norm(u) t_{k-1}, t_0 = 2.
  Integer t_prev = 2, t_cur = t1;
  for (unsigned long k = 1; k < n; ++k) {
    Integer t_next = t1 * t_cur - nrm * t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  UnitClosedForm out;
  out.trace_n = t_cur;
  bool norm_minus_one_odd = (nrm == -1) && (n % 2 == 1);
  if (norm_minus_one_odd) {
    out.cf.period = {t_cur};
    return out;
  }
  // u^n has norm +1 here; the expansion [t_n - 1; 1, t_n - 2] needs t_n >= 3.
  if (t_cur < 3) {
    out.below_validity_threshold = true;
    return out;
  }
  out.cf.preperiod = {t_cur - 1};
  if (t_cur - 2 == 1) {
    out.cf.period = {Integer(1)};  // (1, 1) collapses to the least period
  } else {
    out.cf.period = {Integer(1), t_cur - 2};
  }
  return out;
}

std::vector<QuotientGrowthRow> partial_quotient_growth(
    const QuadIrr& x, size_t i, unsigned long max_exponent) {
  if (i < 1)
    throw std::invalid_argument("partial_quotient_growth: index must be >= 1");
  std::vector<QuotientGrowthRow> rows;
  for (unsigned long n = 1; n <= max_exponent; ++n) {
    QuadOrRational xn = pow(x, n);
    if (!is_quadirr(xn)) continue;
    ContinuedFraction cf = expand(as_quadirr(xn).abs());
    QuotientGrowthRow row;
    row.n = n;
    row.quotient = cf.quotient(i);
    row.log_quotient_over_n =
        log_integer(row.quotient) / static_cast<double>(n);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_cf(const ContinuedFraction& cf) {
  std::ostringstream os;
  os << '[';
  if (!cf.preperiod.empty()) {
    os << cf.preperiod[0];
    os << "; ";
    for (size_t i = 1; i < cf.preperiod.size(); ++i) os << cf.preperiod[i] << ", ";
  }
  os << '(';
  for (size_t i = 0; i < cf.period.size(); ++i) {
    if (i) os << ", ";
    os << cf.period[i];
  }
  os << ")]";
  return os.str();
}

namespace {

struct CfParser {
  const std::string& s;
  size_t pos = 0;
  explicit CfParser(const std::string& t) : s(t) {}
  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  Integer integer() {
    ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw std::invalid_argument("cf parse: integer expected");
    return Integer(s.substr(start, pos - start));
  }
};

}  // namespace

ContinuedFraction parse_cf(const std::string& text) {
  CfParser p(text);
  if (!p.eat('[')) throw std::invalid_argument("cf parse: '[' expected");
  ContinuedFraction cf;
  if (p.peek() != '(') {
    cf.preperiod.push_back(p.integer());
    if (!p.eat(';')) throw std::invalid_argument("cf parse: ';' expected");
    while (p.peek() != '(') {
      cf.preperiod.push_back(p.integer());
      if (!p.eat(',')) throw std::invalid_argument("cf parse: ',' expected");
    }
  }
  if (!p.eat('(')) throw std::invalid_argument("cf parse: '(' expected");
  while (p.peek() != ')') {
    cf.period.push_back(p.integer());
    if (p.peek() == ',') p.eat(',');
  }
  p.eat(')');
  if (!p.eat(']')) throw std::invalid_argument("cf parse: ']' expected");
  p.ws();
  if (p.pos != p.s.size())
    throw std::invalid_argument("cf parse: trailing input");
  if (cf.period.empty()) throw std::invalid_argument("cf parse: empty period");
  return cf;
}

}  // namespace mahlerlab
