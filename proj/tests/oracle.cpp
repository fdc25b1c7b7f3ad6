#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace mahlerlab::oracle {

Integer kth_root_floor(const Integer& n, unsigned long k) {
  if (sgn(n) < 0) throw std::domain_error("negative radicand");
  if (k == 0) throw std::domain_error("zeroth root");
  if (n == 0) return 0;
  Integer lo = 0, hi = 1;
  auto pow_k = [&](const Integer& v) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), k);
    return r;
  };
  while (pow_k(hi) <= n) hi *= 2;
  // invariant: lo^k <= n < hi^k
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (pow_k(mid) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::vector<std::complex<double>> complex_roots(const IntPolynomial& p) {
  size_t d = p.degree();
  std::vector<std::complex<double>> c(d + 1);
  for (size_t i = 0; i <= d; ++i) c[i] = p[i].get_d();
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = c[d];
    for (size_t i = d; i-- > 0;) acc = acc * z + c[i];
    return acc;
  };
  std::vector<std::complex<double>> roots(d);
  // standard non-real starting points spread on a circle
  for (size_t i = 0; i < d; ++i)
    roots[i] = std::polar(1.5, 0.7 + 2.1 * double(i));
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0;
    for (size_t i = 0; i < d; ++i) {
      std::complex<double> denom = c[d];
      for (size_t j = 0; j < d; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      if (std::abs(denom) == 0.0) continue;
      std::complex<double> delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  return roots;
}

int inside_unit_disk(const IntPolynomial& p, double guard) {
  int inside = 0;
  for (const auto& z : complex_roots(p)) {
    double m = std::abs(z);
    if (std::abs(m - 1.0) < guard) return -1;
    if (m < 1.0) ++inside;
  }
  return inside;
}

namespace {

// Quotients of the finite continued fraction of num/den (den > 0), capped.
// Plain integer Euclid, so large precisions stay cheap.
std::vector<Integer> cf_of_rational(Integer num, Integer den,
                                    size_t max_terms) {
  std::vector<Integer> out;
  while (sgn(den) > 0 && out.size() < max_terms) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    out.push_back(q);
    num = den;
    den = r;
  }
  return out;
}

}  // namespace

std::vector<Integer> cf_common_prefix(const Rational& lo, const Rational& hi) {
  return cf_common_prefix(lo, hi, static_cast<size_t>(-1) / 2);
}

std::vector<Integer> cf_common_prefix(const Rational& lo, const Rational& hi,
                                      size_t max_terms) {
  std::vector<Integer> a =
      cf_of_rational(lo.get_num(), lo.get_den(), max_terms + 1);
  std::vector<Integer> b =
      cf_of_rational(hi.get_num(), hi.get_den(), max_terms + 1);
  // The final quotient of a terminating expansion is convention-dependent,
  // so it never certifies; stop one short of either list's end.
  size_t limit = std::min(a.size(), b.size());
  if (limit > 0) --limit;
  limit = std::min(limit, max_terms);
  std::vector<Integer> out;
  for (size_t i = 0; i < limit; ++i) {
    if (a[i] != b[i]) break;
    out.push_back(a[i]);
  }
  return out;
}

std::vector<Integer> cf_prefix(const QuadIrr& x, size_t count) {
  for (long prec = static_cast<long>(4 * count) + 64;; prec *= 2) {
    if (prec > (1L << 24))
      throw std::runtime_error("cf oracle: precision blow-up");
    DyadicInterval e = x.enclose(prec);
    std::vector<Integer> q =
        cf_common_prefix(e.lo_rational(), e.hi_rational(), count);
    if (q.size() >= count) return q;
  }
}

Integer lucas(unsigned long n) {
  Integer a = 2, b = 1;  // L_0, L_1
  if (n == 0) return a;
  for (unsigned long i = 1; i < n; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return b;
}

Integer fibonacci(unsigned long n) {
  Integer f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace mahlerlab::oracle
