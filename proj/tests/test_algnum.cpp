#include <cmath>
#include <random>

#include "doctest.h"
#include "mahlerlab/algnum.hpp"
#include "mahlerlab/quadirr.hpp"
#include "oracle.hpp"

using namespace mahlerlab;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, size_t max_degree) {
  while (true) {
    size_t d = 1 + rng() % max_degree;
    std::vector<Integer> c(d + 1);
    for (size_t i = 0; i <= d; ++i) c[i] = Integer(rng() % 21) - 10;
    if (sgn(c[d]) == 0) continue;
    IntPolynomial p(std::move(c));
    if (p.degree() >= 1) return p;
  }
}

double root_approx(const AlgebraicReal& x) {
  DyadicInterval e = x.refine(64);
  return e.lo_rational().get_d();
}

}  // namespace

TEST_CASE("polynomial parsing, printing, normalization") {
  IntPolynomial p = parse_polynomial("-1,-1,1");
  CHECK(p.degree() == 2);
  CHECK(p[0] == -1);
  CHECK(p[2] == 1);
  CHECK(p.str() == "-1,-1,1");
  CHECK(parse_polynomial(p.str()) == p);

  // content and sign are normalized away
  CHECK(parse_polynomial("-2,-2,2") == p);
  CHECK(parse_polynomial("1,1,-1") == p);
  CHECK_THROWS_AS(parse_polynomial(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("1,x"), std::invalid_argument);
}

TEST_CASE("polynomial evaluation and derivative") {
  IntPolynomial p = parse_polynomial("-1,-1,1");  // x^2 - x - 1
  CHECK(p.eval(Rational(2)) == 1);
  CHECK(p.sign_at(Rational(1)) < 0);
  CHECK(p.sign_at(Rational(2)) > 0);
  CHECK(p.derivative() == parse_polynomial("-1,2"));
  CHECK(p.reversal() == parse_polynomial("1,-1,-1").reversal().reversal());
}

TEST_CASE("squarefree part and gcd") {
  // (x^2 - 1)^2 -> x^2 - 1
  IntPolynomial sq = parse_polynomial("1,0,-2,0,1");
  CHECK(squarefree_part(sq) == parse_polynomial("-1,0,1"));
  IntPolynomial a = parse_polynomial("-1,0,1");   // (x-1)(x+1)
  IntPolynomial b = parse_polynomial("-1,1");     // x - 1
  CHECK(gcd_poly(a, b) == parse_polynomial("-1,1"));
}

TEST_CASE("sturm isolation matches the numeric root count") {
  std::mt19937_64 rng(41);
  int tested = 0;
  for (int t = 0; t < 300 && tested < 150; ++t) {
    IntPolynomial p = squarefree_part(random_poly(rng, 5));
    if (p.degree() < 1) continue;
    auto roots = oracle::complex_roots(p);
    int numeric_real = 0;
    bool trustworthy = true;
    for (const auto& z : roots) {
      if (std::abs(z.imag()) < 1e-7 && std::abs(z.imag()) > 1e-12)
        trustworthy = false;
      if (std::abs(z.imag()) < 1e-12) ++numeric_real;
    }
    if (!trustworthy) continue;
    auto isolated = sturm_isolate(p);
    CHECK(int(isolated.size()) == numeric_real);
    for (const auto& [lo, hi] : isolated) {
      CHECK(lo < hi);
      CHECK(sturm_count(p, lo, hi) == 1);
    }
    ++tested;
  }
  CHECK(tested >= 100);
}

TEST_CASE("algebraic reals: selection, refinement, comparison") {
  IntPolynomial p = parse_polynomial("-1,-1,1");
  AlgebraicReal phi = AlgebraicReal::kth_real_root(p, 1);
  CHECK(phi.compare(Rational(1)) > 0);
  CHECK(phi.compare(Rational(2)) < 0);
  CHECK(phi.compare(make_rational(1619, 1000)) < 0);
  CHECK(phi.compare(make_rational(1618, 1000)) > 0);

  DyadicInterval e = phi.refine(200);
  Rational w = e.hi_rational() - e.lo_rational();
  Rational bound(1);
  mpq_div_2exp(bound.get_mpq_t(), bound.get_mpq_t(), 190);
  CHECK(w <= bound);
  CHECK(e.lo_rational().get_d() == doctest::Approx(1.6180339887));

  AlgebraicReal neg = AlgebraicReal::kth_real_root(p, 0);
  CHECK(neg.compare(Rational(0)) < 0);

  // rational root of a degree-1 polynomial
  AlgebraicReal half = AlgebraicReal::kth_real_root(parse_polynomial("-3,2"), 0);
  CHECK(half.is_rational());
  CHECK(half.rational_value() == make_rational(3, 2));
}

TEST_CASE("refinement is sound on random polynomials") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    IntPolynomial p = squarefree_part(random_poly(rng, 4));
    auto isolated = sturm_isolate(p);
    for (size_t k = 0; k < isolated.size(); ++k) {
      AlgebraicReal x = AlgebraicReal::kth_real_root(p, k);
      DyadicInterval e = x.refine(96);
      // the sign of p changes across the refined enclosure
      int slo = p.sign_at(e.lo_rational());
      int shi = p.sign_at(e.hi_rational());
      CHECK(slo * shi <= 0);
    }
  }
}

TEST_CASE("schur-cohn counts against the numeric oracle") {
  std::mt19937_64 rng(43);
  int tested = 0;
  for (int t = 0; t < 500 && tested < 200; ++t) {
    IntPolynomial p = random_poly(rng, 6);
    int numeric = oracle::inside_unit_disk(p);
    if (numeric < 0) continue;  // too close to the circle for doubles
    int exact;
    try {
      exact = schur_cohn_inside(p);
    } catch (const std::domain_error&) {
      continue;  // exact circle root; excluded from this comparison
    }
    CHECK(exact == numeric);
    ++tested;
  }
  CHECK(tested >= 150);
}

TEST_CASE("unit circle root detection") {
  CHECK(has_unit_circle_root(parse_polynomial("1,0,1")));      // x^2 + 1
  CHECK(has_unit_circle_root(parse_polynomial("1,1,1")));      // cyclotomic
  CHECK(has_unit_circle_root(parse_polynomial("-1,1")));       // x - 1
  CHECK_FALSE(has_unit_circle_root(parse_polynomial("-1,-1,1")));
  CHECK_FALSE(has_unit_circle_root(parse_polynomial("-2,0,1")));
  // salem-like palindromic with circle roots: x^4 - 2x^3 + x^2 - 2x + 1?
  CHECK(has_unit_circle_root(parse_polynomial("1,-1,1,-1,1")));  // cyclotomic 10
}

TEST_CASE("pisot classification of the reference polynomials") {
  PisotClassification golden =
      classify_pisot(AlgebraicReal::kth_real_root(parse_polynomial("-1,-1,1"), 1));
  CHECK(golden.kind == PisotKind::Pisot);
  CHECK(golden.monic);

  PisotClassification pseudo =
      classify_pisot(AlgebraicReal::kth_real_root(parse_polynomial("1,-6,2"), 1));
  CHECK(pseudo.kind == PisotKind::PseudoPisotNonInteger);
  CHECK_FALSE(pseudo.monic);
  CHECK(pseudo.trace == 3);

  PisotClassification neither =
      classify_pisot(AlgebraicReal::kth_real_root(parse_polynomial("1,-5,2"), 1));
  CHECK(neither.kind == PisotKind::Neither);

  // 1 + sqrt(3): conjugate -0.732 inside, monic
  PisotClassification p13 =
      classify_pisot(AlgebraicReal::kth_real_root(parse_polynomial("-2,-2,1"), 1));
  CHECK(p13.kind == PisotKind::Pisot);

  // (1+sqrt(13))/2: conjugate -1.30 outside
  PisotClassification p113 =
      classify_pisot(AlgebraicReal::kth_real_root(parse_polynomial("-3,-1,1"), 1));
  CHECK(p113.kind == PisotKind::Neither);

  CHECK_THROWS_AS(
      classify_pisot(AlgebraicReal::kth_real_root(parse_polynomial("1,-6,2"), 0)),
      std::domain_error);
}

TEST_CASE("mahler measure and weil height") {
  long prec = 96;
  // measure of x^2 - x - 1 is the golden ratio
  DyadicInterval m = mahler_measure(parse_polynomial("-1,-1,1"), prec);
  CHECK(m.lo_rational().get_d() == doctest::Approx(1.6180339887).epsilon(1e-9));
  CHECK(m.hi_rational().get_d() == doctest::Approx(1.6180339887).epsilon(1e-9));

  // measure of 2x - 3 is 3; height of 3/2 is 3
  DyadicInterval m32 = mahler_measure(parse_polynomial("-3,2"), prec);
  CHECK(m32.contains(Rational(3)));
  AlgebraicReal r32 = AlgebraicReal::kth_real_root(parse_polynomial("-3,2"), 0);
  CHECK(weil_height(r32, prec).contains(Rational(3)));

  // measure of x^2 - 2 is 2; height of sqrt(2) is sqrt(2)
  DyadicInterval m2 = mahler_measure(parse_polynomial("-2,0,1"), prec);
  CHECK(m2.contains(Rational(2)));
  AlgebraicReal rs2 = AlgebraicReal::kth_real_root(parse_polynomial("-2,0,1"), 1);
  DyadicInterval h = weil_height(rs2, prec);
  CHECK(h.lo_rational().get_d() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  // x^2 - x - 3 has both roots outside the unit circle: measure 3
  DyadicInterval m3 = mahler_measure(parse_polynomial("-3,-1,1"), prec);
  CHECK(m3.contains(Rational(3)));
}

TEST_CASE("mahler measure against the numeric oracle") {
  std::mt19937_64 rng(44);
  int tested = 0;
  for (int t = 0; t < 120 && tested < 60; ++t) {
    IntPolynomial p = random_poly(rng, 5);
    auto roots = oracle::complex_roots(p);
    double numeric = std::abs(p.leading().get_d());
    bool trustworthy = true;
    for (const auto& z : roots) {
      double a = std::abs(z);
      if (std::abs(a - 1.0) < 1e-6) trustworthy = false;
      numeric *= std::max(1.0, a);
    }
    if (!trustworthy || numeric > 1e12) continue;
    DyadicInterval m = mahler_measure(p, 80);
    CHECK(m.lo_rational().get_d() == doctest::Approx(numeric).epsilon(1e-6));
    ++tested;
  }
  CHECK(tested >= 40);
}

TEST_CASE("power residues follow the fibonacci pattern for the golden ratio") {
  AlgebraicReal phi = AlgebraicReal::kth_real_root(parse_polynomial("-1,-1,1"), 1);
  for (unsigned long n = 1; n <= 25; ++n) {
    RatPoly res = power_residue(phi, n);
    REQUIRE(res.size() == 2);
    CHECK(res[1] == Rational(oracle::fibonacci(n)));
    CHECK(res[0] == Rational(oracle::fibonacci(n - 1 == 0 ? 0 : n - 1)));
  }
}

TEST_CASE("trace powers equal lucas numbers for the golden polynomial") {
  std::vector<Rational> s = trace_powers(parse_polynomial("-1,-1,1"), 20);
  REQUIRE(s.size() == 20);
  for (size_t k = 1; k <= 20; ++k)
    CHECK(s[k - 1] == Rational(oracle::lucas(static_cast<unsigned long>(k))));
}

TEST_CASE("trace powers for a non-monic polynomial") {
  // roots of 2x^2 - 6x + 1: s_1 = 3, s_{k+1} = 3 s_k - (1/2) s_{k-1}
  std::vector<Rational> s = trace_powers(parse_polynomial("1,-6,2"), 10);
  CHECK(s[0] == 3);
  CHECK(s[1] == 8);
  for (size_t k = 2; k < 10; ++k)
    CHECK(s[k] == 3 * s[k - 1] - s[k - 2] / 2);
}

TEST_CASE("frac_power certifies the lucas approximation") {
  AlgebraicReal phi = AlgebraicReal::kth_real_root(parse_polynomial("-1,-1,1"), 1);
  for (unsigned long n : {10UL, 20UL, 30UL}) {
    FracPowerResult r = frac_power(phi, n);
    REQUIRE_FALSE(r.ambiguous_at_cap);
    CHECK(r.nearest == oracle::lucas(n));
    CHECK(r.dist.hi_rational() < make_rational(1, 2));
    CHECK(r.dist.lo_rational() > 0);
  }

  FracPowerResult r10 = frac_power(phi, 10);
  // distance is exactly |phi^10 - 123| = (123 - L_10 resolves to conj term)
  CHECK(r10.dist.lo_rational().get_d() == doctest::Approx(0.00813061875578).epsilon(1e-10));
}

TEST_CASE("frac_power_scaled") {
  AlgebraicReal phi = AlgebraicReal::kth_real_root(parse_polynomial("-1,-1,1"), 1);
  FracPowerResult r = frac_power_scaled(phi, 10, Rational(2));
  REQUIRE_FALSE(r.ambiguous_at_cap);
  CHECK(r.nearest == 246);  // 2 phi^10 = 245.98...
}

TEST_CASE("characteristic polynomials of powers") {
  AlgebraicReal phi = AlgebraicReal::kth_real_root(parse_polynomial("-1,-1,1"), 1);
  for (unsigned long n = 1; n <= 12; ++n) {
    IntPolynomial cp = power_char_poly(phi, n);
    // X^2 - L_n X + (-1)^n
    std::vector<Integer> want = {n % 2 == 0 ? Integer(1) : Integer(-1),
                                 -oracle::lucas(n), Integer(1)};
    CHECK(cp == IntPolynomial(want));
  }

  AlgebraicReal s2 = AlgebraicReal::kth_real_root(parse_polynomial("-2,0,1"), 1);
  IntPolynomial even = squarefree_part(power_char_poly(s2, 4));
  CHECK(even == parse_polynomial("-4,1"));  // sqrt(2)^4 = 4
}

TEST_CASE("scaled characteristic polynomial matches direct scaling") {
  AlgebraicReal phi = AlgebraicReal::kth_real_root(parse_polynomial("-1,-1,1"), 1);
  IntPolynomial cp = power_char_poly_scaled(phi, 3, make_rational(3, 2));
  // roots 3/2 rho^3 with rho the golden conjugates: 4x^2 - 24x - 9 after
  // clearing denominators of (2x/3)^2 - 4(2x/3) - 1
  CHECK(cp == parse_polynomial("-9,-24,4"));
}
