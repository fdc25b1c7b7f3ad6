#include "mahlerlab/algnum.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mahlerlab {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Integer(0));
  Integer content = 0;
  for (const Integer& c : coeffs_) content = gcd(content, c);
  if (content > 1)
    for (Integer& c : coeffs_) c /= content;
  if (sgn(coeffs_.back()) < 0)
    for (Integer& c : coeffs_) c = -c;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc(coeffs_.back());
  for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + Rational(coeffs_[i]);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const { return sgn(eval(x)); }

IntPolynomial IntPolynomial::derivative() const {
  if (degree() == 0) return IntPolynomial();
  std::vector<Integer> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Integer(static_cast<unsigned long>(i));
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversal() const {
  std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

IntPolynomial parse_polynomial(const std::string& text) {
  std::vector<Integer> coeffs;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("polynomial parse: empty coefficient");
    coeffs.emplace_back(tok.substr(b, e - b + 1));
  }
  if (coeffs.empty())
    throw std::invalid_argument("polynomial parse: no coefficients");
  return IntPolynomial(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ',';
    os << p.coeffs()[i];
  }
  return os;
}

// ---------------------------------------------------------------------------
// Rational-coefficient helpers

namespace {

void rp_trim(RatPoly& p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
  if (p.empty()) p.push_back(Rational(0));
}

bool rp_is_zero(const RatPoly& p) {
  return p.size() == 1 && sgn(p[0]) == 0;
}

size_t rp_deg(const RatPoly& p) { return p.size() - 1; }

RatPoly rp_from(const IntPolynomial& p) {
  RatPoly out;
  out.reserve(p.coeffs().size());
  for (const Integer& c : p.coeffs()) out.emplace_back(c);
  return out;
}

IntPolynomial rp_to_primitive(const RatPoly& p) {
  Integer den = 1;
  for (const Rational& c : p) den = den / gcd(den, c.get_den()) * c.get_den();
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const Rational& c : p)
    out.push_back(c.get_num() * (den / c.get_den()));
  return IntPolynomial(std::move(out));
}

Rational rp_eval(const RatPoly& p, const Rational& x) {
  Rational acc = p.back();
  for (size_t i = p.size() - 1; i-- > 0;) acc = acc * x + p[i];
  return acc;
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  rp_trim(out);
  return out;
}

// Remainder of a by monic-leading b (b need not be monic).
RatPoly rp_rem(RatPoly a, const RatPoly& b) {
  rp_trim(a);
  while (!rp_is_zero(a) && rp_deg(a) >= rp_deg(b)) {
    Rational f = a.back() / b.back();
    size_t shift = rp_deg(a) - rp_deg(b);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    rp_trim(a);
  }
  return a;
}

RatPoly rp_monic(RatPoly p) {
  rp_trim(p);
  Rational lead = p.back();
  if (sgn(lead) != 0 && lead != 1)
    for (Rational& c : p) c /= lead;
  return p;
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
  rp_trim(a);
  rp_trim(b);
  while (!rp_is_zero(b)) {
    RatPoly r = rp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return rp_monic(std::move(a));
}

}  // namespace

IntPolynomial gcd_poly(const IntPolynomial& a, const IntPolynomial& b) {
  return rp_to_primitive(rp_gcd(rp_from(a), rp_from(b)));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() == 0) return p;
  IntPolynomial g = gcd_poly(p, p.derivative());
  if (g.degree() == 0) return p;
  // exact division p / g over the rationals
  RatPoly num = rp_from(p), den = rp_from(g);
  RatPoly q(rp_deg(num) - rp_deg(den) + 1, Rational(0));
  while (!rp_is_zero(num) && rp_deg(num) >= rp_deg(den)) {
    Rational f = num.back() / den.back();
    size_t shift = rp_deg(num) - rp_deg(den);
    q[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[i + shift] -= f * den[i];
    num.pop_back();
    rp_trim(num);
  }
  return rp_to_primitive(q);
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

std::vector<RatPoly> sturm_chain(const IntPolynomial& p) {
  std::vector<RatPoly> chain;
  chain.push_back(rp_from(p));
  chain.push_back(rp_from(p.derivative()));
  while (!rp_is_zero(chain.back())) {
    RatPoly r = rp_rem(chain[chain.size() - 2], chain.back());
    for (Rational& c : r) c = -c;
    rp_trim(r);
    if (rp_is_zero(r)) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
  int vars = 0, prev = 0;
  for (const RatPoly& q : chain) {
    int s = sgn(rp_eval(q, x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++vars;
      prev = s;
    }
  }
  return vars;
}

Rational cauchy_bound(const IntPolynomial& p) {
  Rational m(0);
  for (size_t i = 0; i < p.degree(); ++i) {
    Rational c(abs(p[i]), p.leading());
    if (c > m) m = c;
  }
  return m + 2;
}

// Shrinks an isolating interval (holding one root in (lo, hi]) until neither
// endpoint is a root of p.
void clean_endpoints(const IntPolynomial& p, const std::vector<RatPoly>& chain,
                     Rational& lo, Rational& hi) {
  if (p.sign_at(hi) == 0) {
    // the counted root is exactly hi; center a tiny window on it
    Rational mid = hi;
    Rational delta = (hi - lo) / 4;
    while (true) {
      Rational a = mid - delta, b = mid + delta;
      if (p.sign_at(a) != 0 && p.sign_at(b) != 0 &&
          sign_variations_at(chain, a) - sign_variations_at(chain, b) == 1) {
        lo = a;
        hi = b;
        return;
      }
      delta /= 2;
    }
  }
  if (p.sign_at(lo) == 0) {
    // lo is a neighboring root, not the counted one; nudge inward past it
    Rational delta = (hi - lo) / 4;
    while (true) {
      Rational a = lo + delta;
      if (p.sign_at(a) != 0 &&
          sign_variations_at(chain, a) - sign_variations_at(chain, hi) == 1) {
        lo = a;
        return;
      }
      delta /= 2;
    }
  }
}

}  // namespace

int sturm_count(const IntPolynomial& p, const Rational& lo,
                const Rational& hi) {
  auto chain = sturm_chain(p);
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

std::vector<std::pair<Rational, Rational>> sturm_isolate(
    const IntPolynomial& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() == 0) return out;
  auto chain = sturm_chain(p);
  Rational bound = cauchy_bound(p);
  struct Seg {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Seg> work;
  {
    Rational lo = -bound, hi = bound;
    work.push_back({lo, hi, sign_variations_at(chain, lo),
                    sign_variations_at(chain, hi)});
  }
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    int count = s.vlo - s.vhi;
    if (count == 0) continue;
    if (count == 1) {
      Rational lo = s.lo, hi = s.hi;
      clean_endpoints(p, chain, lo, hi);
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    int vmid = sign_variations_at(chain, mid);
    work.push_back({s.lo, mid, s.vlo, vmid});
    work.push_back({mid, s.hi, vmid, s.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// AlgebraicReal

AlgebraicReal::AlgebraicReal(IntPolynomial poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ >= hi_) throw std::invalid_argument("AlgebraicReal: empty interval");
  if (poly_.degree() < 1)
    throw std::invalid_argument("AlgebraicReal: constant polynomial");
  if (sturm_count(poly_, lo_, hi_) != 1)
    throw std::invalid_argument(
        "AlgebraicReal: interval does not isolate exactly one root");
  auto chain = sturm_chain(poly_);
  clean_endpoints(poly_, chain, lo_, hi_);
}

AlgebraicReal AlgebraicReal::kth_real_root(const IntPolynomial& p, size_t k) {
  auto ivs = sturm_isolate(p);
  if (k >= ivs.size())
    throw std::out_of_range("kth_real_root: fewer real roots than requested");
  return AlgebraicReal(p, ivs[k].first, ivs[k].second);
}

AlgebraicReal AlgebraicReal::root_in(const IntPolynomial& p, const Rational& lo,
                                     const Rational& hi) {
  return AlgebraicReal(p, lo, hi);
}

Rational AlgebraicReal::rational_value() const {
  if (poly_.degree() != 1)
    throw std::logic_error("rational_value: degree != 1");
  return make_rational(-poly_[0], poly_[1]);
}

DyadicInterval AlgebraicReal::refine(long prec) const {
  if (poly_.degree() == 1) {
    Rational v = rational_value();
    return DyadicInterval::from_rational(v, prec + 4);
  }
  // bisection on local copies; endpoints are non-roots by construction
  Rational lo = lo_, hi = hi_;
  int sign_lo = poly_.sign_at(lo);
  auto wide = [&]() {
    Rational w = hi - lo;
    Rational scale = abs(lo) > abs(hi) ? abs(lo) : abs(hi);
    if (scale < 1) scale = 1;
    mpq_div_2exp(scale.get_mpq_t(), scale.get_mpq_t(),
                 static_cast<unsigned long>(prec));
    return w > scale;
  };
  while (wide()) {
    Rational mid = (lo + hi) / 2;
    int sm = poly_.sign_at(mid);
    if (sm == 0) {
      // rational root hit exactly; shrink symmetrically around it
      Rational delta = (hi - lo) / 4;
      lo = mid - delta;
      hi = mid + delta;
      while (poly_.sign_at(lo) == 0) lo = (lo + mid) / 2;
      while (poly_.sign_at(hi) == 0) hi = (hi + mid) / 2;
      sign_lo = poly_.sign_at(lo);
      continue;
    }
    if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return DyadicInterval::from_endpoints(lo, hi, prec + 8);
}

int AlgebraicReal::compare(const Rational& x) const {
  if (x <= lo_) return 1;
  if (x >= hi_) return -1;
  if (poly_.sign_at(x) == 0 && poly_.degree() == 1) return 0;
  if (sturm_count(poly_, lo_, x) == 1) {
    if (poly_.sign_at(x) == 0) return 0;
    return -1;
  }
  if (poly_.sign_at(x) == 0) return 0;
  return 1;
}

// ---------------------------------------------------------------------------
// Schur-Cohn

namespace {

// One pass of the Schur-Cohn reduction over the rationals. Returns the count
// of roots inside the unit disk, or nullopt on a degenerate step
// (|a_0| = |a_d| at some level), which the caller resolves.
std::optional<int> schur_cohn_core(RatPoly p) {
  int inside = 0;
  rp_trim(p);
  while (true) {
    // roots at the origin are inside
    while (p.size() > 1 && sgn(p[0]) == 0) {
      p.erase(p.begin());
      ++inside;
    }
    if (rp_deg(p) == 0) return inside;
    size_t n = rp_deg(p);
    Rational gamma = p[0] * p[0] - p[n] * p[n];
    int gs = sgn(gamma);
    if (gs == 0) return std::nullopt;
    // q = a0 * p - an * p~, degree <= n-1, constant term gamma
    RatPoly q(n, Rational(0));
    for (size_t i = 0; i < n; ++i) q[i] = p[0] * p[i] - p[n] * p[n - i];
    rp_trim(q);
    if (rp_is_zero(q)) return std::nullopt;
    if (gs > 0) {
      p = std::move(q);
    } else {
      auto sub = schur_cohn_core(std::move(q));
      if (!sub) return std::nullopt;
      return inside + static_cast<int>(n) - *sub;
    }
  }
}

RatPoly rp_scale_arg(const RatPoly& p, const Rational& r) {
  RatPoly out = p;
  Rational f(1);
  for (size_t i = 1; i < out.size(); ++i) {
    f *= r;
    out[i] *= f;
  }
  return out;
}

// Count of roots with |z| < r, nudging r slightly (within +-room/8) when the
// reduction degenerates. Returns the count and the radius actually used.
std::optional<std::pair<int, Rational>> count_inside_radius(
    const RatPoly& p, const Rational& r, const Rational& room) {
  static const int num[] = {0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7};
  for (int k = 0; k < 11; ++k) {
    Rational rr = r + room * Rational(num[k], 64);
    if (sgn(rr) <= 0) continue;
    auto c = schur_cohn_core(rp_scale_arg(p, rr));
    if (c) return std::make_pair(*c, rr);
  }
  return std::nullopt;
}

}  // namespace

IntPolynomial unit_circle_factor(const IntPolynomial& p) {
  return gcd_poly(p, p.reversal());
}

bool has_unit_circle_root(const IntPolynomial& p) {
  if (p.degree() == 0) return false;
  if (p.sign_at(Rational(1)) == 0 || p.sign_at(Rational(-1)) == 0) return true;
  IntPolynomial f = gcd_poly(p, p.reversal());
  if (f.degree() == 0) return false;
  if (f.sign_at(Rational(1)) == 0 || f.sign_at(Rational(-1)) == 0) return true;
  // f is self-inversive with f(+-1) != 0, hence palindromic of even degree:
  // f(z) = z^m F(z + 1/z). Build F from z^k + z^-k = T_k(w).
  size_t m = f.degree() / 2;
  if (f.degree() % 2 != 0)
    return true;  // odd-degree self-inversive has -1 as a root
  std::vector<RatPoly> cheb(m + 1);
  cheb[0] = {Rational(2)};
  if (m >= 1) cheb[1] = {Rational(0), Rational(1)};
  for (size_t k = 2; k <= m; ++k) {
    RatPoly t = rp_mul(cheb[k - 1], {Rational(0), Rational(1)});
    for (size_t i = 0; i < cheb[k - 2].size(); ++i) t[i] -= cheb[k - 2][i];
    rp_trim(t);
    cheb[k] = std::move(t);
  }
  RatPoly F = {Rational(f[m])};
  for (size_t k = 1; k <= m; ++k) {
    const RatPoly& t = cheb[k];
    if (F.size() < t.size()) F.resize(t.size(), Rational(0));
    for (size_t i = 0; i < t.size(); ++i) F[i] += Rational(f[m + k]) * t[i];
  }
  rp_trim(F);
  IntPolynomial fi = rp_to_primitive(F);
  if (fi.degree() == 0) return false;
  return sturm_count(squarefree_part(fi), Rational(-2), Rational(2)) > 0;
}

int schur_cohn_inside(const IntPolynomial& p) {
  RatPoly rp = rp_from(p);
  auto direct = schur_cohn_core(rp);
  if (direct) return *direct;
  // Degenerate: rule out unit-circle roots, then squeeze the count between
  // shrinking disks for p and its reversal (inside(p) + inside(p~) = deg when
  // no root lies on the circle).
  IntPolynomial f = unit_circle_factor(p);
  if (f.degree() > 0 && has_unit_circle_root(f))
    throw std::domain_error(
        "schur_cohn_inside: root on the unit circle; strip the self-inversive "
        "factor first");
  RatPoly rev = rp_from(p.reversal());
  int deg = static_cast<int>(p.degree());
  // inside(p) counts zero roots; inside(reversal) counts the roots of p
  // outside the disk. With no root on the circle the two sums reach deg
  // exactly when both disk counts have converged to radius 1.
  Rational gap(1, 16);
  for (int k = 0; k < 4000; ++k, gap /= 2) {
    Rational r = Rational(1) - gap;
    Rational room = gap / 2;
    auto c1 = count_inside_radius(rp, r, room);
    auto c2 = count_inside_radius(rev, r, room);
    if (c1 && c2 && c1->first + c2->first == deg) return c1->first;
  }
  throw std::runtime_error("schur_cohn_inside: squeeze did not converge");
}

// ---------------------------------------------------------------------------
// Pisot classification

const char* pisot_kind_name(PisotKind k) {
  switch (k) {
    case PisotKind::Pisot:
      return "Pisot";
    case PisotKind::PseudoPisotNonInteger:
      return "PseudoPisotNonInteger";
    default:
      return "Neither";
  }
}

PisotClassification classify_pisot(const AlgebraicReal& x) {
  const IntPolynomial& p = x.poly();
  size_t d = p.degree();
  PisotClassification out;
  out.monic = p.monic();
  out.trace = make_rational(-p[d - 1], p[d]);

  bool above_one = x.compare(Rational(1)) > 0;
  bool below_minus_one = x.compare(Rational(-1)) < 0;
  if (!above_one && !below_minus_one)
    throw std::domain_error("classify_pisot: selected root must have |root| > 1");

  if (d == 1) {
    // rational alpha: no conjugates; Pisot iff an integer > 1
    bool integral = p[d] == 1;
    if (integral && above_one)
      out.kind = PisotKind::Pisot;
    else if (!integral && out.trace.get_den() == 1)
      out.kind = PisotKind::PseudoPisotNonInteger;
    return out;
  }

  IntPolynomial f = unit_circle_factor(p);
  if (f.degree() > 0 && has_unit_circle_root(f)) {
    out.conjugates_on_circle = 1;  // at least one; exact count not needed
    out.kind = PisotKind::Neither;
    return out;
  }
  int inside = schur_cohn_inside(p);
  out.conjugates_inside = inside;
  bool others_inside = inside == static_cast<int>(d) - 1;
  if (!others_inside) {
    out.kind = PisotKind::Neither;
  } else if (out.monic && above_one) {
    out.kind = PisotKind::Pisot;
  } else if (!out.monic && out.trace.get_den() == 1) {
    out.kind = PisotKind::PseudoPisotNonInteger;
  } else {
    out.kind = PisotKind::Neither;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mahler measure / Weil height

namespace {

// A radial shell [lo, hi] together with disk counts C(lo), C(hi), so its
// root-modulus count is c_hi - c_lo.
struct ModulusShell {
  Rational lo, hi;
  int c_lo, c_hi;
};

}  // namespace

DyadicInterval mahler_measure(const IntPolynomial& p, long prec) {
  if (p.degree() == 0)
    return DyadicInterval::from_rational(Rational(abs(p[0])), prec);
  RatPoly rp = rp_from(p);
  int d = static_cast<int>(p.degree());
  Rational bound = cauchy_bound(p);

  std::vector<ModulusShell> frozen;
  std::vector<ModulusShell> work;
  work.push_back({Rational(0), bound, 0, d});  // C(bound) = d (Cauchy)

  // Relative width target per shell so the d-fold product stays within the
  // requested precision.
  Rational tol(1);
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(),
               static_cast<unsigned long>(prec + 4 + d));

  while (!work.empty()) {
    ModulusShell b = work.back();
    work.pop_back();
    if (b.c_hi == b.c_lo) continue;
    if (b.hi <= 1) continue;  // contributes max(1, |rho|) = 1
    if (b.hi - b.lo <= tol * b.hi) {
      frozen.push_back(b);
      continue;
    }
    Rational mid = (b.lo + b.hi) / 2;
    Rational room = (b.hi - b.lo) / 8;
    auto c = count_inside_radius(rp, mid, room);
    if (!c) throw std::runtime_error("mahler_measure: radius search failed");
    work.push_back({b.lo, c->second, b.c_lo, c->first});
    work.push_back({c->second, b.hi, c->first, b.c_hi});
  }

  Rational lo(abs(p.leading())), hi(abs(p.leading()));
  for (const ModulusShell& b : frozen) {
    Rational l = b.lo < 1 ? Rational(1) : b.lo;
    Rational h = b.hi < 1 ? Rational(1) : b.hi;
    for (int i = b.c_lo; i < b.c_hi; ++i) {
      lo *= l;
      hi *= h;
    }
  }
  return DyadicInterval::from_endpoints(lo, hi, prec);
}

DyadicInterval weil_height(const AlgebraicReal& x, long prec) {
  const IntPolynomial& p = x.poly();
  size_t d = p.degree();
  if (d >= 2) {
    // rational-root screen: a reducible "minimal polynomial" is a caller bug
    std::vector<Integer> nums, dens;
    Integer a0 = abs(p[0]), ad = p[d];
    for (Integer u = 1; u * u <= a0 || u == 1; ++u)
      if (a0 % u == 0) {
        nums.push_back(u);
        if (u != 0 && a0 / u != u) nums.push_back(a0 / u);
      }
    if (sgn(a0) == 0) nums.push_back(0);
    for (Integer v = 1; v * v <= ad || v == 1; ++v)
      if (ad % v == 0) {
        dens.push_back(v);
        if (ad / v != v) dens.push_back(ad / v);
      }
    for (const Integer& u : nums)
      for (const Integer& v : dens) {
        Rational r = make_rational(u, v);
        if (p.sign_at(r) == 0 || p.sign_at(-r) == 0)
          throw std::domain_error("weil_height: polynomial has a rational root "
                                  "(not minimal)");
      }
  }
  DyadicInterval m = mahler_measure(p, prec + 8);
  return iv_root(m, static_cast<unsigned long>(d), prec);
}

// ---------------------------------------------------------------------------
// Powers modulo the minimal polynomial

RatPoly power_residue(const AlgebraicReal& x, unsigned long n) {
  const IntPolynomial& p = x.poly();
  size_t d = p.degree();
  RatPoly modulus = rp_monic(rp_from(p));
  RatPoly acc = {Rational(1)};
  RatPoly base = d == 1 ? RatPoly{-modulus[0]} : RatPoly{Rational(0), Rational(1)};
  unsigned long e = n;
  while (e > 0) {
    if (e & 1UL) acc = rp_rem(rp_mul(acc, base), modulus);
    e >>= 1UL;
    if (e) base = rp_rem(rp_mul(base, base), modulus);
  }
  acc.resize(std::max<size_t>(d, 1), Rational(0));
  return acc;
}

namespace {

DyadicInterval eval_residue(const RatPoly& residue, const DyadicInterval& root,
                            long prec) {
  DyadicInterval acc = DyadicInterval::from_rational(residue.back(), prec);
  for (size_t i = residue.size() - 1; i-- > 0;) {
    acc = iv_mul(acc, root, prec);
    acc = iv_add(acc, DyadicInterval::from_rational(residue[i], prec), prec);
  }
  return acc;
}

FracPowerResult frac_power_impl(const AlgebraicReal& x, unsigned long n,
                                const Rational& scale, long start_prec,
                                long cap) {
  RatPoly residue = power_residue(x, n);
  FracPowerResult out;
  for (long prec = start_prec;; prec *= 2) {
    if (prec > cap) {
      out.ambiguous_at_cap = true;
      out.precision_used = cap;
      return out;
    }
    DyadicInterval root = x.refine(prec);
    DyadicInterval value = eval_residue(residue, root, prec + 16);
    if (scale != 1) value = iv_scale(value, scale, prec + 16);
    // nearest integer candidate from the midpoint
    Rational mid = (value.lo_rational() + value.hi_rational()) / 2;
    Integer m = rational_floor(mid + Rational(1, 2));
    Rational half(1, 2);
    if (value.lo_rational() > Rational(m) - half &&
        value.hi_rational() < Rational(m) + half) {
      out.nearest = m;
      DyadicInterval shifted = iv_sub(
          value, DyadicInterval(m), prec + 16);
      out.dist = iv_abs(shifted);
      out.precision_used = prec;
      return out;
    }
  }
}

}  // namespace

FracPowerResult frac_power(const AlgebraicReal& x, unsigned long n,
                           long start_prec, long cap) {
  return frac_power_impl(x, n, Rational(1), start_prec, cap);
}

FracPowerResult frac_power_scaled(const AlgebraicReal& x, unsigned long n,
                                  const Rational& scale, long start_prec,
                                  long cap) {
  return frac_power_impl(x, n, scale, start_prec, cap);
}

// ---------------------------------------------------------------------------
// Newton's identities

std::vector<Rational> trace_powers(const IntPolynomial& p, size_t count) {
  size_t d = p.degree();
  std::vector<Rational> s(count + 1, Rational(0));
  Rational lead(p[d]);
  for (size_t k = 1; k <= count; ++k) {
    Rational acc(0);
    if (k <= d) acc = Rational(k) * Rational(p[d - k]);
    for (size_t i = 1; i < k && i <= d; ++i)
      acc += Rational(p[d - i]) * s[k - i];
    s[k] = -acc / lead;
  }
  return std::vector<Rational>(s.begin() + 1, s.end());
}

// ---------------------------------------------------------------------------
// Characteristic polynomial of multiplication by alpha^n

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  size_t n = a.size();
  RatMatrix c(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// char(A) = X^d + c1 X^{d-1} + ... + cd by Faddeev-LeVerrier.
RatPoly char_poly(const RatMatrix& a) {
  size_t d = a.size();
  RatMatrix m(d, std::vector<Rational>(d, Rational(0)));
  RatPoly coeffs(d + 1, Rational(0));
  coeffs[d] = 1;
  RatMatrix mk = a;
  for (size_t k = 1; k <= d; ++k) {
    if (k > 1) {
      // mk = a * (m_prev + c_{k-1} I)
      mk = mat_mul(a, m);
    }
    Rational tr(0);
    for (size_t i = 0; i < d; ++i) tr += mk[i][i];
    Rational ck = -tr / Rational(static_cast<unsigned long>(k));
    coeffs[d - k] = ck;
    m = mk;
    for (size_t i = 0; i < d; ++i) m[i][i] += ck;
  }
  return coeffs;
}

}  // namespace

IntPolynomial power_char_poly_scaled(const AlgebraicReal& x, unsigned long n,
                                     const Rational& scale) {
  const IntPolynomial& p = x.poly();
  size_t d = p.degree();
  RatPoly modulus = rp_monic(rp_from(p));
  RatPoly residue = power_residue(x, n);
  // companion matrix of the monic modulus
  RatMatrix comp(d, std::vector<Rational>(d, Rational(0)));
  for (size_t i = 1; i < d; ++i) comp[i][i - 1] = 1;
  for (size_t i = 0; i < d; ++i) comp[i][d - 1] = -modulus[i];
  // B = scale * residue(comp)
  RatMatrix b(d, std::vector<Rational>(d, Rational(0)));
  RatMatrix power(d, std::vector<Rational>(d, Rational(0)));
  for (size_t i = 0; i < d; ++i) power[i][i] = 1;
  for (size_t k = 0; k < residue.size(); ++k) {
    if (sgn(residue[k]) != 0)
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) b[i][j] += residue[k] * power[i][j];
    if (k + 1 < residue.size()) power = mat_mul(power, comp);
  }
  if (scale != 1)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) b[i][j] *= scale;
  return rp_to_primitive(char_poly(b));
}

IntPolynomial power_char_poly(const AlgebraicReal& x, unsigned long n) {
  return power_char_poly_scaled(x, n, Rational(1));
}

}  // namespace mahlerlab
