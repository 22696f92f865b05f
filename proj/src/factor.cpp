#include "chowmod/factor.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "chowmod/error.hpp"

namespace chowmod {

namespace {

Element pth_root(const Element& a) {
  // Inverse Frobenius on F_q: a^(q/p).
  const FieldPtr& f = a.field();
  if (f->degree() == 1) return a;
  mpz_class e = f->order() / static_cast<unsigned long>(f->characteristic());
  return a.pow(e);
}

UPoly pth_root_poly(const UPoly& c) {
  const FieldPtr& f = c.field();
  std::uint64_t p = f->characteristic();
  std::vector<Element> out;
  for (std::size_t k = 0; k < c.coeffs().size(); k += p) out.push_back(pth_root(c.coeffs()[k]));
  return UPoly(f, std::move(out));
}

void square_free_finite(const UPoly& f, unsigned scale, std::vector<Factor>& out) {
  UPoly one = UPoly::constant(f.field()->one());
  UPoly c = gcd(f, f.derivative());
  UPoly w = f / c;
  unsigned i = 1;
  while (w != one) {
    UPoly y = gcd(w, c);
    UPoly fac = w / y;
    if (fac != one) out.push_back({fac, i * scale, false});
    w = y;
    c = c / y;
    ++i;
  }
  if (c != one) {
    square_free_finite(pth_root_poly(c), scale * static_cast<unsigned>(f.field()->characteristic()), out);
  }
}

// Square-free parts in characteristic zero (Yun).
void square_free_zero(const UPoly& f, std::vector<Factor>& out) {
  UPoly one = UPoly::constant(f.field()->one());
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = f / a;
  UPoly c = fp / a;
  UPoly d = c - b.derivative();
  unsigned i = 1;
  while (b != one) {
    UPoly g = gcd(b, d);
    if (g != one) out.push_back({g, i, false});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
}

std::vector<std::pair<UPoly, unsigned>> distinct_degree(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  const FieldPtr& field = f.field();
  UPoly one = UPoly::constant(field->one());
  UPoly x = UPoly::x(field);
  UPoly rest = f;
  UPoly h = x % rest;
  unsigned i = 1;
  while (rest.degree() >= 2 * static_cast<int>(i)) {
    h = h.pow_mod(field->order(), rest);
    UPoly g = gcd(h - x, rest);
    if (g != one) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

UPoly random_poly(const FieldPtr& field, int degree_bound, std::mt19937_64& rng) {
  std::uint64_t q = field->order().get_ui();
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  std::vector<Element> c;
  for (int k = 0; k < degree_bound; ++k) c.push_back(field->element_at(dist(rng)));
  return UPoly(field, std::move(c));
}

void equal_degree(const UPoly& f, unsigned d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const FieldPtr& field = f.field();
  UPoly one = UPoly::constant(field->one());
  bool even = field->characteristic() == 2;
  for (;;) {
    UPoly a = random_poly(field, f.degree(), rng);
    if (a.degree() < 1) continue;
    UPoly b;
    if (even) {
      // Trace to F_2: a + a^2 + ... + a^(2^(kd - 1)).
      unsigned steps = field->degree() * d;
      UPoly t = a % f;
      UPoly acc = t;
      for (unsigned s = 1; s < steps; ++s) {
        t = (t * t) % f;
        acc += t;
      }
      b = acc;
    } else {
      mpz_class qd;
      mpz_pow_ui(qd.get_mpz_t(), field->order().get_mpz_t(), d);
      b = a.pow_mod((qd - 1) / 2, f) - one;
    }
    UPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Integer coefficients proportional to a polynomial over Q.
std::vector<mpz_class> integer_coeffs(const UPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.scalar().get_den().get_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c.scalar() * l;
    out.push_back(v.get_num());
  }
  return out;
}

std::vector<std::pair<Element, unsigned>> roots_over_q(const UPoly& input) {
  std::vector<std::pair<Element, unsigned>> out;
  const FieldPtr& field = input.field();
  UPoly f = input.monic();
  unsigned zero_mult = 0;
  while (f.degree() > 0 && f.constant_term().is_zero()) {
    f = f / UPoly::x(field);
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(field->zero(), zero_mult);
  if (f.degree() < 1) return out;
  auto ic = integer_coeffs(f);
  auto num_divs = divisors(ic.front());
  auto den_divs = divisors(ic.back());
  std::set<mpq_class> seen;
  for (const auto& a : num_divs) {
    for (const auto& b : den_divs) {
      mpq_class r(a, b);
      r.canonicalize();
      for (int sign : {1, -1}) {
        mpq_class cand = sign * r;
        if (!seen.insert(cand).second) continue;
        Element x = field->from_rational(cand);
        if (!f.eval(x).is_zero()) continue;
        unsigned m = f.multiplicity_of(UPoly::linear_root(x));
        f = f / UPoly::linear_root(x).pow(m);
        out.emplace_back(x, m);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void sort_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.multiplicity < b.multiplicity;
  });
}

}  // namespace

bool Factorization::complete() const {
  return std::none_of(factors.begin(), factors.end(), [](const Factor& f) { return f.unfactored; });
}

UPoly Factorization::expand() const {
  UPoly out = UPoly::constant(unit);
  for (const auto& f : factors) out *= f.poly.pow(f.multiplicity);
  return out;
}

Factorization factor_univariate(const UPoly& p, const FactorOptions& options) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  const FieldPtr& field = p.field();
  Factorization result{p.leading(), {}};
  if (p.degree() == 0) return result;
  UPoly f = p.monic();

  if (field->is_finite()) {
    std::vector<Factor> sqf;
    square_free_finite(f, 1, sqf);
    std::mt19937_64 rng(0x5eedULL);
    for (const auto& part : sqf) {
      for (const auto& [g, d] : distinct_degree(part.poly)) {
        std::vector<UPoly> pieces;
        equal_degree(g, d, rng, pieces);
        for (auto& piece : pieces) result.factors.push_back({piece.monic(), part.multiplicity, false});
      }
    }
    sort_factors(result.factors);
    return result;
  }

  if (field->is_extension()) {
    if (f.degree() == 1) {
      result.factors.push_back({f, 1, false});
    } else {
      result.factors.push_back({f, 1, true});
    }
    return result;
  }

  for (const auto& [r, m] : roots_over_q(f)) {
    result.factors.push_back({UPoly::linear_root(r), m, false});
    f = f / UPoly::linear_root(r).pow(m);
  }
  if (f.degree() > 0) {
    std::vector<Factor> parts;
    square_free_zero(f, parts);
    for (auto& part : parts) {
      int deg = part.poly.degree();
      // Root-free of degree 2 or 3 means irreducible.
      part.unfactored = deg > options.rational_split_bound || deg >= 4;
      result.factors.push_back(part);
    }
  }
  sort_factors(result.factors);
  return result;
}

std::vector<std::pair<Element, unsigned>> rational_roots(const UPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const FieldPtr& field = p.field();
  if (!field->is_finite()) {
    if (field->is_extension()) fail(ErrorCode::UnsupportedExtension, "root finding over extensions of Q");
    return roots_over_q(p);
  }
  std::vector<std::pair<Element, unsigned>> out;
  for (const auto& f : factor_univariate(p).factors) {
    if (f.poly.degree() == 1) out.emplace_back(-f.poly.constant_term(), f.multiplicity);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const UPoly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  const FieldPtr& field = p.field();
  if (field->is_finite()) {
    auto fac = factor_univariate(p);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
  }
  if (field->is_extension() || p.degree() >= 4)
    fail(ErrorCode::UnsupportedExtension, "irreducibility over Q is only decided in degrees 2 and 3");
  return roots_over_q(p).empty();
}

}  // namespace chowmod
