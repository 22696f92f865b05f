#include "chowmod/random.hpp"

#include <limits>

namespace chowmod {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

MultiPoly tprod(const FieldPtr& field, const VarSet& vars) {
  MultiPoly p = MultiPoly::constant(field, vars, 1);
  for (unsigned i = 1; i <= vars.r; ++i) p *= MultiPoly::variable(field, vars, vars.t(i));
  return p;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view name, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix(splitmix(splitmix(seed) ^ h) ^ index);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "Rng::below(0)");
  // Rejection sampling keeps the draw independent of the library's
  // distribution implementation.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

long Rng::range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

Element random_element(Rng& rng, const FieldPtr& field) {
  if (!field->is_finite()) {
    Element x = field->from_rational(mpq_class(rng.range(-9, 9), rng.range(1, 4)));
    if (!field->is_extension()) return x;
    std::vector<mpq_class> c;
    for (unsigned k = 0; k < field->degree(); ++k) c.emplace_back(rng.range(-5, 5), rng.range(1, 3));
    return field->element(c);
  }
  return field->element_at(rng.below(field->order().get_ui()));
}

Element random_nonzero(Rng& rng, const FieldPtr& field) {
  for (;;) {
    Element x = random_element(rng, field);
    if (!x.is_zero()) return x;
  }
}

Element random_unit_not_one(Rng& rng, const FieldPtr& field) {
  for (;;) {
    Element x = random_nonzero(rng, field);
    if (!x.is_one()) return x;
  }
}

MultiPoly random_multilinear_y(Rng& rng, const FieldPtr& field, const VarSet& vars) {
  MultiPoly out(field, vars);
  for (unsigned mask = 0; mask < (1u << vars.n); ++mask) {
    Exponents e(vars.size(), 0);
    for (unsigned i = 0; i < vars.n; ++i)
      if (mask & (1u << i)) e[vars.y(i + 1)] = 1;
    out += MultiPoly::monomial(field, vars, e, random_element(rng, field));
  }
  return out;
}

MultiPoly random_t_poly(Rng& rng, const FieldPtr& field, const VarSet& vars, unsigned deg) {
  MultiPoly out = MultiPoly::constant(field, vars, random_element(rng, field));
  unsigned terms = static_cast<unsigned>(rng.range(0, 3));
  for (unsigned k = 0; k < terms && deg > 0; ++k) {
    Exponents e(vars.size(), 0);
    unsigned total = static_cast<unsigned>(rng.range(1, deg));
    for (unsigned j = 0; j < total; ++j) ++e[vars.t(static_cast<unsigned>(rng.range(1, vars.r)))];
    out += MultiPoly::monomial(field, vars, e, random_element(rng, field));
  }
  return out;
}

HypersurfaceCycle random_reciprocity_cycle(Rng& rng, const FieldPtr& field, bool higher) {
  VarSet vars{2, 2, false};
  MultiPoly t = tprod(field, vars);
  MultiPoly f = MultiPoly::constant(field, vars, 1) - t * random_multilinear_y(rng, field, vars);
  if (higher) f += t * t * random_multilinear_y(rng, field, vars);
  HypersurfaceCycle w(field, 2, 2, Model::Psi);
  w.add(f);
  return w;
}

HypersurfaceCycle random_level0_cycle(Rng& rng, const FieldPtr& field, unsigned r) {
  VarSet vars{r, 0, false};
  MultiPoly t = tprod(field, vars);
  HypersurfaceCycle z(field, r, 0, Model::Psi);
  long comps = rng.range(1, 3);
  for (long k = 0; k < comps; ++k) {
    long m = rng.range(1, 2) * (rng.coin() ? 1 : -1);
    z.add(MultiPoly::constant(field, vars, 1) - t * random_t_poly(rng, field, vars, 2), m);
  }
  return z;
}

HypersurfaceCycle random_admissible_cycle(Rng& rng, const FieldPtr& field, unsigned r, unsigned n) {
  VarSet vars{r, n, false};
  MultiPoly t = tprod(field, vars);
  HypersurfaceCycle z(field, r, n, Model::Psi);
  long comps = rng.range(1, 2);
  for (long k = 0; k < comps; ++k) {
    MultiPoly g = random_multilinear_y(rng, field, vars);
    if (rng.coin()) g += random_t_poly(rng, field, vars, 1) * MultiPoly::variable(field, vars, vars.y(1));
    z.add(MultiPoly::constant(field, vars, 1) - t * g, rng.range(1, 2) * (rng.coin() ? 1 : -1));
  }
  return z;
}

DegreePair random_degree_pair(Rng& rng, const FieldPtr& field, unsigned r, unsigned n) {
  VarSet vars{r, n, false};
  MultiPoly t = tprod(field, vars);
  MultiPoly g = random_multilinear_y(rng, field, vars);
  unsigned i = static_cast<unsigned>(rng.range(1, n));
  Exponents e(vars.size(), 0);
  e[vars.y(i)] = 2;
  if (n > 1 && rng.coin()) e[vars.y(i == n ? 1 : i + 1)] = 1;
  MultiPoly square = MultiPoly::monomial(field, vars, e, random_nonzero(rng, field));
  MultiPoly reduced = MultiPoly::constant(field, vars, 1) - t * g;
  MultiPoly violator = (reduced - t * square) * random_nonzero(rng, field);
  return {violator, reduced};
}

PointOffModulus random_point_off_modulus(Rng& rng, const FieldPtr& field, unsigned r, unsigned n, unsigned max_m) {
  ClosedPoint p{field, {}, {}};
  for (unsigned i = 0; i < r; ++i) p.t.push_back(random_nonzero(rng, field));
  for (unsigned i = 0; i < n; ++i) p.y.push_back(random_unit_not_one(rng, field));
  std::vector<unsigned> m;
  for (unsigned i = 0; i < r; ++i) m.push_back(static_cast<unsigned>(rng.range(1, max_m)));
  return {p, ModulusDatum::monomial(field, m)};
}

RatFunc random_ratfunc(Rng& rng, const FieldPtr& field, unsigned deg) {
  auto poly = [&] {
    if (!field->is_finite()) {
      UPoly p = UPoly::constant(random_nonzero(rng, field));
      long k = rng.range(0, deg);
      for (long j = 0; j < k; ++j) p *= UPoly::linear_root(field->from_int(rng.range(-6, 6)));
      return p;
    }
    for (;;) {
      std::vector<Element> c;
      long d = rng.range(0, deg);
      for (long j = 0; j <= d; ++j) c.push_back(random_element(rng, field));
      UPoly p(field, c);
      if (!p.is_zero()) return p;
    }
  };
  return RatFunc(poly(), poly());
}

std::vector<UPoly> factor_pool(const FieldPtr& field) {
  std::vector<UPoly> out;
  if (!field->is_finite()) {
    for (long a = -6; a <= 6; ++a) out.push_back(UPoly::linear_root(field->from_int(a)));
    return out;
  }
  std::uint64_t q = field->order().get_ui();
  for (std::uint64_t a = 0; a < q; ++a) out.push_back(UPoly::linear_root(field->element_at(a)));
  for (std::uint64_t b = 0; b < q; ++b)
    for (std::uint64_t c = 0; c < q; ++c) {
      UPoly p(field, {field->element_at(c), field->element_at(b), field->one()});
      if (is_irreducible(p)) out.push_back(p);
    }
  return out;
}

RatFunc random_ratfunc_from(Rng& rng, const std::vector<UPoly>& factors) {
  if (factors.empty()) fail(ErrorCode::InvalidArgument, "no factors to build from");
  const FieldPtr& field = factors.front().field();
  RatFunc f = RatFunc::constant(random_nonzero(rng, field));
  for (const auto& p : factors) {
    long e = rng.range(1, 2) * (rng.coin() ? 1 : -1);
    f = f * RatFunc(p).pow(e);
  }
  return f;
}

}  // namespace chowmod
