#include "chowmod/milnor.hpp"

#include <algorithm>
#include <numeric>

#include "chowmod/smith.hpp"

namespace chowmod {

MilnorElement make_symbol(const FieldPtr& field, const std::vector<Element>& entries, long mult) {
  MilnorElement e(field, static_cast<unsigned>(entries.size()));
  e.add(entries, mult);
  return e;
}

FunctionMilnorElement make_function_symbol(const FieldPtr& base, const std::vector<RatFunc>& entries, long mult) {
  FunctionMilnorElement e(base, static_cast<unsigned>(entries.size()));
  e.add(entries, mult);
  return e;
}

Element k1_value(const MilnorElement& e) {
  if (e.n() != 1) fail(ErrorCode::InvalidArgument, "K1 value of a symbol of length " + std::to_string(e.n()));
  Element acc = e.field()->one();
  for (const auto& [s, m] : e.terms()) acc *= s[0].pow(m);
  return acc;
}

ReduceResult symbol_reduce(const MilnorElement& e, bool certificate_mode) {
  const FieldPtr& field = e.field();
  if (e.is_zero() || e.n() == 0) return {e, "exact"};
  if (e.n() == 1) {
    MilnorElement out(field, 1);
    out.add({k1_value(e)});
    return {out, "exact"};
  }
  if (field->is_finite()) {
    if (!certificate_mode) return {MilnorElement(field, e.n()), "theorem-backed (Steinberg)"};
    K2Result k2 = k2_presentation_oracle(field->order());
    // K_n for n >= 2 is generated by products with K_2, so a trivial K_2
    // settles every n >= 2.
    if (!k2.invariants.empty()) return {e, "oracle: K2 nontrivial"};
    return {MilnorElement(field, e.n()), "oracle-certified (K2 presentation)"};
  }
  MilnorElement out(field, e.n());
  for (const auto& [s, m] : e.terms()) {
    std::vector<std::size_t> idx(s.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        if (idx[i] > idx[j]) ++inversions;
    std::vector<Element> sorted;
    for (std::size_t i : idx) sorted.push_back(s[i]);
    out.add(sorted, inversions % 2 == 0 ? m : -m);
  }
  return {out, "exact"};
}

MilnorElement tame_symbol(const Place& v, const FunctionMilnorElement& s) {
  FieldPtr k = v.residue_field();
  unsigned n = s.n();
  if (n == 0) fail(ErrorCode::InvalidArgument, "tame symbol of a length-0 symbol");
  MilnorElement out(k, n - 1);
  RatFunc pi = v.uniformizer();
  auto lift = [&](const Element& x) { return *x.field() == *k ? x : x.lift(k); };
  Element minus_one = -k->one();
  for (const auto& [sym, mult] : s.terms()) {
    std::vector<int> ord(n);
    std::vector<Element> unit(n);
    std::vector<std::size_t> support;
    for (unsigned i = 0; i < n; ++i) {
      ord[i] = sym[i].order_at(v);
      unit[i] = lift((sym[i] * pi.pow(-ord[i])).residue_value(v));
      if (ord[i] != 0) support.push_back(i);
    }
    // Multilinear expansion: a_i = u_i * pi^ord_i; choose which slots carry pi.
    std::size_t subsets = std::size_t{1} << support.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      long coeff = mult;
      std::vector<bool> is_pi(n, false);
      for (std::size_t b = 0; b < support.size(); ++b)
        if (mask & (std::size_t{1} << b)) {
          is_pi[support[b]] = true;
          coeff *= ord[support[b]];
        }
      // {.., pi, .., pi, ..} = {.., -1, .., pi, ..}: keep only the last pi.
      std::size_t last = n;
      for (std::size_t i = n; i-- > 0;)
        if (is_pi[i]) {
          last = i;
          break;
        }
      std::vector<Element> rest;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == last) continue;
        rest.push_back(is_pi[i] ? minus_one : unit[i]);
      }
      // Move pi from slot `last` to the end.
      if ((n - 1 - last) % 2 == 1) coeff = -coeff;
      out.add(rest, coeff);
    }
  }
  return out;
}

std::map<Place, MilnorElement> total_delta(const FunctionMilnorElement& s) {
  std::vector<RatFunc> entries;
  for (const auto& [sym, m] : s.terms()) {
    (void)m;
    entries.insert(entries.end(), sym.begin(), sym.end());
  }
  std::map<Place, MilnorElement> out;
  std::vector<Place> places = support_places(entries, false);
  places.push_back(Place::infinity(s.field()));
  for (const auto& v : places) out.emplace(v, tame_symbol(v, s));
  return out;
}

Element norm_k1_to_base(const MilnorElement& e, const FieldPtr& base) {
  Element x = e.is_zero() ? e.field()->one() : k1_value(e);
  if (*x.field() == *base) return x;
  if (!x.field()->is_finite()) fail(ErrorCode::NormNotImplemented, "norms over infinite fields");
  if (*x.field()->prime_field() != *base) fail(ErrorCode::NormNotImplemented, "norm to a non-prime subfield");
  return norm_k1_finite(x);
}

Element weil_product(const RatFunc& f, const RatFunc& g) {
  const FieldPtr& k = f.field();
  FunctionMilnorElement s = make_function_symbol(k, {f, g});
  Element acc = k->one();
  for (const auto& [v, e] : total_delta(s)) {
    (void)v;
    acc *= norm_k1_to_base(e, k);
  }
  return acc;
}

K2Result k2_presentation_oracle(const mpz_class& q) {
  if (q < 2) fail(ErrorCode::NotPrimePower, q.get_str() + " is not a prime power");
  auto primes = factor_integer(q);
  if (primes.size() != 1) fail(ErrorCode::NotPrimePower, q.get_str() + " is not a prime power");
  if (q > 64) fail(ErrorCode::TooLarge, "K2 oracle limited to q <= 64");
  std::uint64_t p = primes[0].first.get_ui();
  FieldPtr f = Field::finite(p, primes[0].second);
  K2Result result;
  result.q = q;
  result.generators = 1;
  IntMatrix rel;
  rel.push_back({q - 1});
  std::uint64_t order = q.get_ui();
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    Element a = f->element_at(idx);
    if (a.is_zero() || a.is_one()) continue;
    Element b = f->one() - a;
    mpz_class la(static_cast<unsigned long>(discrete_log(a)));
    mpz_class lb(static_cast<unsigned long>(discrete_log(b)));
    rel.push_back({la * lb});
  }
  result.relations = rel.size();
  result.invariants = abelian_invariants(rel, 1);
  return result;
}

namespace {

// Frobenius power carrying p's t-coordinates onto the canonical base point.
unsigned frobenius_power_to(const std::vector<Element>& from, const std::vector<Element>& to) {
  std::vector<Element> cur = from;
  unsigned d = from.empty() ? 1 : from[0].field()->degree();
  for (unsigned k = 0; k < d; ++k) {
    bool same = true;
    for (std::size_t i = 0; i < cur.size() && same; ++i) same = cur[i] == to[i];
    if (same) return k;
    for (auto& x : cur) x = x.frobenius();
  }
  fail(ErrorCode::InvalidArgument, "points are not Frobenius conjugate");
}

std::vector<Element> apply_frobenius(std::vector<Element> xs, unsigned k) {
  for (unsigned j = 0; j < k; ++j)
    for (auto& x : xs) x = x.frobenius();
  return xs;
}

}  // namespace

ClosedPoint base_point(const ClosedPoint& p) { return canonical_point(ClosedPoint{p.field, p.t, {}}); }

std::map<ClosedPoint, MilnorElement> phi_map(const ZeroCycle& z) {
  std::map<ClosedPoint, MilnorElement> out;
  for (const auto& [p, m] : z.terms()) {
    ClosedPoint x = base_point(p);
    unsigned n = z.n();
    auto it = out.try_emplace(x, MilnorElement(x.field, n)).first;
    MilnorElement& acc = it->second;
    bool has_one = std::any_of(p.y.begin(), p.y.end(), [](const Element& v) { return v.is_one(); });
    if (has_one) continue;
    if (*x.field == *p.field) {
      unsigned k = x.field->is_extension() && x.field->is_finite() ? frobenius_power_to(p.t, x.t) : 0;
      acc.add(apply_frobenius(p.y, k), m);
      continue;
    }
    // Residue field of the point is bigger than that of its base point,
    // which is then the prime field.
    unsigned d = p.field->degree();
    if (n == 0) {
      acc.add({}, m * static_cast<long>(d));
    } else if (!p.field->is_finite()) {
      fail(ErrorCode::NormNotImplemented, "norms from " + p.field->spec_string() + " in degree " + std::to_string(n));
    } else if (n == 1) {
      acc.add({norm_k1_finite(p.y[0])}, m);
    }
    // Finite residue fields with n >= 2: K_n vanishes, nothing to add.
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

ZeroCycle psi_map(const ClosedPoint& x, const MilnorElement& s, Model model) {
  ZeroCycle out(x.field->prime_field(), static_cast<unsigned>(x.t.size()), s.n(), model);
  for (const auto& [sym, m] : s.terms()) {
    ClosedPoint p{x.field, x.t, sym};
    if (model == Model::Psi) p = convert_point(p, Model::Original, Model::Psi);
    out.add(p, m);
  }
  return out;
}

FunctionMilnorElement theta_map(const ParamCurve& c) {
  FunctionMilnorElement out(c.field, c.n());
  bool constant_base = std::all_of(c.base.begin(), c.base.end(), [](const RatFunc& f) { return f.is_constant(); });
  if (constant_base) return out;
  if (c.r() != 1 || c.base[0] != RatFunc::param(c.field))
    fail(ErrorCode::NotAGraph, "curve is not a graph over the t-line");
  out.add(c.components);
  return out;
}

std::map<ClosedPoint, MilnorElement> delta_by_points(const FunctionMilnorElement& s, bool finite_places_only) {
  std::map<ClosedPoint, MilnorElement> out;
  for (const auto& [v, e] : total_delta(s)) {
    if (v.at_infinity()) {
      if (finite_places_only) continue;
      fail(ErrorCode::InvalidArgument, "the place at infinity has no point in A^1");
    }
    if (e.is_zero()) continue;
    ClosedPoint raw{v.residue_field(), {v.root()}, {}};
    ClosedPoint x = canonical_point(raw);
    unsigned k = x.field->is_extension() && x.field->is_finite() ? frobenius_power_to(raw.t, x.t) : 0;
    MilnorElement moved(x.field, e.n());
    for (const auto& [sym, m] : e.terms()) moved.add(apply_frobenius(sym, k), m);
    out.emplace(x, moved);
  }
  return out;
}

}  // namespace chowmod
