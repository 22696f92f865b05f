#include "chowmod/param_curve.hpp"

#include <optional>

#include "chowmod/error.hpp"

namespace chowmod {

namespace {

// Value of a function at a place: nullopt for a pole.
std::optional<Element> value_at(const RatFunc& f, const Place& v) {
  if (f.is_zero()) return v.residue_field()->zero();
  int ord = f.order_at(v);
  if (ord < 0) return std::nullopt;
  if (ord > 0) return v.residue_field()->zero();
  Element x = f.residue_value(v);
  const FieldPtr& k = v.residue_field();
  return *x.field() == *k ? x : x.lift(k);
}

std::vector<Place> zero_places(const RatFunc& h) {
  std::vector<Place> out;
  if (h.num().degree() >= 1) {
    for (const auto& f : factor_univariate(h.num()).factors) {
      if (f.unfactored || (!h.field()->is_finite() && f.poly.degree() > 1))
        fail(ErrorCode::UnfactorableEntry,
             f.poly.to_string("t1") + " does not split over " + h.field()->spec_string());
      out.push_back(Place::finite(f.poly));
    }
  }
  Place inf = Place::infinity(h.field());
  if (h.order_at(inf) > 0) out.push_back(inf);
  return out;
}

// Function whose zeros are the points where g takes the face value v.
RatFunc contact(const RatFunc& g, FaceValue v) {
  switch (v) {
    case FaceValue::Zero: return g;
    case FaceValue::One: return g - RatFunc::constant(g.field()->one());
    case FaceValue::Infinity: return g.inverse();
  }
  return g;
}

bool is_identically(const RatFunc& g, FaceValue v) {
  switch (v) {
    case FaceValue::Zero: return g.is_zero();
    case FaceValue::One: return g.is_constant() && g.constant_value().is_one();
    case FaceValue::Infinity: return false;
  }
  return false;
}

}  // namespace

void ParamCurve::validate() const {
  auto [a, b] = face_values(model);
  FaceValue excluded = model == Model::Original ? FaceValue::One : FaceValue::Infinity;
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (FaceValue v : {a, b, excluded})
      if (is_identically(components[i], v))
        fail(ErrorCode::InvalidArgument,
             "component " + std::to_string(i + 1) + " is identically " + face_value_name(v));
  }
}

std::string ParamCurve::to_string() const {
  std::string out = "t1 -> (";
  for (std::size_t i = 0; i < base.size(); ++i) out += (i ? ", " : "") + base[i].to_string();
  out += "; ";
  for (std::size_t i = 0; i < components.size(); ++i) out += (i ? ", " : "") + components[i].to_string();
  return out + ")";
}

ZeroCycle param_curve_boundary(const ParamCurve& c, SignConvention sign) {
  if (c.n() == 0) fail(ErrorCode::WrongLevel, "boundary of a curve with no box coordinates");
  c.validate();
  ZeroCycle out(c.field, c.r(), c.n() - 1, c.model);
  auto [a, b] = face_values(c.model);
  long global = sign == SignConvention::Reversed ? -1 : 1;
  for (unsigned i = 1; i <= c.n(); ++i) {
    long sign_i = (i % 2 == 0 ? 1 : -1) * global;
    for (auto [face, s] : {std::pair{a, sign_i}, std::pair{b, -sign_i}}) {
      RatFunc h = contact(c.components[i - 1], face);
      for (const Place& v : zero_places(h)) {
        int ord = h.order_at(v);
        FieldPtr k = v.residue_field();
        ClosedPoint p{k, {}, {}};
        bool off_ambient = false;
        for (const auto& f : c.base) {
          auto x = value_at(f, v);
          if (!x) {
            off_ambient = true;
            break;
          }
          p.t.push_back(*x);
        }
        if (off_ambient) continue;
        std::vector<std::optional<Element>> others;
        for (unsigned j = 1; j <= c.n(); ++j)
          if (j != i) others.push_back(value_at(c.components[j - 1], v));
        bool excluded = false, improper = false;
        for (const auto& x : others) {
          if (c.model == Model::Original) {
            if (x && x->is_one()) excluded = true;
            if (!x || x->is_zero()) improper = true;
          } else {
            if (!x) excluded = true;
            if (x && (x->is_zero() || x->is_one())) improper = true;
          }
        }
        if (excluded) continue;
        if (improper)
          fail(ErrorCode::ImproperBoundary, "curve " + c.to_string() + " meets two faces at " + v.to_string());
        for (auto& x : others) p.y.push_back(*x);
        out.add(p, s * ord);
      }
    }
  }
  return out;
}

RatFunc evaluate_at(const MultiPoly& p, const std::vector<RatFunc>& values) {
  if (values.size() != p.vars().size()) fail(ErrorCode::InvalidArgument, "wrong number of values");
  const FieldPtr& field = p.field();
  RatFunc acc = RatFunc::constant(field->zero());
  for (const auto& [e, c] : p.terms()) {
    RatFunc term = RatFunc::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * values[i].pow(static_cast<long>(e[i]));
    acc = acc + term;
  }
  return acc;
}

ParamCurve pushforward(const ParamCurve& c, const Embedding& e, const ModulusDatum* d) {
  if (e.source_dim != c.r()) fail(ErrorCode::InvalidArgument, "embedding does not match the curve's base");
  ParamCurve out{c.field, c.model, {}, c.components};
  for (const auto& g : e.coords) out.base.push_back(evaluate_at(g, c.base));
  if (d) {
    RatFunc dv = evaluate_at(d->divisor, out.base);
    if (dv.is_zero()) fail(ErrorCode::ModulusNotAvoided, "curve lies inside the modulus");
    // Zeros of D along the curve that are not poles of the base map.
    UPoly poles = UPoly::constant(c.field->one());
    bool finite_at_infinity = true;
    Place inf = Place::infinity(c.field);
    for (const auto& f : out.base) {
      poles *= f.den();
      if (!f.is_zero() && f.order_at(inf) < 0) finite_at_infinity = false;
    }
    UPoly zeros = dv.num();
    for (;;) {
      UPoly g = gcd(zeros, poles);
      if (g.degree() < 1) break;
      zeros = zeros / g;
    }
    if (zeros.degree() >= 1)
      fail(ErrorCode::ModulusNotAvoided, "curve meets the modulus where " + zeros.to_string("t1") + " vanishes");
    if (finite_at_infinity && dv.order_at(inf) > 0)
      fail(ErrorCode::ModulusNotAvoided, "curve meets the modulus at the parameter infinity");
  }
  return out;
}

}  // namespace chowmod
