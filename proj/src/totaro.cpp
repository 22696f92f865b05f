#include "chowmod/totaro.hpp"

namespace chowmod {

namespace {

std::vector<RatFunc> constants(const std::vector<Element>& xs) {
  std::vector<RatFunc> out;
  for (const auto& x : xs) out.push_back(RatFunc::constant(x));
  return out;
}

void require_nonzero(const Element& x, const char* what) {
  if (x.is_zero()) fail(ErrorCode::ZeroElement, std::string(what) + " must be nonzero");
}

ParamCurve steinberg_shape(const FieldPtr& field, const std::vector<Element>& x, const Element& f1,
                           const std::vector<Element>& rest, bool literal) {
  require_nonzero(f1, "f1");
  if (f1.is_one()) fail(ErrorCode::SteinbergPrecondition, "f1 = 1");
  for (const auto& f : rest) require_nonzero(f, "entry");
  RatFunc t = RatFunc::param(field);
  RatFunc one = RatFunc::constant(field->one());
  RatFunc c1 = RatFunc::constant(f1);
  ParamCurve c{field, Model::Original, constants(x), {t, one - t}};
  c.components.push_back(literal ? (c1 - one) / (one - t) : (c1 - t) / (one - t));
  for (const auto& f : rest) c.components.push_back(RatFunc::constant(f));
  c.validate();
  return c;
}

ClosedPoint point_over(const FieldPtr& field, const std::vector<Element>& x, std::vector<Element> y) {
  return ClosedPoint{field, x, std::move(y)};
}

CurveCheck finish(ZeroCycle boundary, ZeroCycle expected) {
  CurveCheck out;
  out.ok = boundary == expected;
  if (!out.ok) out.detail = "boundary " + boundary.to_string() + ", expected " + expected.to_string();
  out.boundary = std::move(boundary);
  out.expected = std::move(expected);
  return out;
}

}  // namespace

ParamCurve totaro_steinberg_curve(const FieldPtr& field, const std::vector<Element>& x, const Element& f1,
                                  const std::vector<Element>& rest) {
  return steinberg_shape(field, x, f1, rest, false);
}

ParamCurve totaro_steinberg_curve_literal(const FieldPtr& field, const std::vector<Element>& x, const Element& f1,
                                          const std::vector<Element>& rest) {
  return steinberg_shape(field, x, f1, rest, true);
}

ParamCurve totaro_mult_curve(const FieldPtr& field, const std::vector<Element>& x, const Element& f,
                             const Element& g) {
  require_nonzero(f, "f");
  require_nonzero(g, "g");
  RatFunc t = RatFunc::param(field);
  RatFunc cf = RatFunc::constant(f);
  RatFunc cfg = RatFunc::constant(f * g);
  ParamCurve c{field, Model::Original, constants(x), {t, (cf * t - cfg) / (t - cfg)}};
  c.validate();
  return c;
}

ParamCurve xi_curve(const std::vector<RatFunc>& f, const RatFunc& u, const UPoly& pi, int r) {
  const FieldPtr& field = u.field();
  std::vector<RatFunc> comps = f;
  comps.push_back(u * RatFunc(pi).pow(r));
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (comps[i] == comps[j])
        fail(ErrorCode::IndistinctEntries, "entries " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                               " are both " + comps[i].to_string());
  ParamCurve c{field, Model::Original, {RatFunc::param(field)}, comps};
  c.validate();
  return c;
}

CurveCheck verify_steinberg_curve(const FieldPtr& field, const std::vector<Element>& x, const Element& f1,
                                  const std::vector<Element>& rest) {
  ParamCurve c = totaro_steinberg_curve(field, x, f1, rest);
  unsigned n = static_cast<unsigned>(rest.size()) + 2;
  ZeroCycle expected(field, static_cast<unsigned>(x.size()), n, Model::Original);
  std::vector<Element> y{f1, field->one() - f1};
  y.insert(y.end(), rest.begin(), rest.end());
  bool has_one = false;
  for (const auto& v : y) has_one |= v.is_one();
  if (!has_one) expected.add(point_over(field, x, y));
  return finish(param_curve_boundary(c), expected);
}

CurveCheck verify_mult_curve(const FieldPtr& field, const std::vector<Element>& x, const Element& f,
                             const Element& g) {
  ParamCurve c = totaro_mult_curve(field, x, f, g);
  ZeroCycle expected(field, static_cast<unsigned>(x.size()), 1, Model::Original);
  for (auto [v, m] : {std::pair{f, -1L}, std::pair{g, -1L}, std::pair{f * g, 1L}})
    if (!v.is_one()) expected.add(point_over(field, x, {v}), m);
  return finish(param_curve_boundary(c), expected);
}

ZeroCycle psi_tilde_delta(const FunctionMilnorElement& s) {
  if (s.n() == 0) fail(ErrorCode::InvalidArgument, "delta of a length-0 symbol");
  ZeroCycle out(s.field(), 1, s.n() - 1, Model::Original);
  for (const auto& [x, e] : delta_by_points(s)) out += psi_map(x, e);
  return out;
}

CurveCheck verify_xi_curve(const std::vector<RatFunc>& f, const RatFunc& u, const UPoly& pi, int r) {
  ParamCurve c = xi_curve(f, u, pi, r);
  FunctionMilnorElement s = make_function_symbol(u.field(), c.components);
  ZeroCycle expected = psi_tilde_delta(s);
  if (f.size() % 2 == 1) expected = expected.scaled(-1);
  return finish(param_curve_boundary(c), expected);
}

namespace {

std::map<ClosedPoint, MilnorElement> reduced(const std::map<ClosedPoint, MilnorElement>& m, long sign) {
  std::map<ClosedPoint, MilnorElement> out;
  for (const auto& [x, e] : m) {
    MilnorElement v = symbol_reduce(e.scaled(sign)).value;
    if (!v.is_zero()) out.emplace(x, v);
  }
  return out;
}

}  // namespace

SquareCheck verify_commuting_square(const ParamCurve& c) {
  SquareCheck out;
  out.phi_of_boundary = reduced(phi_map(param_curve_boundary(c)), 1);
  long sign = c.n() % 2 == 0 ? -1 : 1;
  out.delta_of_theta = reduced(delta_by_points(theta_map(c)), sign);
  out.ok = out.phi_of_boundary == out.delta_of_theta;
  return out;
}

}  // namespace chowmod
