#include "chowmod/witness.hpp"

#include <functional>

namespace chowmod {

namespace {

const char* status(bool ok) { return ok ? "pass" : "fail"; }

Json entry(const char* check, bool ok) { return Json{{"check", check}, {"status", status(ok)}}; }

MultiPoly t_product(const FieldPtr& field, const VarSet& vars) {
  MultiPoly p = MultiPoly::constant(field, vars, 1);
  for (unsigned i = 1; i <= vars.r; ++i) p *= MultiPoly::variable(field, vars, vars.t(i));
  return p;
}

std::string sign_name(SignConvention s) { return s == SignConvention::Native ? "native" : "reversed"; }

Json convention_json(Model model, bool level0, SignConvention sign) {
  return Json{{"model", model_name(model)}, {"level0_degeneracy", level0}, {"sign", sign_name(sign)}};
}

bool admissible(const HypersurfaceCycle& z, const ModulusDatum& d, Json& transcript) {
  bool face = check_face_condition(z).pass;
  ModulusReport m = check_modulus_codim1(z, d);
  transcript.push_back(entry("face", face));
  Json mod = entry("modulus", m.verdict == ModulusVerdict::Certified);
  mod["verdict"] = verdict_name(m.verdict);
  transcript.push_back(mod);
  return face && m.verdict == ModulusVerdict::Certified;
}

Json rho_reciprocity_checks(const HypersurfaceCycle& w, const ModulusDatum& d, const ComplexOptions& options) {
  Json tr = Json::array();
  if (!admissible(w, d, tr)) return tr;
  std::vector<Element> faces;
  Json values = Json::array();
  for (unsigned i = 1; i <= 2; ++i)
    for (FaceValue v : {FaceValue::Zero, FaceValue::One}) {
      faces.push_back(rho(face_restrict(w, i, v), &d));
      values.push_back(faces.back().to_string());
    }
  Json fv = entry("face_rho", true);
  fv["values"] = values;
  tr.push_back(fv);
  // Route 1: the alternating sum of the face values.
  long g = options.sign == SignConvention::Reversed ? -1 : 1;
  Element by_faces = (faces[1] - faces[0]) * w.field()->from_int(g) + (faces[2] - faces[3]) * w.field()->from_int(g);
  Json e1 = entry("face_sum", by_faces.is_zero());
  e1["value"] = by_faces.to_string();
  tr.push_back(e1);
  // Route 2: rho of the boundary cycle.
  Element via_boundary = rho(boundary(w, options), &d);
  Json e2 = entry("rho_boundary", via_boundary.is_zero());
  e2["value"] = via_boundary.to_string();
  tr.push_back(e2);
  return tr;
}

Json bounding_checks(const HypersurfaceCycle& z, const HypersurfaceCycle& w, const ModulusDatum& d, SignConvention sign) {
  Json tr = Json::array();
  ModulusReport zm = check_modulus_codim1(z, d);
  Json in = entry("input_modulus", zm.verdict == ModulusVerdict::Certified);
  in["verdict"] = verdict_name(zm.verdict);
  tr.push_back(in);
  if (!admissible(w, d, tr)) return tr;
  ComplexOptions options{false, sign};
  HypersurfaceCycle b = boundary(w, options);
  HypersurfaceCycle expected = sign == SignConvention::Native ? z : z.scaled(-1);
  Json e = entry("boundary", b == expected);
  e["value"] = b.to_string();
  tr.push_back(e);
  return tr;
}

Json generator_checks(const HypersurfaceCycle& z, const Element& a, const ModulusDatum& d) {
  Json tr = Json::array();
  if (!admissible(z, d, tr)) return tr;
  HypersurfaceCycle b = boundary(z, ComplexOptions{true, SignConvention::Native});
  Json e = entry("boundary", b.is_zero());
  e["value"] = b.to_string();
  tr.push_back(e);
  Element r = rho(z, &d);
  Json e2 = entry("rho", r == a);
  e2["value"] = r.to_string();
  tr.push_back(e2);
  return tr;
}

struct Hyperbola {
  unsigned a = 0, b = 1;
  ParamCurve curve;
};

Hyperbola hyperbola_through(const ClosedPoint& z, unsigned base_dims, bool with_graph) {
  unsigned r = static_cast<unsigned>(z.t.size());
  if (r < base_dims + 2)
    fail(ErrorCode::InvalidArgument, "the hyperbola needs two t-coordinates after the " + std::to_string(base_dims) +
                                         " base coordinates (r = " + std::to_string(r) + ")");
  Hyperbola h;
  h.a = base_dims;
  h.b = base_dims + 1;
  RatFunc s = RatFunc::param(z.field);
  h.curve = ParamCurve{z.field, Model::Original, {}, {}};
  for (unsigned i = 0; i < r; ++i) {
    if (i == h.a)
      h.curve.base.push_back(s);
    else if (i == h.b)
      h.curve.base.push_back(RatFunc::constant(z.t[h.a] * z.t[h.b]) / s);
    else
      h.curve.base.push_back(RatFunc::constant(z.t[i]));
  }
  if (with_graph) h.curve.components.push_back(s - RatFunc::constant(z.t[h.a]));
  return h;
}

// Zeros of D along the curve at parameter values where the curve is defined.
bool curve_avoids(const ParamCurve& c, const ModulusDatum& d) {
  RatFunc dc = evaluate_at(d.divisor.lift(c.field), c.base);
  if (dc.is_zero()) return false;
  std::vector<RatFunc> fs{dc};
  std::vector<Place> places = support_places(fs, true);
  for (const auto& v : places) {
    if (dc.order_at(v) <= 0) continue;
    bool pole = false;
    for (const auto& f : c.base) pole |= !f.is_zero() && f.order_at(v) < 0;
    if (!pole) return false;
  }
  return true;
}

bool point_on_curve(const ParamCurve& c, const ClosedPoint& z, unsigned a) {
  Element s0 = z.t[a];
  for (std::size_t i = 0; i < c.base.size(); ++i) {
    const RatFunc& f = c.base[i];
    if (!f.den().eval(s0).is_zero() && f.eval(s0) == z.t[i]) continue;
    return false;
  }
  return true;
}

Json zero_cycle_checks(const FieldPtr& base, const ClosedPoint& z, const ModulusDatum& d, const ParamCurve& curve,
                       unsigned a, unsigned n) {
  Json tr = Json::array();
  ModulusDatum dz{d.divisor.lift(z.field), d.exponents};
  if (*z.field != *base) {
    Json bc = entry("base_change", true);
    bc["degree"] = z.field->degree();
    tr.push_back(bc);
  }
  tr.push_back(entry("point_off_modulus", !dz.vanishes_at(z.t)));
  tr.push_back(entry("curve_avoids_modulus", curve_avoids(curve, d)));
  tr.push_back(entry("point_on_curve", point_on_curve(curve, z, a)));
  if (n == 0) {
    ZeroCycle b = param_curve_boundary(curve);
    ZeroCycle expected(z.field, static_cast<unsigned>(z.t.size()), 0, Model::Original);
    expected.add(ClosedPoint{z.field, z.t, {}});
    Json e = entry("boundary", b == expected);
    e["value"] = b.to_string();
    tr.push_back(e);
    return tr;
  }
  ZeroCycle single(base, static_cast<unsigned>(z.t.size()), n, Model::Original);
  single.add(z);
  auto phi = phi_map(single);
  Json e = entry("phi", true);
  if (phi.empty()) {
    e["symbol"] = "0";
  } else {
    e["base_point"] = phi.begin()->first.to_string();
    e["symbol"] = phi.begin()->second.to_string();
  }
  tr.push_back(e);
  if (base->is_finite() && n >= 2 && !phi.empty()) {
    const MilnorElement& s = phi.begin()->second;
    ReduceResult red = symbol_reduce(s);
    Json st = entry("steinberg", red.value.is_zero());
    st["value"] = red.status;
    tr.push_back(st);
    const mpz_class& q = s.field()->order();
    if (n == 2 && q <= 64) {
      K2Result k2 = k2_presentation_oracle(q);
      Json ko = entry("k2_oracle", k2.invariants.empty());
      ko["q"] = q.get_ui();
      Json inv = Json::array();
      for (const auto& x : k2.invariants) inv.push_back(x.get_str());
      ko["invariants"] = inv;
      tr.push_back(ko);
    }
  }
  return tr;
}

bool all_pass(const Json& transcript) {
  for (const auto& e : transcript)
    if (!e.contains("status") || e.at("status") != "pass") return false;
  return true;
}

}  // namespace

bool Certificate::valid() const { return all_pass(transcript); }

Json Certificate::to_json() const {
  return Json{{"claim", claim}, {"witnesses", witnesses}, {"transcript", transcript}, {"convention", convention}};
}

Element rho(const HypersurfaceCycle& z, const ModulusDatum* d) {
  if (z.n() != 1) fail(ErrorCode::WrongLevel, "rho is defined on level-1 cycles, got n = " + std::to_string(z.n()));
  if (z.model() != Model::Psi) fail(ErrorCode::WrongModel, "rho needs the PSI model");
  if (d && d->r() != z.r()) fail(ErrorCode::InvalidArgument, "modulus and cycle disagree on r");
  const FieldPtr& field = z.field();
  const VarSet& vars = z.vars();
  MultiPoly tprod = t_product(field, vars);
  MultiPoly one = MultiPoly::constant(field, vars, 1);
  std::map<std::size_t, Element> at_zero;
  for (unsigned i = 1; i <= vars.r; ++i) at_zero.emplace(vars.t(i), field->zero());
  Element total = field->zero();
  for (const auto& [f, m] : z.terms()) {
    if (!f.constant_term().is_one())
      fail(ErrorCode::NotNormalized, "V(" + f.to_string() + ") does not have constant term 1");
    if (f.degree_in(vars.y(1)) >= 2) fail(ErrorCode::DegreeTooHigh, "deg_y1 of " + f.to_string() + " is at least 2");
    MultiPoly num = one - f;
    if (!num.divisible_by(tprod))
      fail(ErrorCode::NotNormalized, "t1...tr does not divide 1 - (" + f.to_string() + ")");
    MultiPoly g = num.exact_div(tprod).substitute(at_zero);
    Element c = g.coefficient_of(vars.y(1), 1).constant_term();
    total += c * field->from_int(m);
  }
  return total;
}

Certificate verify_rho_reciprocity(const HypersurfaceCycle& w, const ModulusDatum& d, const ComplexOptions& options) {
  if (w.n() != 2) fail(ErrorCode::WrongLevel, "rho reciprocity needs a level-2 cycle");
  if (w.model() != Model::Psi) fail(ErrorCode::WrongModel, "rho reciprocity needs the PSI model");
  Certificate c;
  c.claim = Json{{"kind", "rho_reciprocity"}, {"statement", "rho(dW) = 0"}, {"modulus", modulus_to_json(d)}};
  c.witnesses.push_back(Json{{"role", "W"}, {"cycle", cycle_to_json(w)}});
  c.convention = convention_json(w.model(), options.level0_degeneracy, options.sign);
  c.transcript = rho_reciprocity_checks(w, d, options);
  if (c.transcript.size() <= 2 && !c.valid()) fail(ErrorCode::NotAdmissible, "W = " + w.to_string() + " is not admissible");
  return c;
}

Certificate bounding_surface(const HypersurfaceCycle& z, const ModulusDatum& d, SignConvention sign) {
  if (z.n() != 0) fail(ErrorCode::WrongLevel, "bounding surfaces are built for level-0 cycles");
  const FieldPtr& field = z.field();
  VarSet wv{z.r(), 1, false};
  MultiPoly tprod = t_product(field, z.vars());
  MultiPoly tprod_w = t_product(field, wv);
  MultiPoly y1 = MultiPoly::variable(field, wv, wv.y(1));
  MultiPoly one = MultiPoly::constant(field, wv, 1);
  std::vector<std::size_t> embed(z.r());
  for (unsigned i = 0; i < z.r(); ++i) embed[i] = i;
  HypersurfaceCycle w(field, z.r(), 1, Model::Psi);
  for (const auto& [f, m] : z.terms()) {
    Element c0 = f.constant_term();
    if (c0.is_zero()) fail(ErrorCode::NotPresentable, "V(" + f.to_string() + ") has constant term 0");
    MultiPoly g = f * c0.inverse();
    MultiPoly num = MultiPoly::constant(field, z.vars(), 1) - g;
    if (!num.divisible_by(tprod))
      fail(ErrorCode::NotPresentable, "t1...tr does not divide " + g.to_string() + " - 1");
    if (modulus_verdict(f, d) != ModulusVerdict::Certified)
      fail(ErrorCode::NotAdmissible, "V(" + f.to_string() + ") does not satisfy the modulus condition");
    MultiPoly q = num.exact_div(tprod).with_vars(wv, embed);
    w.add(one - tprod_w * q * y1, m);
  }
  Certificate c;
  c.claim = Json{{"kind", "bounding_surface"}, {"statement", "dW = Z"}, {"modulus", modulus_to_json(d)}};
  c.witnesses.push_back(Json{{"role", "Z"}, {"cycle", cycle_to_json(z)}});
  c.witnesses.push_back(Json{{"role", "W"}, {"cycle", cycle_to_json(w)}});
  c.convention = convention_json(Model::Psi, false, sign);
  c.transcript = bounding_checks(z, w, d, sign);
  return c;
}

GeneratorResult generator_cycle(const Element& a, unsigned r) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "generator cycles need r >= 1");
  const FieldPtr& field = a.field();
  VarSet vars{r, 1, false};
  ModulusDatum d = ModulusDatum::monomial(field, std::vector<unsigned>(r, 1));
  HypersurfaceCycle z(field, r, 1, Model::Psi);
  MultiPoly f = MultiPoly::constant(field, vars, 1) - t_product(field, vars) * MultiPoly::variable(field, vars, vars.y(1)) * a;
  z.add(f);
  GeneratorResult out{z, {}};
  Certificate& c = out.certificate;
  c.claim = Json{{"kind", "generator"}, {"statement", "rho(Z_a) = a"}, {"a", a.to_string()}, {"r", r},
                 {"modulus", modulus_to_json(d)}};
  c.witnesses.push_back(Json{{"role", "Z_a"}, {"cycle", cycle_to_json(z)}});
  c.convention = convention_json(Model::Psi, true, SignConvention::Native);
  c.transcript = generator_checks(z, a, d);
  return out;
}

std::string variant_name(ZeroCycleVariant v) { return v == ZeroCycleVariant::Plain ? "plain" : "product_base"; }

ZeroCycleVariant parse_variant(std::string_view text) {
  if (text == "plain") return ZeroCycleVariant::Plain;
  if (text == "product_base" || text == "product-base") return ZeroCycleVariant::ProductBase;
  fail(ErrorCode::InvalidArgument, "unknown variant \"" + std::string(text) + "\" (plain or product_base)");
}

Certificate zero_cycle_vanishing_witness(const ClosedPoint& z, const ModulusDatum& d, ZeroCycleVariant variant,
                                         unsigned base_dims) {
  if (!d.exponents) fail(ErrorCode::InvalidArgument, "0-cycle witnesses need a monomial modulus");
  if (d.r() != z.t.size()) fail(ErrorCode::InvalidArgument, "modulus and point disagree on r");
  if (z.field->is_extension() && !z.field->is_finite())
    fail(ErrorCode::NonRationalPoint, "points over " + z.field->spec_string() + " are not supported");
  if (variant == ZeroCycleVariant::Plain) base_dims = 0;
  FieldPtr base = z.field->prime_field();
  if (*d.divisor.field() != *base && *d.divisor.field() != *z.field)
    fail(ErrorCode::WrongField, "modulus over " + d.divisor.field()->spec_string());
  ModulusDatum dz{d.divisor.lift(z.field), d.exponents};
  if (dz.vanishes_at(z.t)) fail(ErrorCode::PointOnModulus, "the point lies on the modulus");
  for (const auto& y : z.y)
    if (y.is_zero() || y.is_one())
      fail(ErrorCode::NotAdmissible, "y-coordinate " + y.to_string() + " lies on a face or on the modulus locus");
  unsigned n = static_cast<unsigned>(z.y.size());
  Hyperbola h = hyperbola_through(z, base_dims, n == 0);
  h.curve.validate();
  Certificate c;
  bool finite_vanishing = n == 0 || (base->is_finite() && n >= 2);
  c.claim = Json{{"kind", "zero_cycle_vanishing"},
                 {"statement", n == 0 ? "[z] = dC" : "obstruction report"},
                 {"field", field_to_json(base)},
                 {"point", point_to_json(z, base)},
                 {"modulus", modulus_to_json(d)},
                 {"variant", variant_name(variant)},
                 {"base_dims", base_dims},
                 {"vanishing_claimed", finite_vanishing}};
  c.witnesses.push_back(Json{{"role", n == 0 ? "graph" : "hyperbola"}, {"curve", curve_to_json(h.curve)}});
  c.convention = convention_json(Model::Original, true, SignConvention::Native);
  c.transcript = zero_cycle_checks(base, z, d, h.curve, h.a, n);
  return c;
}

namespace {

[[noreturn]] void malformed(const std::string& msg) { fail(ErrorCode::MalformedCertificate, msg); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

const Json& witness(const Json& witnesses, const char* role, const char* key) {
  for (const auto& w : witnesses)
    if (w.is_object() && w.contains("role") && w.at("role") == role) return field_of(w, key);
  malformed(std::string("no witness with role \"") + role + "\"");
}

}  // namespace

bool verify_certificate(const Json& cert) {
  const Json& claim = field_of(cert, "claim");
  const Json& witnesses = field_of(cert, "witnesses");
  const Json& transcript = field_of(cert, "transcript");
  const Json& convention = field_of(cert, "convention");
  if (!witnesses.is_array() || !transcript.is_array() || !convention.is_object())
    malformed("witnesses and transcript must be arrays, convention an object");
  const Json& kind = field_of(claim, "kind");
  if (!kind.is_string()) malformed("claim kind must be a string");

  // Parse everything first: failures here are malformed input.
  std::function<Json()> recompute;
  try {
    SignConvention sign = SignConvention::Native;
    if (convention.contains("sign")) sign = convention.at("sign") == "reversed" ? SignConvention::Reversed : SignConvention::Native;
    bool level0 = convention.contains("level0_degeneracy") && convention.at("level0_degeneracy") == true;
    std::string k = kind.get<std::string>();
    if (k == "rho_reciprocity") {
      CycleInput w = cycle_from_json(witness(witnesses, "W", "cycle"));
      ModulusDatum d = modulus_from_json(field_of(claim, "modulus"), w.cycle.field(), w.cycle.r());
      ComplexOptions options{level0, sign};
      recompute = [w, d, options] { return rho_reciprocity_checks(w.cycle, d, options); };
    } else if (k == "bounding_surface") {
      CycleInput z = cycle_from_json(witness(witnesses, "Z", "cycle"));
      CycleInput w = cycle_from_json(witness(witnesses, "W", "cycle"));
      ModulusDatum d = modulus_from_json(field_of(claim, "modulus"), z.cycle.field(), z.cycle.r());
      recompute = [z, w, d, sign] { return bounding_checks(z.cycle, w.cycle, d, sign); };
    } else if (k == "generator") {
      CycleInput z = cycle_from_json(witness(witnesses, "Z_a", "cycle"));
      Element a = parse_element(field_of(claim, "a").get<std::string>(), z.cycle.field());
      ModulusDatum d = modulus_from_json(field_of(claim, "modulus"), z.cycle.field(), z.cycle.r());
      recompute = [z, a, d] { return generator_checks(z.cycle, a, d); };
    } else if (k == "zero_cycle_vanishing") {
      FieldPtr base = field_from_json(field_of(claim, "field"));
      ClosedPoint z = point_from_json(field_of(claim, "point"), base);
      ModulusDatum d = modulus_from_json(field_of(claim, "modulus"), base, static_cast<unsigned>(z.t.size()));
      unsigned base_dims = field_of(claim, "base_dims").get<unsigned>();
      unsigned n = static_cast<unsigned>(z.y.size());
      ParamCurve curve = curve_from_json(witness(witnesses, n == 0 ? "graph" : "hyperbola", "curve"));
      if (z.t.size() < base_dims + 2) malformed("base_dims leaves no room for the hyperbola");
      if (*curve.field != *z.field || curve.base.size() != z.t.size()) malformed("curve and point disagree");
      recompute = [base, z, d, curve, base_dims, n] { return zero_cycle_checks(base, z, d, curve, base_dims, n); };
    } else {
      malformed("unknown claim kind \"" + k + "\"");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedCertificate) throw;
    malformed(e.what());
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }

  try {
    Json fresh = recompute();
    return fresh == transcript && all_pass(fresh);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace chowmod
