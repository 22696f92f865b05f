#include "chowmod/suite.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chowmod {

namespace {

FieldPtr rotating_field(std::size_t index) {
  switch (index % 3) {
    case 0: return Field::prime(5);
    case 1: return Field::prime(7);
    default: return Field::rationals();
  }
}

FieldPtr finite_field(std::size_t index) { return index % 2 == 0 ? Field::prime(5) : Field::prime(7); }

InstanceOutcome ok() { return {}; }
InstanceOutcome bad(std::string detail) { return {false, std::move(detail)}; }

ModulusDatum reduced_modulus(const FieldPtr& field, unsigned r) {
  return ModulusDatum::monomial(field, std::vector<unsigned>(r, 1));
}

HypersurfaceCycle mutated_boundary(const HypersurfaceCycle& z, const ComplexOptions& options) {
  auto [a, b] = face_values(z.model());
  HypersurfaceCycle out(z.field(), z.r(), z.n() - 1, z.model());
  long global = options.sign == SignConvention::Reversed ? -1 : 1;
  for (unsigned i = 1; i <= z.n(); ++i) {
    long sign = (i % 2 == 0 ? 1 : -1) * global * (i == z.n() ? -1 : 1);
    out += face_restrict(z, i, a).scaled(sign);
    out -= face_restrict(z, i, b).scaled(sign);
  }
  if (out.n() == 0) return out;
  HypersurfaceCycle cleaned(z.field(), z.r(), out.n(), z.model());
  for (const auto& [g, m] : out.terms())
    if (!is_degenerate(g)) cleaned.add(g, m);
  return cleaned;
}

HypersurfaceCycle d(const HypersurfaceCycle& z, const ComplexOptions& o, const SuiteOptions& s) {
  return s.mutation == Mutation::BoundarySignFlip ? mutated_boundary(z, o) : boundary(z, o);
}

InstanceOutcome boundary_squared(Rng& rng, std::size_t i, const SuiteOptions& s) {
  FieldPtr field = rotating_field(i);
  unsigned n = 2 + static_cast<unsigned>((i / 3) % 2);
  HypersurfaceCycle z = random_admissible_cycle(rng, field, 2, n);
  for (SignConvention sign : {SignConvention::Native, SignConvention::Reversed}) {
    ComplexOptions o{false, sign};
    for (const HypersurfaceCycle& c : {z, psi_convert(z, Model::Original)}) {
      HypersurfaceCycle dd = d(d(c, o, s), o, s);
      if (!dd.is_zero()) return bad(model_name(c.model()) + ": dd = " + dd.to_string());
    }
  }
  return ok();
}

InstanceOutcome face_containment(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  unsigned n = 2 + static_cast<unsigned>((i / 3) % 2);
  unsigned r = 2 + static_cast<unsigned>((i / 6) % 2);
  HypersurfaceCycle z = random_admissible_cycle(rng, field, r, n);
  ModulusDatum dm = reduced_modulus(field, r);
  if (!check_face_condition(z).pass) return bad("input fails the face condition");
  if (check_modulus_codim1(z, dm).verdict != ModulusVerdict::Certified) return bad("input modulus not certified");
  HypersurfaceCycle zo = psi_convert(z, Model::Original);
  if (!check_face_condition(zo).pass) return bad("ORIGINAL form fails the face condition");
  for (unsigned k = 1; k <= n; ++k)
    for (FaceValue v : {FaceValue::Zero, FaceValue::One}) {
      HypersurfaceCycle f = face_restrict(z, k, v);
      if (!check_face_condition(f).pass) return bad("face fails the face condition");
      if (check_modulus_codim1(f, dm).verdict != ModulusVerdict::Certified) return bad("face modulus not certified");
    }
  for (unsigned k = 1; k <= n; ++k)
    for (FaceValue v : {FaceValue::Zero, FaceValue::Infinity})
      if (!check_face_condition(face_restrict(zo, k, v)).pass) return bad("ORIGINAL face fails the face condition");
  return ok();
}

InstanceOutcome rho_reciprocity(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  HypersurfaceCycle w = random_reciprocity_cycle(rng, field, (i / 3) % 2 == 1);
  ModulusDatum dm = reduced_modulus(field, 2);
  for (SignConvention sign : {SignConvention::Native, SignConvention::Reversed}) {
    Certificate c = verify_rho_reciprocity(w, dm, ComplexOptions{true, sign});
    if (!c.valid()) return bad("certificate invalid: " + c.transcript.dump());
    if (!verify_certificate(c.to_json())) return bad("re-verification failed");
  }
  return ok();
}

std::size_t generator_finite_count() { return (5 + 7 + 11) * 2; }

InstanceOutcome rho_generator(Rng& rng, std::size_t i, const SuiteOptions&) {
  Element a;
  unsigned r = 2;
  if (i < generator_finite_count()) {
    r = 2 + static_cast<unsigned>(i % 2);
    std::size_t k = i / 2;
    std::uint64_t p = k < 5 ? 5 : k < 12 ? 7 : 11;
    std::size_t offset = k < 5 ? 0 : k < 12 ? 5 : 12;
    a = Field::prime(p)->element_at(k - offset);
  } else {
    r = 2 + static_cast<unsigned>(i % 2);
    a = random_element(rng, Field::rationals());
  }
  GeneratorResult g = generator_cycle(a, r);
  Element value = rho(g.cycle);
  if (value != a) return bad("rho = " + value.to_string() + ", a = " + a.to_string());
  if (!g.certificate.valid()) return bad("certificate invalid");
  if (!verify_certificate(g.certificate.to_json())) return bad("re-verification failed");
  return ok();
}

InstanceOutcome rho_linearity(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  HypersurfaceCycle z1 = random_admissible_cycle(rng, field, 2, 1);
  HypersurfaceCycle z2 = random_admissible_cycle(rng, field, 2, 1);
  long k = rng.range(-3, 3);
  Element lhs = rho(z1.scaled(k) + z2);
  Element rhs = rho(z1) * field->from_int(k) + rho(z2);
  if (lhs != rhs) return bad("rho is not linear");
  VarSet vars{2, 1, false};
  MultiPoly deg = MultiPoly::constant(field, vars, 1) -
                  MultiPoly::variable(field, vars, vars.t(1)) * MultiPoly::variable(field, vars, vars.t(2)) *
                      random_nonzero(rng, field);
  HypersurfaceCycle zd(field, 2, 1, Model::Psi);
  zd.add(deg);
  if (!rho(zd).is_zero()) return bad("rho of a degenerate cycle is nonzero");
  return ok();
}

InstanceOutcome bounding(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  unsigned r = 2 + static_cast<unsigned>((i / 3) % 2);
  HypersurfaceCycle z = random_level0_cycle(rng, field, r);
  Certificate c = bounding_surface(z, reduced_modulus(field, r));
  if (!c.valid()) return bad("certificate invalid: " + c.transcript.dump());
  if (!verify_certificate(c.to_json())) return bad("re-verification failed");
  return ok();
}

InstanceOutcome degree_bound(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  unsigned r = 2 + static_cast<unsigned>((i / 3) % 2);
  unsigned n = 1 + static_cast<unsigned>((i / 6) % 2);
  DegreePair pair = random_degree_pair(rng, field, r, n);
  ModulusDatum dm = reduced_modulus(field, r);
  HypersurfaceCycle zv(field, r, n, Model::Psi), zr(field, r, n, Model::Psi);
  zv.add(pair.violator);
  zr.add(pair.reduced);
  if (check_modulus_codim1(zv, dm).verdict != ModulusVerdict::ViolatesNecessary)
    return bad("degree-2 cycle not rejected: " + pair.violator.to_string());
  if (check_modulus_codim1(zr, dm).verdict != ModulusVerdict::Certified)
    return bad("reduced counterpart not certified: " + pair.reduced.to_string());
  return ok();
}

InstanceOutcome zero_cycle_n0(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  unsigned r = 2 + static_cast<unsigned>((i / 3) % 2);
  PointOffModulus pm = random_point_off_modulus(rng, field, r, 0, 3);
  Certificate c = zero_cycle_vanishing_witness(pm.point, pm.modulus);
  if (!c.valid()) return bad("certificate invalid: " + c.transcript.dump());
  if (!verify_certificate(c.to_json())) return bad("re-verification failed");
  return ok();
}

const std::vector<unsigned> kPrimePowers = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

InstanceOutcome k2_steinberg(Rng&, std::size_t i, const SuiteOptions&) {
  unsigned q = kPrimePowers[i % kPrimePowers.size()];
  K2Result k2 = k2_presentation_oracle(q);
  if (!k2.invariants.empty()) return bad("K2(F_" + std::to_string(q) + ") nontrivial");
  return ok();
}

// Residues by direct evaluation at the root, independent of residue_value.
Element value_at_root(const RatFunc& f, const Place& v) {
  Element root = v.root();
  return f.num().eval(root) / f.den().eval(root);
}

InstanceOutcome tame_formula(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = finite_field(i);
  std::vector<UPoly> pool = factor_pool(field);
  std::size_t pi_index = rng.below(rng.coin() ? static_cast<std::size_t>(field->order().get_ui()) : pool.size());
  UPoly pi = pool[pi_index];
  pool.erase(pool.begin() + static_cast<long>(pi_index));
  Place v = Place::finite(pi);
  unsigned n = static_cast<unsigned>(rng.range(1, 3));
  std::vector<RatFunc> units;
  for (unsigned k = 0; k <= n; ++k) {
    std::vector<UPoly> fs;
    long count = rng.range(0, 2);
    for (long j = 0; j < count; ++j) fs.push_back(pool[rng.below(pool.size())]);
    units.push_back(fs.empty() ? RatFunc::constant(random_nonzero(rng, field)) : random_ratfunc_from(rng, fs));
  }
  long r = rng.range(-3, 3);
  std::vector<RatFunc> entries(units.begin(), units.begin() + n);
  entries.push_back(units[n] * RatFunc(pi).pow(r));
  FieldPtr k = v.residue_field();
  std::vector<Element> residues;
  for (unsigned j = 0; j < n; ++j) residues.push_back(value_at_root(entries[j], v));
  MilnorElement expected(k, n);
  expected.add(residues, r);
  MilnorElement got = tame_symbol(v, make_function_symbol(field, entries));
  if (got != expected) return bad("d{f, u pi^r} = " + got.to_string() + ", expected " + expected.to_string());
  // All units: zero. Uniformizer first: sign (-1)^(n) moving it to the end.
  if (!tame_symbol(v, make_function_symbol(field, units)).is_zero()) return bad("d of units is nonzero");
  std::vector<RatFunc> first{RatFunc(pi)};
  first.insert(first.end(), units.begin(), units.begin() + n);
  std::vector<Element> ures;
  for (unsigned j = 0; j < n; ++j) ures.push_back(value_at_root(units[j], v));
  MilnorElement pe(k, n);
  pe.add(ures, n % 2 == 0 ? 1 : -1);
  if (tame_symbol(v, make_function_symbol(field, first)) != pe) return bad("d{pi, u...} has the wrong sign");
  return ok();
}

InstanceOutcome weil(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = finite_field(i);
  RatFunc f = random_ratfunc(rng, field, 3), g = random_ratfunc(rng, field, 3);
  Element w = weil_product(f, g);
  if (!w.is_one()) return bad("prod N d_v{f, g} = " + w.to_string() + " for " + f.to_string() + ", " + g.to_string());
  return ok();
}

std::vector<Element> random_base_point(Rng& rng, const FieldPtr& field) {
  std::vector<Element> x;
  long r = rng.range(0, 2);
  for (long k = 0; k < r; ++k) x.push_back(random_element(rng, field));
  return x;
}

InstanceOutcome totaro_steinberg(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  Element f1 = random_unit_not_one(rng, field);
  std::vector<Element> rest;
  long extra = rng.range(0, 2);
  for (long k = 0; k < extra; ++k) rest.push_back(random_unit_not_one(rng, field));
  CurveCheck c = verify_steinberg_curve(field, random_base_point(rng, field), f1, rest);
  return c.ok ? ok() : bad(c.detail);
}

InstanceOutcome totaro_mult(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  Element f = random_unit_not_one(rng, field);
  Element g = i % 5 == 0 ? f.inverse() : random_nonzero(rng, field);
  CurveCheck c = verify_mult_curve(field, random_base_point(rng, field), f, g);
  return c.ok ? ok() : bad(c.detail);
}

// n + 1 rational functions with pairwise disjoint supports drawn from the pool.
std::vector<RatFunc> disjoint_functions(Rng& rng, std::vector<UPoly>& pool, unsigned count, bool allow_constant) {
  std::vector<RatFunc> out;
  const FieldPtr& field = pool.front().field();
  for (unsigned k = 0; k < count; ++k) {
    long nf = rng.range(allow_constant ? 0 : 1, 2);
    std::vector<UPoly> fs;
    for (long j = 0; j < nf && !pool.empty(); ++j) {
      std::size_t idx = rng.below(pool.size());
      fs.push_back(pool[idx]);
      pool.erase(pool.begin() + static_cast<long>(idx));
    }
    out.push_back(fs.empty() ? RatFunc::constant(random_unit_not_one(rng, field)) : random_ratfunc_from(rng, fs));
  }
  return out;
}

InstanceOutcome xi_identity(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  std::vector<UPoly> pool = factor_pool(field);
  // Linear pi.
  std::size_t linear = field->is_finite() ? static_cast<std::size_t>(field->order().get_ui()) : pool.size();
  std::size_t pi_index = rng.below(linear);
  UPoly pi = pool[pi_index];
  pool.erase(pool.begin() + static_cast<long>(pi_index));
  unsigned n = static_cast<unsigned>(rng.range(1, 2));
  std::vector<RatFunc> f = disjoint_functions(rng, pool, n, false);
  RatFunc u = disjoint_functions(rng, pool, 1, true)[0];
  int r = static_cast<int>(rng.range(1, 3)) * (rng.coin() ? 1 : -1);
  CurveCheck c = verify_xi_curve(f, u, pi, r);
  return c.ok ? ok() : bad(c.detail);
}

InstanceOutcome commuting_square(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  std::vector<UPoly> pool = factor_pool(field);
  unsigned comps = 2 + static_cast<unsigned>(rng.below(2));
  ParamCurve c{field, Model::Original, {RatFunc::param(field)}, disjoint_functions(rng, pool, comps, false)};
  SquareCheck sq = verify_commuting_square(c);
  if (!sq.ok) return bad("square does not commute for " + c.to_string());
  ParamCurve flat{field, Model::Original, {RatFunc::constant(random_element(rng, field))}, c.components};
  if (!theta_map(flat).is_zero()) return bad("theta of a curve over a point is nonzero");
  return ok();
}

InstanceOutcome phi_psi(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = i % 2 == 0 ? Field::prime(7) : Field::rationals();
  unsigned r = static_cast<unsigned>(rng.range(1, 2));
  unsigned n = static_cast<unsigned>(rng.range(1, 3));
  ClosedPoint x{field, {}, {}};
  for (unsigned k = 0; k < r; ++k) x.t.push_back(random_element(rng, field));
  std::vector<Element> entries;
  for (unsigned k = 0; k < n; ++k) entries.push_back(random_nonzero(rng, field));
  MilnorElement s = make_symbol(field, entries);
  ZeroCycle z = psi_map(x, s);
  bool has_one = std::any_of(entries.begin(), entries.end(), [](const Element& e) { return e.is_one(); });
  if (has_one != z.is_zero()) return bad("psi kills the wrong symbols");
  auto phi = phi_map(z);
  if (has_one) return phi.empty() ? ok() : bad("phi of the empty cycle is nonzero");
  if (phi.size() != 1 || !(phi.begin()->first == x) || phi.begin()->second != s) return bad("phi(psi(s)) != s");
  return ok();
}

InstanceOutcome convert_boundary(Rng& rng, std::size_t i, const SuiteOptions& s) {
  FieldPtr field = rotating_field(i);
  unsigned n = 1 + static_cast<unsigned>((i / 3) % 3);
  HypersurfaceCycle z = random_admissible_cycle(rng, field, 2, n);
  ComplexOptions o{false, SignConvention::Native};
  HypersurfaceCycle lhs = psi_convert(d(z, o, s), Model::Original);
  HypersurfaceCycle rhs = d(psi_convert(z, Model::Original), o, s);
  if (lhs != rhs) return bad("convert(d z) = " + lhs.to_string() + ", d(convert z) = " + rhs.to_string());
  return ok();
}

InstanceOutcome pushforward_functoriality(Rng& rng, std::size_t i, const SuiteOptions&) {
  FieldPtr field = rotating_field(i);
  VarSet v1{1, 0, false}, v2{2, 0, false};
  Embedding g{field, 1, {MultiPoly::variable(field, v1, 0), random_t_poly(rng, field, v1, 2)}};
  Embedding f{field, 2,
              {MultiPoly::variable(field, v2, 0), MultiPoly::variable(field, v2, 1), random_t_poly(rng, field, v2, 2)}};
  ZeroCycle z(field, 1, 1, Model::Original);
  long pts = rng.range(1, 3);
  for (long k = 0; k < pts; ++k)
    z.add(ClosedPoint{field, {random_element(rng, field)}, {random_unit_not_one(rng, field)}}, rng.range(1, 2));
  ZeroCycle lhs = pushforward(z, g.then(f));
  ZeroCycle rhs = pushforward(pushforward(z, g), f);
  if (lhs != rhs) return bad("(f g)_* != f_* g_*");
  return ok();
}

std::vector<PropertySuite> build() {
  std::vector<PropertySuite> s = {
      {"boundary_squared", 200, boundary_squared},
      {"bounding_surface", 200, bounding},
      {"commuting_square", 50, commuting_square},
      {"convert_boundary", 100, convert_boundary},
      {"degree_bound", 100, degree_bound},
      {"face_containment", 200, face_containment},
      {"k2_steinberg", kPrimePowers.size(), k2_steinberg},
      {"phi_psi_roundtrip", 100, phi_psi},
      {"pushforward_functoriality", 100, pushforward_functoriality},
      {"rho_generator", generator_finite_count() + 100, rho_generator},
      {"rho_linearity", 100, rho_linearity},
      {"rho_reciprocity", 300, rho_reciprocity},
      {"tame_formula", 100, tame_formula},
      {"totaro_mult", 50, totaro_mult},
      {"totaro_steinberg", 50, totaro_steinberg},
      {"weil_reciprocity", 100, weil},
      {"xi_identity", 50, xi_identity},
      {"zero_cycle_n0", 200, zero_cycle_n0},
  };
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return s;
}

InstanceOutcome run_one(const PropertySuite& suite, std::size_t index, const SuiteOptions& options) {
  Rng rng(derive_seed(options.seed, suite.name, index));
  try {
    return suite.run(rng, index, options);
  } catch (const Error& e) {
    return bad(e.what());
  }
}

std::vector<const PropertySuite*> selected(const std::vector<std::string>& only) {
  std::vector<const PropertySuite*> out;
  for (const auto& s : property_suites())
    if (only.empty() || std::find(only.begin(), only.end(), s.name) != only.end()) out.push_back(&s);
  for (const auto& name : only)
    if (std::none_of(out.begin(), out.end(), [&](const PropertySuite* s) { return s->name == name; }))
      fail(ErrorCode::InvalidArgument, "unknown suite \"" + name + "\"");
  return out;
}

std::size_t size_of(const PropertySuite& s, const SuiteOptions& options) {
  auto it = options.sizes.find(s.name);
  return it == options.sizes.end() ? s.default_size : it->second;
}

SuiteResult summarize(const PropertySuite& s, const std::vector<InstanceOutcome>& outcomes) {
  SuiteResult r;
  r.name = s.name;
  r.total = outcomes.size();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k].pass)
      ++r.passed;
    else if (!r.first_failure)
      r.first_failure = std::make_pair(k, outcomes[k].detail);
  }
  return r;
}

}  // namespace

const std::vector<PropertySuite>& property_suites() {
  static const std::vector<PropertySuite> suites = build();
  return suites;
}

bool SuiteReport::all_pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed == s.total; });
}

Json SuiteReport::to_json() const {
  Json arr = Json::array();
  for (const auto& s : suites) {
    Json j{{"name", s.name}, {"passed", s.passed}, {"total", s.total}, {"status", s.passed == s.total ? "pass" : "fail"}};
    if (s.first_failure) j["first_failure"] = Json{{"index", s.first_failure->first}, {"detail", s.first_failure->second}};
    arr.push_back(j);
  }
  return Json{{"seed", seed}, {"suites", arr}, {"all_pass", all_pass()}};
}

SuiteReport run_suites(const SuiteOptions& options, const std::vector<std::string>& only) {
  SuiteReport report;
  report.seed = options.seed;
  auto suites = selected(only);
  // Flatten (suite, index) so that small suites do not serialize the run.
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  std::vector<std::vector<InstanceOutcome>> outcomes(suites.size());
  for (std::size_t s = 0; s < suites.size(); ++s) {
    outcomes[s].resize(size_of(*suites[s], options));
    for (std::size_t k = 0; k < outcomes[s].size(); ++k) jobs.emplace_back(s, k);
  }
  const auto njobs = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < njobs; ++j) {
    auto [s, k] = jobs[static_cast<std::size_t>(j)];
    outcomes[s][k] = run_one(*suites[s], k, options);
  }
  for (std::size_t s = 0; s < suites.size(); ++s) report.suites.push_back(summarize(*suites[s], outcomes[s]));
  return report;
}

SuiteReport run_suites_serial(const SuiteOptions& options, const std::vector<std::string>& only) {
  SuiteReport report;
  report.seed = options.seed;
  for (const PropertySuite* s : selected(only)) {
    std::vector<InstanceOutcome> outcomes(size_of(*s, options));
    for (std::size_t k = 0; k < outcomes.size(); ++k) outcomes[k] = run_one(*s, k, options);
    report.suites.push_back(summarize(*s, outcomes));
  }
  return report;
}

}  // namespace chowmod
