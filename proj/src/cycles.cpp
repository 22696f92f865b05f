#include "chowmod/cycles.hpp"

#include <algorithm>
#include <cctype>

#include "chowmod/error.hpp"

namespace chowmod {

std::string model_name(Model m) { return m == Model::Original ? "ORIGINAL" : "PSI"; }

Model parse_model(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "original") return Model::Original;
  if (lower == "psi") return Model::Psi;
  fail(ErrorCode::InvalidArgument, "unknown model '" + std::string(text) + "'");
}

std::pair<FaceValue, FaceValue> face_values(Model m) {
  if (m == Model::Original) return {FaceValue::Infinity, FaceValue::Zero};
  return {FaceValue::Zero, FaceValue::One};
}

std::string face_value_name(FaceValue v) {
  switch (v) {
    case FaceValue::Zero: return "0";
    case FaceValue::One: return "1";
    case FaceValue::Infinity: return "inf";
  }
  return "?";
}

// ------------------------------------------------------------ ModulusDatum

ModulusDatum ModulusDatum::monomial(const FieldPtr& field, const std::vector<unsigned>& m) {
  if (m.empty()) fail(ErrorCode::InvalidArgument, "monomial modulus needs r >= 1");
  for (unsigned e : m)
    if (e == 0) fail(ErrorCode::InvalidArgument, "modulus exponents must be positive");
  VarSet vars{static_cast<unsigned>(m.size()), 0, false};
  Exponents e(m.begin(), m.end());
  return ModulusDatum{MultiPoly::monomial(field, vars, e, field->one()), m};
}

ModulusDatum ModulusDatum::general(const MultiPoly& divisor) {
  if (divisor.vars().n != 0 || divisor.vars().param)
    fail(ErrorCode::InvalidArgument, "modulus divisor must be a polynomial in t1..tr");
  if (divisor.is_constant()) fail(ErrorCode::InvalidArgument, "modulus divisor must be a nonunit");
  // Recognize monomials so that the exact criteria apply.
  if (divisor.num_terms() == 1) {
    const auto& [e, c] = *divisor.terms().begin();
    if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x > 0; }))
      return ModulusDatum{divisor * c.inverse(), std::vector<unsigned>(e.begin(), e.end())};
  }
  return ModulusDatum{divisor, std::nullopt};
}

bool ModulusDatum::is_reduced_monomial() const {
  return exponents && std::all_of(exponents->begin(), exponents->end(), [](unsigned x) { return x == 1; });
}

bool ModulusDatum::vanishes_at(const std::vector<Element>& t) const {
  if (t.size() != r()) fail(ErrorCode::InvalidArgument, "point has the wrong number of t-coordinates");
  return divisor.evaluate(t).is_zero();
}

// ------------------------------------------------------------ cycles

MultiPoly normalize_component(const MultiPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cycle component is the zero polynomial");
  Element c = f.constant_term();
  if (c.is_zero()) c = f.leading_coeff();
  if (c.is_one()) return f;
  return f * c.inverse();
}

HypersurfaceCycle::HypersurfaceCycle(FieldPtr field, unsigned r, unsigned n, Model model)
    : field_(std::move(field)), vars_{r, n, false}, model_(model) {}

void HypersurfaceCycle::add(const MultiPoly& f, long mult) {
  if (mult == 0) return;
  if (f.vars() != vars_) fail(ErrorCode::InvalidArgument, "component lives in the wrong variable set");
  if (*f.field() != *field_) fail(ErrorCode::WrongField, "component over the wrong field");
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cycle component is the zero polynomial");
  MultiPoly g = f;
  // In the ORIGINAL model the hyperplanes y_j = 1 are not in the cube.
  if (model_ == Model::Original) {
    for (unsigned j = 1; j <= vars_.n; ++j) {
      MultiPoly line = MultiPoly::variable(field_, vars_, vars_.y(j)) - MultiPoly::constant(field_, vars_, 1);
      while (!g.is_constant() && g.substitute({{vars_.y(j), field_->one()}}, true).is_zero()) g = g.exact_div(line);
    }
  }
  if (g.is_constant()) return;
  g = normalize_component(g);
  auto [it, inserted] = terms_.try_emplace(g, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

void HypersurfaceCycle::require_compatible(const HypersurfaceCycle& o) const {
  if (model_ != o.model_) fail(ErrorCode::WrongModel, "mixed-model cycle arithmetic");
  if (vars_ != o.vars_) fail(ErrorCode::InvalidArgument, "cycles live in different ambient spaces");
  if (*field_ != *o.field_) fail(ErrorCode::WrongField, "cycles over different fields");
}

HypersurfaceCycle& HypersurfaceCycle::operator+=(const HypersurfaceCycle& o) {
  require_compatible(o);
  for (const auto& [f, m] : o.terms_) add(f, m);
  return *this;
}

HypersurfaceCycle& HypersurfaceCycle::operator-=(const HypersurfaceCycle& o) {
  require_compatible(o);
  for (const auto& [f, m] : o.terms_) add(f, -m);
  return *this;
}

HypersurfaceCycle HypersurfaceCycle::scaled(long k) const {
  HypersurfaceCycle out(field_, vars_.r, vars_.n, model_);
  for (const auto& [f, m] : terms_) out.add(f, m * k);
  return out;
}

bool operator==(const HypersurfaceCycle& a, const HypersurfaceCycle& b) {
  return a.model_ == b.model_ && a.vars_ == b.vars_ && *a.field_ == *b.field_ && a.terms_ == b.terms_;
}

std::string HypersurfaceCycle::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [f, m] : terms_) {
    long a = m < 0 ? -m : m;
    if (out.empty())
      out = m < 0 ? "-" : "";
    else
      out += m < 0 ? " - " : " + ";
    if (a != 1) out += std::to_string(a) + "*";
    out += "V(" + f.to_string() + ")";
  }
  return out;
}

// ------------------------------------------------------------ faces

MultiPoly restrict_polynomial(const MultiPoly& f, unsigned i, FaceValue v) {
  const VarSet& vars = f.vars();
  if (i < 1 || i > vars.n) fail(ErrorCode::InvalidArgument, "face index out of range");
  std::size_t idx = vars.y(i);
  const FieldPtr& field = f.field();
  if (v == FaceValue::Infinity) {
    unsigned d = f.is_zero() ? 0 : f.degree_in(idx);
    return f.coefficient_of(idx, d).substitute({{idx, field->zero()}}, true);
  }
  Element value = v == FaceValue::Zero ? field->zero() : field->one();
  return f.substitute({{idx, value}}, true);
}

HypersurfaceCycle face_restrict(const HypersurfaceCycle& z, unsigned i, FaceValue v) {
  auto [a, b] = face_values(z.model());
  if (v != a && v != b)
    fail(ErrorCode::InvalidArgument, face_value_name(v) + " is not a face value of the " + model_name(z.model()) + " model");
  HypersurfaceCycle out(z.field(), z.r(), z.n() - 1, z.model());
  for (const auto& [f, m] : z.terms()) {
    MultiPoly g = restrict_polynomial(f, i, v);
    if (g.is_zero())
      fail(ErrorCode::ImproperFaceIntersection,
           "V(" + f.to_string() + ") contains the face y" + std::to_string(i) + " = " + face_value_name(v));
    out.add(g, m);
  }
  return out;
}

bool is_degenerate(const MultiPoly& f) {
  const VarSet& vars = f.vars();
  if (vars.n == 0) return false;
  for (unsigned i = 1; i <= vars.n; ++i)
    if (!f.depends_on(vars.y(i))) return true;
  return false;
}

HypersurfaceCycle boundary(const HypersurfaceCycle& z, const ComplexOptions& options) {
  if (z.n() == 0) fail(ErrorCode::WrongLevel, "boundary of a level-0 cycle");
  HypersurfaceCycle out(z.field(), z.r(), z.n() - 1, z.model());
  auto [a, b] = face_values(z.model());
  long global = options.sign == SignConvention::Reversed ? -1 : 1;
  for (const auto& [f, m] : z.terms()) {
    if (is_degenerate(f)) continue;
    for (unsigned i = 1; i <= z.n(); ++i) {
      long sign = (i % 2 == 0 ? 1 : -1) * global;
      for (auto [v, s] : {std::pair{a, sign}, std::pair{b, -sign}}) {
        MultiPoly g = restrict_polynomial(f, i, v);
        if (g.is_zero())
          fail(ErrorCode::ImproperFaceIntersection,
               "V(" + f.to_string() + ") contains the face y" + std::to_string(i) + " = " + face_value_name(v));
        out.add(g, s * m);
      }
    }
  }
  if (out.n() == 0) {
    if (options.level0_degeneracy) return HypersurfaceCycle(z.field(), z.r(), 0, z.model());
    return out;
  }
  HypersurfaceCycle cleaned(z.field(), z.r(), out.n(), z.model());
  for (const auto& [g, m] : out.terms())
    if (!is_degenerate(g)) cleaned.add(g, m);
  return cleaned;
}

std::string Face::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) continue;
    if (!out.empty()) out += ",";
    out += "y" + std::to_string(i + 1) + "=" + face_value_name(*values[i]);
  }
  return "{" + out + "}";
}

namespace {

MultiPoly restrict_to_face(const MultiPoly& f, const Face& face) {
  const VarSet& vars = f.vars();
  const FieldPtr& field = f.field();
  // Multi-homogeneous restriction: at infinity keep the top-degree terms.
  std::vector<unsigned> top(vars.n, 0);
  for (unsigned i = 0; i < vars.n; ++i)
    if (face.values[i] == FaceValue::Infinity) top[i] = f.degree_in(vars.y(i + 1));
  MultiPoly filtered(field, vars);
  for (const auto& [e, c] : f.terms()) {
    bool keep = true;
    for (unsigned i = 0; i < vars.n && keep; ++i)
      if (face.values[i] == FaceValue::Infinity && e[vars.y(i + 1)] != top[i]) keep = false;
    if (keep) filtered += MultiPoly::monomial(field, vars, e, c);
  }
  std::map<std::size_t, Element> assign;
  for (unsigned i = 0; i < vars.n; ++i) {
    if (!face.values[i]) continue;
    switch (*face.values[i]) {
      case FaceValue::Zero: assign.emplace(vars.y(i + 1), field->zero()); break;
      // Only top-degree terms remain, so y = 1 just strips the power.
      case FaceValue::Infinity:
      case FaceValue::One: assign.emplace(vars.y(i + 1), field->one()); break;
    }
  }
  return filtered.substitute(assign, true);
}

}  // namespace

FaceReport check_face_condition(const HypersurfaceCycle& z) {
  FaceReport report;
  unsigned n = z.n();
  if (n == 0) return report;
  auto [a, b] = face_values(z.model());
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    Face face;
    face.values.resize(n);
    std::size_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      unsigned digit = static_cast<unsigned>(c % 3);
      c /= 3;
      if (digit == 1) face.values[i] = a;
      if (digit == 2) face.values[i] = b;
    }
    for (const auto& [f, m] : z.terms()) {
      (void)m;
      if (restrict_to_face(f, face).is_zero()) {
        report.pass = false;
        report.violations.push_back(face);
        break;
      }
    }
  }
  return report;
}

// ------------------------------------------------------------ modulus

std::string verdict_name(ModulusVerdict v) {
  switch (v) {
    case ModulusVerdict::Certified: return "Certified";
    case ModulusVerdict::ViolatesNecessary: return "ViolatesNecessary";
    case ModulusVerdict::Unknown: return "Unknown";
  }
  return "?";
}

ModulusVerdict modulus_verdict(const MultiPoly& f, const ModulusDatum& d) {
  const VarSet& vars = f.vars();
  if (d.r() != vars.r) fail(ErrorCode::InvalidArgument, "modulus and cycle disagree on r");
  Element c = f.constant_term();
  if (c.is_zero()) fail(ErrorCode::ConstantTermZero, "V(" + f.to_string() + ") has constant term 0");
  MultiPoly g = c.is_one() ? f : f * c.inverse();
  for (unsigned i = 1; i <= vars.n; ++i)
    if (g.degree_in(vars.y(i)) >= 2) return ModulusVerdict::ViolatesNecessary;
  std::vector<std::size_t> map(vars.r);
  for (unsigned i = 0; i < vars.r; ++i) map[i] = i;
  MultiPoly divisor = d.divisor.lift(f.field()).with_vars(vars, map);
  MultiPoly fm1 = g - MultiPoly::constant(f.field(), vars, 1);
  if (fm1.divisible_by(divisor)) return ModulusVerdict::Certified;
  if (d.is_reduced_monomial()) return ModulusVerdict::ViolatesNecessary;
  return ModulusVerdict::Unknown;
}

ModulusReport check_modulus_codim1(const HypersurfaceCycle& z, const ModulusDatum& d) {
  if (z.model() != Model::Psi) fail(ErrorCode::WrongModel, "codimension-1 modulus check needs the PSI model");
  ModulusReport report;
  bool violates = false, unknown = false;
  for (const auto& [f, m] : z.terms()) {
    (void)m;
    ModulusVerdict v = modulus_verdict(f, d);
    report.components.push_back(v);
    violates |= v == ModulusVerdict::ViolatesNecessary;
    unknown |= v == ModulusVerdict::Unknown;
  }
  report.verdict = violates  ? ModulusVerdict::ViolatesNecessary
                   : unknown ? ModulusVerdict::Unknown
                             : ModulusVerdict::Certified;
  return report;
}

// ------------------------------------------------------------ conversion

MultiPoly convert_polynomial(const MultiPoly& f, Model from, Model to) {
  if (from == to) return f;
  const VarSet& vars = f.vars();
  const FieldPtr& field = f.field();
  MultiPoly cur = f;
  for (unsigned i = 1; i <= vars.n; ++i) {
    std::size_t idx = vars.y(i);
    MultiPoly y = MultiPoly::variable(field, vars, idx);
    MultiPoly one = MultiPoly::constant(field, vars, 1);
    if (from == Model::Original) {
      MultiPoly ym1 = y - one;
      while (!cur.is_constant() && cur.divisible_by(ym1)) cur = cur.exact_div(ym1);
    }
    unsigned d = cur.degree_in(idx);
    if (d == 0) continue;
    MultiPoly out(field, vars);
    for (unsigned k = 0; k <= d; ++k) {
      MultiPoly ck = cur.coefficient_of(idx, k);
      if (ck.is_zero()) continue;
      if (from == Model::Original)
        out += ck * (y - one).pow(k) * y.pow(d - k);
      else
        out += ck * (one - y).pow(d - k);
    }
    cur = std::move(out);
  }
  return cur;
}

HypersurfaceCycle psi_convert(const HypersurfaceCycle& z, Model target) {
  HypersurfaceCycle out(z.field(), z.r(), z.n(), target);
  for (const auto& [f, m] : z.terms()) out.add(convert_polynomial(f, z.model(), target), m);
  return out;
}

}  // namespace chowmod
