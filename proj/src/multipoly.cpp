#include "chowmod/multipoly.hpp"

#include <algorithm>

#include "chowmod/error.hpp"

namespace chowmod {

std::string VarSet::name(std::size_t idx) const {
  if (idx < r) return "t" + std::to_string(idx + 1);
  if (idx < r + n) return "y" + std::to_string(idx - r + 1);
  if (param && idx == r + n) return "u";
  fail(ErrorCode::UnknownVariable, "variable index " + std::to_string(idx) + " out of range");
}

std::size_t VarSet::index_of(std::string_view nm) const {
  if (nm == "u") return param ? u() : size();
  if (nm.size() < 2 || (nm[0] != 't' && nm[0] != 'y')) return size();
  unsigned long i = 0;
  for (char ch : nm.substr(1)) {
    if (ch < '0' || ch > '9') return size();
    i = i * 10 + static_cast<unsigned long>(ch - '0');
    if (i > 1000000) return size();
  }
  if (nm[0] == 't') return (i >= 1 && i <= r) ? t(static_cast<unsigned>(i)) : size();
  return (i >= 1 && i <= n) ? y(static_cast<unsigned>(i)) : size();
}

MultiPoly::MultiPoly(FieldPtr field, VarSet vars) : field_(std::move(field)), vars_(vars) {}

MultiPoly MultiPoly::constant(const FieldPtr& field, const VarSet& vars, const Element& c) {
  MultiPoly p(field, vars);
  p.add_term(Exponents(vars.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::constant(const FieldPtr& field, const VarSet& vars, long c) {
  return constant(field, vars, field->from_int(c));
}

MultiPoly MultiPoly::variable(const FieldPtr& field, const VarSet& vars, std::size_t idx) {
  if (idx >= vars.size()) fail(ErrorCode::UnknownVariable, "variable index out of range");
  Exponents e(vars.size(), 0);
  e[idx] = 1;
  return monomial(field, vars, std::move(e), field->one());
}

MultiPoly MultiPoly::monomial(const FieldPtr& field, const VarSet& vars, Exponents e, const Element& c) {
  MultiPoly p(field, vars);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::from_upoly(const UPoly& p, const VarSet& vars, std::size_t idx) {
  MultiPoly out(p.field(), vars);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    Exponents e(vars.size(), 0);
    e[idx] = static_cast<unsigned>(k);
    out.add_term(e, p.coeffs()[k]);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Element& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) fail(ErrorCode::InvalidArgument, "polynomials live in different variable sets");
  if (field_ != o.field_ && *field_ != *o.field_)
    fail(ErrorCode::WrongField, "polynomials over " + field_->spec_string() + " and " + o.field_->spec_string());
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Element MultiPoly::constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

Element MultiPoly::leading_coeff() const {
  if (terms_.empty()) return field_->zero();
  return terms_.rbegin()->second;
}

Element MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_->zero() : it->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly r(a.field_, a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Element& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_, vars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

bool exponent_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

MultiPoly MultiPoly::exact_div(const MultiPoly& g) const {
  require_compatible(g);
  if (g.is_zero()) fail(ErrorCode::ZeroDivisor, "division by the zero polynomial");
  MultiPoly q(field_, vars_);
  MultiPoly rem = *this;
  const auto& [lg_e, lg_c] = *g.terms_.rbegin();
  Element lg_inv = lg_c.inverse();
  while (!rem.is_zero()) {
    const auto& [lr_e, lr_c] = *rem.terms_.rbegin();
    if (!exponent_divides(lg_e, lr_e))
      fail(ErrorCode::InexactDivision, "(" + to_string() + ") is not divisible by (" + g.to_string() + ")");
    Exponents e(lr_e.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = lr_e[i] - lg_e[i];
    MultiPoly mono = monomial(field_, vars_, e, lr_c * lg_inv);
    rem -= mono * g;
    q += mono;
  }
  return q;
}

bool MultiPoly::divisible_by(const MultiPoly& g) const {
  try {
    exact_div(g);
    return true;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::InexactDivision) return false;
    throw;
  }
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, Element>& assignment, bool shrink) const {
  for (const auto& [idx, v] : assignment) {
    if (idx >= vars_.size()) fail(ErrorCode::UnknownVariable, "substitution for an unknown variable");
    if (*v.field() != *field_) fail(ErrorCode::WrongField, "substituted value lives in another field");
  }
  VarSet target = vars_;
  std::vector<std::size_t> keep;
  if (shrink) {
    target = VarSet{0, 0, false};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (assignment.count(i)) continue;
      keep.push_back(i);
      if (vars_.is_t(i))
        ++target.r;
      else if (vars_.is_y(i))
        ++target.n;
      else
        target.param = true;
    }
  }
  MultiPoly out(field_, target);
  for (const auto& [e, c] : terms_) {
    Element coeff = c;
    Exponents ne = e;
    for (const auto& [idx, v] : assignment) {
      if (e[idx] == 0) continue;
      coeff *= v.pow(static_cast<long>(e[idx]));
      ne[idx] = 0;
    }
    if (shrink) {
      Exponents se;
      se.reserve(keep.size());
      for (std::size_t i : keep) se.push_back(ne[i]);
      out.add_term(se, coeff);
    } else {
      out.add_term(ne, coeff);
    }
  }
  return out;
}

MultiPoly MultiPoly::compose(std::size_t idx, const MultiPoly& value) const {
  require_compatible(value);
  if (idx >= vars_.size()) fail(ErrorCode::UnknownVariable, "composition in an unknown variable");
  MultiPoly out(field_, vars_);
  if (is_zero()) return out;
  unsigned d = degree_in(idx);
  std::vector<MultiPoly> powers{constant(field_, vars_, 1)};
  for (unsigned k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[idx] = 0;
    out += monomial(field_, vars_, ne, c) * powers[e[idx]];
  }
  return out;
}

Element MultiPoly::evaluate(const std::vector<Element>& point) const {
  if (point.size() != vars_.size()) fail(ErrorCode::InvalidArgument, "evaluation point has the wrong length");
  FieldPtr target = point.empty() ? field_ : point.front().field();
  Element acc = target->zero();
  for (const auto& [e, c] : terms_) {
    Element term = *target == *field_ ? c : c.lift(target);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term *= point[i].pow(static_cast<long>(e[i]));
    acc += term;
  }
  return acc;
}

unsigned MultiPoly::degree_in(std::size_t idx) const {
  if (idx >= vars_.size()) fail(ErrorCode::UnknownVariable, "degree in an unknown variable");
  if (is_zero()) fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  if (is_zero()) fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::coefficient_of(std::size_t idx, unsigned exponent) const {
  if (idx >= vars_.size()) fail(ErrorCode::UnknownVariable, "coefficient in an unknown variable");
  MultiPoly out(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != exponent) continue;
    Exponents ne = e;
    ne[idx] = 0;
    out.add_term(ne, c);
  }
  return out;
}

bool MultiPoly::depends_on(std::size_t idx) const {
  for (const auto& [e, c] : terms_)
    if (e[idx] > 0) return true;
  return false;
}

MultiPoly MultiPoly::with_vars(const VarSet& target, const std::vector<std::size_t>& map) const {
  if (map.size() != vars_.size()) fail(ErrorCode::InvalidArgument, "variable map has the wrong length");
  MultiPoly out(field_, target);
  for (const auto& [e, c] : terms_) {
    Exponents ne(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] >= target.size()) fail(ErrorCode::UnknownVariable, "variable map points outside the target");
      ne[map[i]] += e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

MultiPoly MultiPoly::lift(const FieldPtr& target) const {
  if (*target == *field_) return *this;
  MultiPoly out(target, vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.lift(target));
  return out;
}

UPoly MultiPoly::to_upoly(std::size_t idx) const {
  std::vector<Element> c;
  for (const auto& [e, v] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != idx && e[i] > 0)
        fail(ErrorCode::InvalidArgument, "polynomial is not univariate in " + vars_.name(idx));
    if (c.size() <= e[idx]) c.resize(e[idx] + 1, field_->zero());
    c[e[idx]] = v;
  }
  return UPoly(field_, std::move(c));
}

std::string MultiPoly::to_string() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      unsigned k = it->first[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_.name(i);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    append_term(out, it->second, mono);
  }
  return out.empty() ? "0" : out;
}

int MultiPoly::compare(const MultiPoly& o) const {
  auto a = terms_.rbegin(), b = o.terms_.rbegin();
  for (; a != terms_.rend() && b != o.terms_.rend(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    int c = a->second.compare(b->second);
    if (c != 0) return c;
  }
  if (a == terms_.rend() && b == o.terms_.rend()) return 0;
  return a == terms_.rend() ? -1 : 1;
}

}  // namespace chowmod
