#include "chowmod/upoly.hpp"

#include "chowmod/error.hpp"

namespace chowmod {

UPoly::UPoly(FieldPtr field) : field_(std::move(field)) {}

UPoly::UPoly(FieldPtr field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Element& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::x(const FieldPtr& field) { return UPoly(field, {field->zero(), field->one()}); }

UPoly UPoly::linear_root(const Element& a) { return UPoly(a.field(), {-a, a.field()->one()}); }

UPoly UPoly::from_values(const FieldPtr& field, const std::vector<mpq_class>& values) {
  std::vector<Element> c;
  c.reserve(values.size());
  for (const auto& v : values) c.push_back(field->from_rational(v));
  return UPoly(field, std::move(c));
}

Element UPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_->zero(); }

Element UPoly::leading() const {
  if (c_.empty()) return field_->zero();
  return c_.back();
}

UPoly UPoly::monic() const {
  if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "monic of zero polynomial");
  if (is_monic()) return *this;
  return *this * leading().inverse();
}

UPoly UPoly::derivative() const {
  std::vector<Element> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * field_->from_int(static_cast<long>(k)));
  return UPoly(field_, std::move(d));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Element> r(c_.size() + o.c_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Element& c) {
  for (auto& v : c_) v *= c;
  trim();
  return *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::ZeroDivisor, "polynomial division by zero");
  UPoly r = *this;
  if (r.degree() < d.degree()) return {UPoly(field_), r};
  std::vector<Element> q(r.c_.size() - d.c_.size() + 1, field_->zero());
  Element inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    std::size_t shift = r.c_.size() - d.c_.size();
    Element c = r.c_.back() * inv;
    q[shift] = c;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r.c_[shift + j] -= c * d.c_[j];
    r.c_.pop_back();
    r.trim();
  }
  return {UPoly(field_, std::move(q)), r};
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result = constant(field_->one());
  UPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

UPoly UPoly::pow_mod(const mpz_class& e, const UPoly& m) const {
  UPoly result = constant(field_->one()) % m;
  UPoly base = *this % m;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = (result * base) % m;
    k >>= 1;
    if (k > 0) base = (base * base) % m;
  }
  return result;
}

UPoly UPoly::map_coeffs(Element (*fn)(const Element&)) const {
  std::vector<Element> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(fn(v));
  return UPoly(field_, std::move(c));
}

Element UPoly::eval(const Element& x) const {
  const FieldPtr& target = x.field();
  Element acc = target->zero();
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= x;
    acc += *target == *field_ ? c_[k] : c_[k].lift(target);
  }
  return acc;
}

unsigned UPoly::multiplicity_of(const UPoly& p) const {
  if (is_zero()) fail(ErrorCode::ZeroPolynomial, "multiplicity in the zero polynomial");
  unsigned m = 0;
  UPoly cur = *this;
  for (;;) {
    auto [q, r] = cur.divmod(p);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++m;
  }
  return m;
}

void append_term(std::string& out, const Element& coeff, const std::string& monomial) {
  if (coeff.is_zero()) return;
  if (coeff.field()->is_extension() && coeff.in_prime_field()) {
    append_term(out, coeff.to_prime_field(), monomial);
    return;
  }
  std::string body;
  bool negative = false;
  if (coeff.field()->is_extension()) {
    body = "(" + coeff.to_string() + ")";
  } else {
    if (!coeff.field()->is_finite() && coeff.scalar() < 0) {
      negative = true;
      body = mpq_class(-coeff.scalar()).get_str();
    } else {
      body = coeff.to_string();
    }
  }
  if (!monomial.empty()) {
    if (body == "1")
      body = monomial;
    else
      body += "*" + monomial;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

std::string UPoly::to_string(std::string_view var) const {
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    std::string mono = k == 0 ? "" : (k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
    append_term(out, c_[k], mono);
  }
  return out.empty() ? "0" : out;
}

int UPoly::compare(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
  for (std::size_t k = c_.size(); k-- > 0;) {
    int c = c_[k].compare(o.c_[k]);
    if (c != 0) return c;
  }
  return 0;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

XGcd xgcd(const UPoly& a, const UPoly& b) {
  const FieldPtr& f = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(f->one()), s1(f);
  UPoly t0(f), t1 = UPoly::constant(f->one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Element inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace chowmod
