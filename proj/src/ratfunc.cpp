#include "chowmod/ratfunc.hpp"

#include "chowmod/error.hpp"

namespace chowmod {

RatFunc::RatFunc(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) fail(ErrorCode::ZeroDivisor, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UPoly(den.field());
    den_ = UPoly::constant(den.field()->one());
    return;
  }
  UPoly g = gcd(num, den);
  UPoly n = num / g;
  UPoly d = den / g;
  Element lc = d.leading();
  Element inv = lc.inverse();
  num_ = n * inv;
  den_ = d * inv;
}

RatFunc::RatFunc(const UPoly& poly) : RatFunc(poly, UPoly::constant(poly.field()->one())) {}

RatFunc RatFunc::constant(const Element& c) { return RatFunc(UPoly::constant(c)); }

RatFunc RatFunc::param(const FieldPtr& field) { return RatFunc(UPoly::x(field)); }

Element RatFunc::constant_value() const {
  if (!is_constant()) fail(ErrorCode::InvalidArgument, "rational function is not constant");
  return num_.constant_term();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorCode::ZeroElement, "inverse of the zero function");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroDivisor, "division by the zero function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

Element RatFunc::eval(const Element& x) const {
  Element d = den_.eval(x);
  if (d.is_zero()) fail(ErrorCode::UndefinedAtPole, to_string() + " has a pole at " + x.to_string());
  return num_.eval(x) / d;
}

int RatFunc::order_at(const Place& v) const {
  if (is_zero()) fail(ErrorCode::ZeroElement, "order of the zero function");
  if (v.at_infinity()) return den_.degree() - num_.degree();
  return static_cast<int>(num_.multiplicity_of(v.pi())) - static_cast<int>(den_.multiplicity_of(v.pi()));
}

Element RatFunc::residue_value(const Place& v) const {
  if (order_at(v) != 0) fail(ErrorCode::InvalidArgument, to_string() + " is not a unit at " + v.to_string());
  if (v.at_infinity()) return num_.leading() / den_.leading();
  return eval(v.root());
}

std::string RatFunc::to_string(std::string_view var) const {
  if (den_.is_constant()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

int RatFunc::compare(const RatFunc& o) const {
  int c = den_.compare(o.den_);
  if (c != 0) return c;
  return num_.compare(o.num_);
}

}  // namespace chowmod
