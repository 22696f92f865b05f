#include <algorithm>
#include <set>

#include "chowmod/error.hpp"
#include "chowmod/ratfunc.hpp"

namespace chowmod {

Place Place::infinity(const FieldPtr& field) {
  Place v;
  v.infinity_ = true;
  v.base_ = field;
  return v;
}

Place Place::finite(const UPoly& pi) {
  if (pi.degree() < 1) fail(ErrorCode::InvalidArgument, "a place needs a nonconstant polynomial");
  Place v;
  v.base_ = pi.field();
  v.pi_ = pi.monic();
  return v;
}

Place Place::rational(const Element& a) { return finite(UPoly::linear_root(a)); }

unsigned Place::degree() const { return infinity_ ? 1u : static_cast<unsigned>(pi_.degree()); }

FieldPtr Place::residue_field() const {
  if (infinity_ || pi_.degree() == 1) return base_;
  if (residue_) return residue_;
  if (base_->is_extension())
    fail(ErrorCode::UnsupportedExtension, "places of degree > 1 over a non-prime base field");
  std::vector<mpq_class> mu;
  for (const auto& c : pi_.coeffs()) mu.push_back(c.scalar());
  residue_ = make_extension_unchecked(base_->characteristic(), std::move(mu));
  return residue_;
}

Element Place::root() const {
  if (infinity_) fail(ErrorCode::InvalidArgument, "the place at infinity has no root");
  if (pi_.degree() == 1) return -pi_.constant_term();
  return residue_field()->generator();
}

RatFunc Place::uniformizer() const {
  if (infinity_) return RatFunc(UPoly::constant(base_->one()), UPoly::x(base_));
  return RatFunc(pi_);
}

std::string Place::to_string() const {
  if (infinity_) return "inf";
  return pi_.to_string("t1");
}

int Place::compare(const Place& o) const {
  if (infinity_ != o.infinity_) return infinity_ ? 1 : -1;
  if (infinity_) return 0;
  if (pi_.degree() != o.pi_.degree()) return pi_.degree() < o.pi_.degree() ? -1 : 1;
  return pi_.compare(o.pi_);
}

namespace {

void add_places(const UPoly& p, std::set<Place>& out) {
  if (p.degree() < 1) return;
  Factorization fac = factor_univariate(p);
  for (const auto& f : fac.factors) {
    if (f.unfactored || (!p.field()->is_finite() && f.poly.degree() > 1))
      fail(ErrorCode::UnfactorableEntry, f.poly.to_string("t1") + " does not split over " + p.field()->spec_string());
    out.insert(Place::finite(f.poly));
  }
}

}  // namespace

std::vector<Place> support_places(const std::vector<RatFunc>& fs, bool include_infinity) {
  std::set<Place> places;
  FieldPtr field;
  for (const auto& f : fs) {
    field = f.field();
    add_places(f.num(), places);
    add_places(f.den(), places);
  }
  std::vector<Place> out(places.begin(), places.end());
  if (include_infinity && field) out.push_back(Place::infinity(field));
  return out;
}

}  // namespace chowmod
