#include "chowmod/zero_cycle.hpp"

#include "chowmod/error.hpp"

namespace chowmod {

namespace {

int compare_coords(const std::vector<Element>& a, const std::vector<Element>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = a[i].compare(b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string coords_string(const std::vector<Element>& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ", ";
    out += x.to_string();
  }
  return out;
}

}  // namespace

std::string ClosedPoint::to_string() const {
  std::string s = "(" + coords_string(t) + "; " + coords_string(y) + ")";
  if (field->is_extension()) s += " over " + field->spec_string();
  return s;
}

int ClosedPoint::compare(const ClosedPoint& o) const {
  int c = field->compare(*o.field);
  if (c != 0) return c;
  c = compare_coords(t, o.t);
  if (c != 0) return c;
  return compare_coords(y, o.y);
}

ClosedPoint canonical_point(const ClosedPoint& p, long* mult_scale) {
  if (mult_scale) *mult_scale = 1;
  ClosedPoint q{p.field, {}, {}};
  for (const auto& x : p.t) q.t.push_back(*x.field() == *p.field ? x : x.lift(p.field));
  for (const auto& x : p.y) q.y.push_back(*x.field() == *p.field ? x : x.lift(p.field));
  if (!q.field->is_extension()) return q;
  bool rational = true;
  for (const auto& x : q.t) rational &= x.in_prime_field();
  for (const auto& x : q.y) rational &= x.in_prime_field();
  if (rational) {
    ClosedPoint down{q.field->prime_field(), {}, {}};
    for (const auto& x : q.t) down.t.push_back(x.to_prime_field());
    for (const auto& x : q.y) down.y.push_back(x.to_prime_field());
    if (mult_scale) *mult_scale = q.field->degree();
    return down;
  }
  if (!q.field->is_finite()) return q;
  ClosedPoint best = q, cur = q;
  for (unsigned k = 1; k < q.field->degree(); ++k) {
    for (auto& x : cur.t) x = x.frobenius();
    for (auto& x : cur.y) x = x.frobenius();
    if (cur < best) best = cur;
  }
  return best;
}

ZeroCycle::ZeroCycle(FieldPtr base, unsigned r, unsigned n, Model model)
    : base_(std::move(base)), r_(r), n_(n), model_(model) {}

void ZeroCycle::add(const ClosedPoint& p, long mult) {
  if (mult == 0) return;
  if (p.t.size() != r_ || p.y.size() != n_) fail(ErrorCode::InvalidArgument, "point has the wrong dimension");
  if (p.field->characteristic() != base_->characteristic())
    fail(ErrorCode::WrongField, "point field " + p.field->spec_string() + " over base " + base_->spec_string());
  long scale = 1;
  ClosedPoint q = canonical_point(p, &scale);
  auto [it, inserted] = terms_.try_emplace(q, mult * scale);
  if (!inserted) {
    it->second += mult * scale;
    if (it->second == 0) terms_.erase(it);
  }
}

long ZeroCycle::degree() const {
  long d = 0;
  for (const auto& [p, m] : terms_) d += m * static_cast<long>(p.field->degree() / base_->degree());
  return d;
}

void ZeroCycle::require_compatible(const ZeroCycle& o) const {
  if (model_ != o.model_) fail(ErrorCode::WrongModel, "mixed-model cycle arithmetic");
  if (r_ != o.r_ || n_ != o.n_) fail(ErrorCode::InvalidArgument, "0-cycles live in different ambient spaces");
}

ZeroCycle& ZeroCycle::operator+=(const ZeroCycle& o) {
  require_compatible(o);
  for (const auto& [p, m] : o.terms_) add(p, m);
  return *this;
}

ZeroCycle& ZeroCycle::operator-=(const ZeroCycle& o) {
  require_compatible(o);
  for (const auto& [p, m] : o.terms_) add(p, -m);
  return *this;
}

ZeroCycle ZeroCycle::scaled(long k) const {
  ZeroCycle out(base_, r_, n_, model_);
  for (const auto& [p, m] : terms_) out.add(p, m * k);
  return out;
}

bool operator==(const ZeroCycle& a, const ZeroCycle& b) {
  return a.model_ == b.model_ && a.r_ == b.r_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string ZeroCycle::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : terms_) {
    long a = m < 0 ? -m : m;
    if (out.empty())
      out = m < 0 ? "-" : "";
    else
      out += m < 0 ? " - " : " + ";
    if (a != 1) out += std::to_string(a) + "*";
    out += "[" + p.to_string() + "]";
  }
  return out;
}

PointFaceReport check_face_condition(const ZeroCycle& z) {
  PointFaceReport report;
  std::size_t idx = 0;
  for (const auto& [p, m] : z.terms()) {
    (void)m;
    for (unsigned i = 0; i < p.y.size(); ++i) {
      const Element& v = p.y[i];
      bool bad = v.is_zero() || v.is_one();
      if (bad) {
        report.pass = false;
        report.violations.emplace_back(idx, i + 1);
      }
    }
    ++idx;
  }
  return report;
}

bool check_modulus_zerocycle(const ZeroCycle& z, const ModulusDatum& d) {
  for (const auto& [p, m] : z.terms()) {
    (void)m;
    MultiPoly div = d.divisor;
    if (p.t.size() != d.r()) fail(ErrorCode::InvalidArgument, "modulus and 0-cycle disagree on r");
    if (div.evaluate(p.t).is_zero()) return false;
  }
  return true;
}

ClosedPoint convert_point(const ClosedPoint& p, Model from, Model to) {
  if (from == to) return p;
  ClosedPoint q = p;
  for (auto& v : q.y) {
    if (from == Model::Original) {
      Element den = p.field->one() - v;
      if (den.is_zero()) fail(ErrorCode::UndefinedAtPole, "y = 1 maps to infinity");
      v = den.inverse();
    } else {
      if (v.is_zero()) fail(ErrorCode::UndefinedAtPole, "y = 0 maps to infinity");
      v = (v - p.field->one()) / v;
    }
  }
  return q;
}

ZeroCycle psi_convert(const ZeroCycle& z, Model target) {
  ZeroCycle out(z.base(), z.r(), z.n(), target);
  for (const auto& [p, m] : z.terms()) out.add(convert_point(p, z.model(), target), m);
  return out;
}

std::vector<Element> Embedding::apply(const std::vector<Element>& t) const {
  if (t.size() != source_dim) fail(ErrorCode::InvalidArgument, "embedding applied to a point of the wrong dimension");
  std::vector<Element> out;
  for (const auto& c : coords) out.push_back(c.evaluate(t));
  return out;
}

Embedding Embedding::then(const Embedding& outer) const {
  if (outer.source_dim != target_dim()) fail(ErrorCode::InvalidArgument, "embeddings do not compose");
  Embedding out{field, source_dim, {}};
  for (const auto& g : outer.coords) {
    // Work in t1..ts, t(s+1)..t(s+s'): g lives in the upper block.
    VarSet big{source_dim + outer.source_dim, 0, false};
    std::vector<std::size_t> shift(outer.source_dim);
    for (unsigned i = 0; i < outer.source_dim; ++i) shift[i] = source_dim + i;
    MultiPoly h = g.with_vars(big, shift);
    std::vector<std::size_t> keep(source_dim);
    for (unsigned i = 0; i < source_dim; ++i) keep[i] = i;
    for (unsigned i = 0; i < outer.source_dim; ++i) h = h.compose(source_dim + i, coords[i].with_vars(big, keep));
    std::map<std::size_t, Element> zero;
    for (unsigned i = 0; i < outer.source_dim; ++i) zero.emplace(source_dim + i, field->zero());
    out.coords.push_back(h.substitute(zero, true));
  }
  return out;
}

Embedding Embedding::identity(const FieldPtr& field, unsigned dim) {
  VarSet vars{dim, 0, false};
  Embedding e{field, dim, {}};
  for (unsigned i = 0; i < dim; ++i) e.coords.push_back(MultiPoly::variable(field, vars, i));
  return e;
}

ZeroCycle pushforward(const ZeroCycle& z, const Embedding& e, const ModulusDatum* d) {
  ZeroCycle out(z.base(), e.target_dim(), z.n(), z.model());
  for (const auto& [p, m] : z.terms()) {
    std::vector<Element> t = p.t;
    ClosedPoint q{p.field, e.apply(t), p.y};
    if (d && d->divisor.evaluate(q.t).is_zero())
      fail(ErrorCode::ModulusNotAvoided, "image point " + q.to_string() + " lies on the modulus");
    out.add(q, m);
  }
  return out;
}

}  // namespace chowmod
