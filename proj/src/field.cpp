#include "chowmod/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "chowmod/error.hpp"
#include "chowmod/factor.hpp"
#include "chowmod/upoly.hpp"

namespace chowmod {

namespace {

mpz_class mod_floor(const mpz_class& a, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r;
}

// Polynomials over the prime field as raw coefficient vectors. Only used for
// the extended Euclid inverse in characteristic-zero extensions.
using Coeffs = std::vector<mpq_class>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<Coeffs, Coeffs> poly_divmod(Coeffs a, const Coeffs& b) {
  Coeffs q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  trim(q);
  return {q, a};
}

struct TableEntry {
  std::uint64_t p;
  unsigned d;
  std::vector<int> mu;
};

// Standard moduli for small finite fields. Conway polynomials except F_9,
// which uses u^2 + 1.
const std::vector<TableEntry>& extension_table() {
  static const std::vector<TableEntry> table = {
      {2, 2, {1, 1, 1}},          {2, 3, {1, 1, 0, 1}},          {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}}, {2, 6, {1, 1, 0, 1, 1, 0, 1}}, {3, 2, {1, 0, 1}},
      {3, 3, {1, 2, 0, 1}},       {3, 4, {2, 0, 0, 2, 1}},       {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},       {7, 2, {3, 6, 1}},             {11, 2, {2, 7, 1}},
      {13, 2, {2, 12, 1}},
  };
  return table;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint64_t, Coeffs>, FieldPtr>& field_cache() {
  static std::map<std::pair<std::uint64_t, Coeffs>, FieldPtr> cache;
  return cache;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  if (n < 0) n = -n;
  if (n < 2) return out;
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Field::Field(Private, std::uint64_t p, std::vector<mpq_class> mu) : p_(p), mu_(std::move(mu)) {
  if (p_ == 0) {
    order_ = 0;
  } else {
    mpz_ui_pow_ui(order_.get_mpz_t(), p_, degree());
  }
}

FieldPtr Field::build(std::uint64_t p, std::vector<mpq_class> mu) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto key = std::make_pair(p, mu);
  auto& cache = field_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto f = std::make_shared<Field>(Private{}, p, std::move(mu));
  if (f->is_extension()) {
    auto found = cache.find(std::make_pair(p, Coeffs{}));
    if (found != cache.end()) {
      f->prime_ = found->second;
    } else {
      auto base = std::make_shared<Field>(Private{}, p, Coeffs{});
      base->find_primitive_root();
      cache.emplace(std::make_pair(p, Coeffs{}), base);
      f->prime_ = base;
    }
  }
  f->find_primitive_root();
  cache.emplace(key, f);
  return f;
}

FieldPtr Field::rationals() { return build(0, {}); }

FieldPtr Field::prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  return build(p, {});
}

FieldPtr make_extension_unchecked(std::uint64_t p, std::vector<mpq_class> mu) {
  return Field::build(p, std::move(mu));
}

FieldPtr Field::extension(std::uint64_t p, std::vector<mpq_class> mu) {
  if (p != 0 && !is_prime(p))
    fail(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  FieldPtr base = p == 0 ? rationals() : prime(p);
  for (auto& c : mu) c = base->base_reduce(c);
  trim(mu);
  if (mu.size() < 3) fail(ErrorCode::InvalidArgument, "extension polynomial must have degree >= 2");
  if (mu.back() != 1) fail(ErrorCode::InvalidArgument, "extension polynomial must be monic");
  UPoly m = UPoly::from_values(base, mu);
  if (!is_irreducible(m))
    fail(ErrorCode::ReducibleExtensionPolynomial, m.to_string() + " is reducible over " + base->spec_string());
  return build(p, std::move(mu));
}

FieldPtr Field::finite(std::uint64_t p, unsigned degree) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (degree == 0) fail(ErrorCode::InvalidArgument, "degree must be positive");
  if (degree == 1) return prime(p);
  for (const auto& e : extension_table()) {
    if (e.p == p && e.d == degree) {
      Coeffs mu(e.mu.begin(), e.mu.end());
      return extension(p, mu);
    }
  }
  // First monic irreducible in enumeration order.
  FieldPtr base = prime(p);
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, degree);
  for (std::uint64_t idx = 0; idx < count.get_ui(); ++idx) {
    Coeffs mu(degree + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned k = 0; k < degree; ++k) {
      mu[k] = static_cast<unsigned long>(rest % p);
      rest /= p;
    }
    mu[degree] = 1;
    if (mu[0] == 0) continue;
    if (is_irreducible(UPoly::from_values(base, mu))) return build(p, mu);
  }
  fail(ErrorCode::UnsupportedExtension, "no irreducible polynomial found");
}

FieldPtr Field::make(std::uint64_t characteristic, const std::optional<std::vector<mpq_class>>& mu) {
  if (characteristic != 0 && !is_prime(characteristic))
    fail(ErrorCode::NonPrimeCharacteristic, std::to_string(characteristic) + " is not prime");
  if (!mu) return characteristic == 0 ? rationals() : prime(characteristic);
  return extension(characteristic, *mu);
}

FieldPtr Field::prime_field() const {
  if (!is_extension()) return shared_from_this();
  return prime_;
}

int Field::compare(const Field& other) const {
  if (p_ != other.p_) return p_ < other.p_ ? -1 : 1;
  if (mu_.size() != other.mu_.size()) return mu_.size() < other.mu_.size() ? -1 : 1;
  for (std::size_t i = 0; i < mu_.size(); ++i) {
    int c = cmp(mu_[i], other.mu_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

void Field::find_primitive_root() {
  if (!is_finite() || order_ > mpz_class("4294967296")) return;
  mpz_class qm1 = order_ - 1;
  auto primes = factor_integer(qm1);
  FieldPtr self = shared_from_this();
  std::uint64_t q = order_.get_ui();
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    Element x = element_at(idx);
    bool primitive = true;
    for (const auto& [ell, e] : primes) {
      (void)e;
      if (x.pow(mpz_class(qm1 / ell)).is_one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      primitive_ = x.coeffs();
      return;
    }
  }
}

Element Field::zero() const { return Element(shared_from_this(), Coeffs(degree(), 0)); }

Element Field::one() const {
  Coeffs c(degree(), 0);
  c[0] = 1;
  return Element(shared_from_this(), std::move(c));
}

Element Field::from_int(long value) const { return from_rational(mpq_class(value)); }

Element Field::from_rational(const mpq_class& value) const {
  Coeffs c(degree(), 0);
  c[0] = base_reduce(value);
  return Element(shared_from_this(), std::move(c));
}

Element Field::generator() const {
  if (!is_extension()) fail(ErrorCode::NotFiniteExtension, spec_string() + " is not an extension");
  Coeffs c(degree(), 0);
  c[1] = 1;
  return Element(shared_from_this(), std::move(c));
}

Element Field::element(std::vector<mpq_class> coeffs) const {
  for (auto& c : coeffs) c = base_reduce(c);
  std::size_t d = degree();
  if (coeffs.size() > d) {
    // Reduce modulo mu, from the top.
    for (std::size_t k = coeffs.size(); k-- > d;) {
      mpq_class c = coeffs[k];
      if (c == 0) continue;
      coeffs[k] = 0;
      for (std::size_t j = 0; j < d; ++j)
        coeffs[k - d + j] = base_sub(coeffs[k - d + j], base_mul(c, mu_[j]));
    }
  }
  coeffs.resize(d, 0);
  return Element(shared_from_this(), std::move(coeffs));
}

Element Field::primitive_root() const {
  if (primitive_.empty())
    fail(ErrorCode::InvalidArgument, "no stored primitive root for " + spec_string());
  return Element(shared_from_this(), primitive_);
}

Element Field::element_at(std::uint64_t index) const {
  if (!is_finite()) fail(ErrorCode::InvalidArgument, "enumeration requires a finite field");
  Coeffs c(degree(), 0);
  for (unsigned k = 0; k < degree(); ++k) {
    c[k] = static_cast<unsigned long>(index % p_);
    index /= p_;
  }
  return Element(shared_from_this(), std::move(c));
}

std::uint64_t Field::index_of(const Element& x) const {
  std::uint64_t idx = 0;
  for (std::size_t k = x.coeffs().size(); k-- > 0;) idx = idx * p_ + x.coeffs()[k].get_num().get_ui();
  return idx;
}

std::string Field::spec_string() const {
  if (p_ == 0 && mu_.empty()) return "Q";
  if (mu_.empty()) return "Fp:" + std::to_string(p_);
  std::string head = p_ == 0 ? "Q:" : "Fq:" + std::to_string(p_) + ":";
  FieldPtr base = prime_field();
  return head + UPoly::from_values(base, mu_).to_string("u");
}

mpq_class Field::base_reduce(const mpq_class& x) const {
  if (p_ == 0) {
    mpq_class y = x;
    y.canonicalize();
    return y;
  }
  mpz_class num = mod_floor(x.get_num(), p_);
  mpz_class den = mod_floor(x.get_den(), p_);
  if (den == 0) fail(ErrorCode::WrongField, x.get_str() + " has a denominator divisible by " + std::to_string(p_));
  if (den != 1) {
    mpz_class inv, modulus(static_cast<unsigned long>(p_));
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    num = mod_floor(num * inv, p_);
  }
  return mpq_class(num);
}

mpq_class Field::base_add(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a + b;
  return mpq_class(mod_floor(a.get_num() + b.get_num(), p_));
}

mpq_class Field::base_sub(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a - b;
  return mpq_class(mod_floor(a.get_num() - b.get_num(), p_));
}

mpq_class Field::base_mul(const mpq_class& a, const mpq_class& b) const {
  if (p_ == 0) return a * b;
  return mpq_class(mod_floor(a.get_num() * b.get_num(), p_));
}

mpq_class Field::base_neg(const mpq_class& a) const {
  if (p_ == 0) return -a;
  return mpq_class(mod_floor(-a.get_num(), p_));
}

mpq_class Field::base_inv(const mpq_class& a) const {
  if (a == 0) fail(ErrorCode::ZeroElement, "inverse of zero");
  if (p_ == 0) return 1 / a;
  mpz_class inv, modulus(static_cast<unsigned long>(p_));
  mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), modulus.get_mpz_t());
  return mpq_class(inv);
}

// ---------------------------------------------------------------- Element

Element::Element(FieldPtr field, std::vector<mpq_class> canonical_coeffs)
    : field_(std::move(field)), c_(std::move(canonical_coeffs)) {}

void Element::require_same(const Element& o) const {
  if (field_ == o.field_) return;
  if (!field_ || !o.field_ || *field_ != *o.field_)
    fail(ErrorCode::WrongField, "mixed-field arithmetic: " + (field_ ? field_->spec_string() : "null") +
                                    " vs " + (o.field_ ? o.field_->spec_string() : "null"));
}

bool Element::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Element::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& c) { return c == 0; });
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& c : r.c_) c = field_->base_neg(c);
  return r;
}

Element& Element::operator+=(const Element& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_->base_add(c_[i], o.c_[i]);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_->base_sub(c_[i], o.c_[i]);
  return *this;
}

Element& Element::operator*=(const Element& o) {
  require_same(o);
  const Field& f = *field_;
  if (c_.size() == 1) {
    c_[0] = f.base_mul(c_[0], o.c_[0]);
    return *this;
  }
  std::size_t d = c_.size();
  std::vector<mpq_class> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = f.base_add(prod[i + j], f.base_mul(c_[i], o.c_[j]));
  }
  *this = f.element(std::move(prod));
  return *this;
}

Element& Element::operator/=(const Element& o) { return *this *= o.inverse(); }

Element Element::inverse() const {
  if (is_zero()) fail(ErrorCode::ZeroElement, "inverse of zero");
  const Field& f = *field_;
  if (c_.size() == 1) return Element(field_, {f.base_inv(c_[0])});
  if (f.is_finite()) return pow(f.order() - 2);
  // Characteristic zero extension: extended Euclid against mu.
  Coeffs a = c_;
  trim(a);
  Coeffs m = f.modulus();
  Coeffs s0{1}, s1{};
  Coeffs r0 = a, r1 = m;
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Coeffs s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since mu is irreducible.
  mpq_class c = r0[0];
  for (auto& v : s0) v /= c;
  return f.element(s0);
}

Element Element::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  Element result = field_->one();
  Element base = *this;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Element Element::frobenius() const {
  if (!field_->is_finite()) return *this;
  if (c_.size() == 1) return *this;
  return pow(mpz_class(static_cast<unsigned long>(field_->characteristic())));
}

bool Element::in_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& c) { return c == 0; });
}

Element Element::to_prime_field() const {
  if (!field_->is_extension()) return *this;
  if (!in_prime_field()) fail(ErrorCode::WrongField, to_string() + " is not in the prime field");
  return Element(field_->prime_field(), {c_[0]});
}

Element Element::lift(const FieldPtr& target) const {
  if (*target == *field_) return Element(target, c_);
  if (field_->is_extension() || target->characteristic() != field_->characteristic())
    fail(ErrorCode::WrongField, "cannot embed " + field_->spec_string() + " into " + target->spec_string());
  Coeffs c(target->degree(), 0);
  c[0] = c_[0];
  return Element(target, std::move(c));
}

std::string Element::to_string() const {
  if (c_.size() == 1) return c_[0].get_str();
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
    append_term(out, field_->prime_field()->from_rational(c_[k]), mono);
  }
  return out.empty() ? "0" : out;
}

int Element::compare(const Element& o) const {
  if (field_ != o.field_) {
    int fc = field_->compare(*o.field_);
    if (fc != 0) return fc;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

Element norm_k1_finite(const Element& alpha) {
  const FieldPtr& f = alpha.field();
  if (!f->is_finite() || !f->is_extension())
    fail(ErrorCode::NotFiniteExtension, f->spec_string() + " is not a finite extension");
  if (alpha.is_zero()) fail(ErrorCode::ZeroElement, "norm of zero");
  mpz_class p(static_cast<unsigned long>(f->characteristic()));
  mpz_class e = (f->order() - 1) / (p - 1);
  return alpha.pow(e).to_prime_field();
}

Element norm_to_subfield(const Element& alpha, unsigned e) {
  const FieldPtr& f = alpha.field();
  if (!f->is_finite()) fail(ErrorCode::NotFiniteExtension, "norm requires a finite field");
  if (alpha.is_zero()) fail(ErrorCode::ZeroElement, "norm of zero");
  if (f->degree() % e != 0) fail(ErrorCode::InvalidArgument, "subfield degree must divide the field degree");
  mpz_class sub;
  mpz_ui_pow_ui(sub.get_mpz_t(), f->characteristic(), e);
  return alpha.pow((f->order() - 1) / (sub - 1));
}

unsigned subfield_degree(const Element& x) {
  const FieldPtr& f = x.field();
  if (!f->is_extension()) return 1;
  if (x.in_prime_field()) return 1;
  if (!f->is_finite()) return f->degree();
  unsigned d = f->degree();
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    Element y = x;
    for (unsigned k = 0; k < e; ++k) y = y.frobenius();
    if (y == x) return e;
  }
  return d;
}

std::uint64_t discrete_log(const Element& x) {
  const FieldPtr& f = x.field();
  if (!f->is_finite()) fail(ErrorCode::InvalidArgument, "discrete log requires a finite field");
  if (f->order() > 65536) fail(ErrorCode::TooLarge, "discrete log limited to q <= 2^16");
  if (x.is_zero()) fail(ErrorCode::ZeroElement, "discrete log of zero");
  Element g = f->primitive_root();
  Element acc = f->one();
  std::uint64_t q = f->order().get_ui();
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    if (acc == x) return k;
    acc *= g;
  }
  fail(ErrorCode::InvalidArgument, "element not found in the multiplicative group");
}

}  // namespace chowmod
