#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chowmod {

class Field;
class Element;
using FieldPtr = std::shared_ptr<const Field>;

/// An exact field: Q, a prime field F_p, or a simple extension P[u]/(mu) of
/// one of those with mu monic irreducible of degree >= 2.
///
/// Fields are immutable and compared by value: two extensions with the same
/// characteristic and the same mu are the same field. Distinct mu give
/// distinct representations even when the fields are abstractly isomorphic.
class Field : public std::enable_shared_from_this<Field> {
  struct Private {};

 public:
  Field(Private, std::uint64_t p, std::vector<mpq_class> mu);

  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  /// mu is given low-degree-first and must be monic over the prime field.
  /// Irreducibility is checked: by full factorization over F_p, and by the
  /// rational root test over Q (degrees 2 and 3 only).
  static FieldPtr extension(std::uint64_t p, std::vector<mpq_class> mu);
  /// F_{p^d} with the stored table polynomial (searched when not tabled).
  static FieldPtr finite(std::uint64_t p, unsigned degree);
  /// Validating front end: characteristic 0 or prime, optional extension.
  static FieldPtr make(std::uint64_t characteristic,
                       const std::optional<std::vector<mpq_class>>& mu = std::nullopt);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return mu_.empty() ? 1u : static_cast<unsigned>(mu_.size() - 1); }
  bool is_finite() const { return p_ != 0; }
  bool is_extension() const { return !mu_.empty(); }
  /// q = p^d for finite fields, 0 for characteristic zero.
  const mpz_class& order() const { return order_; }
  /// mu, low-degree-first; empty for Q and F_p.
  const std::vector<mpq_class>& modulus() const { return mu_; }
  FieldPtr prime_field() const;

  bool operator==(const Field& other) const { return p_ == other.p_ && mu_ == other.mu_; }
  bool operator!=(const Field& other) const { return !(*this == other); }
  int compare(const Field& other) const;

  Element zero() const;
  Element one() const;
  Element from_int(long value) const;
  Element from_rational(const mpq_class& value) const;
  /// The class of u in P[u]/(mu). Only for extensions.
  Element generator() const;
  /// Canonicalizes an arbitrary coefficient vector (reduced modulo mu and p).
  Element element(std::vector<mpq_class> coeffs) const;

  bool has_primitive_root() const { return !primitive_.empty(); }
  /// Generator of the multiplicative group, found by exhaustive order test.
  Element primitive_root() const;

  /// Enumeration of a finite field: base-p digits of the index, low-degree-first.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& x) const;

  /// "Q", "Fp:7", "Fq:3:u^2 + 1".
  std::string spec_string() const;

  // Coefficient arithmetic in the prime field. Values over F_p are kept as
  // integers in [0, p).
  mpq_class base_reduce(const mpq_class& x) const;
  mpq_class base_add(const mpq_class& a, const mpq_class& b) const;
  mpq_class base_sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class base_mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class base_neg(const mpq_class& a) const;
  mpq_class base_inv(const mpq_class& a) const;

 private:
  std::uint64_t p_;
  std::vector<mpq_class> mu_;
  mpz_class order_;
  std::vector<mpq_class> primitive_;
  FieldPtr prime_;

  static FieldPtr build(std::uint64_t p, std::vector<mpq_class> mu);
  void find_primitive_root();
  friend class Element;
  friend FieldPtr make_extension_unchecked(std::uint64_t p, std::vector<mpq_class> mu);
};

/// Skips the irreducibility test; used when mu comes out of a complete
/// factorization.
FieldPtr make_extension_unchecked(std::uint64_t p, std::vector<mpq_class> mu);

bool is_prime(std::uint64_t n);

/// A value in a Field. Coefficient vectors have length Field::degree().
class Element {
 public:
  Element() = default;
  Element(FieldPtr field, std::vector<mpq_class> canonical_coeffs);

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  /// The prime-field value of a base-field element.
  const mpq_class& scalar() const { return c_.front(); }

  bool is_zero() const;
  bool is_one() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator/=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }

  Element inverse() const;
  Element pow(const mpz_class& e) const;
  Element pow(long e) const { return pow(mpz_class(e)); }
  /// x -> x^p. Identity in characteristic zero.
  Element frobenius() const;

  bool in_prime_field() const;
  /// Converts an extension element lying in the prime field down to it.
  Element to_prime_field() const;
  /// Embeds a prime-field element into an extension with that prime field.
  Element lift(const FieldPtr& target) const;

  /// Over Q: "a" or "a/b"; over F_p: the residue; over extensions: a
  /// polynomial in u, highest degree first, e.g. "2*u + 1".
  std::string to_string() const;

  int compare(const Element& o) const;
  friend bool operator==(const Element& a, const Element& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Element& a, const Element& b) { return a.compare(b) != 0; }
  friend bool operator<(const Element& a, const Element& b) { return a.compare(b) < 0; }

 private:
  FieldPtr field_;
  std::vector<mpq_class> c_;

  void require_same(const Element& o) const;
};

/// Norm from F_{p^d} to F_p: x^((p^d - 1)/(p - 1)).
Element norm_k1_finite(const Element& alpha);

/// Norm from F_{p^d} to its subfield F_{p^e} (e | d), kept in the
/// representation of the big field.
Element norm_to_subfield(const Element& alpha, unsigned e);

/// Smallest e such that x lies in F_{p^e}.
unsigned subfield_degree(const Element& x);

/// Discrete logarithm to the stored primitive root (exhaustive, q <= 2^16).
std::uint64_t discrete_log(const Element& x);

/// Integer factorization by trial division: (prime, exponent) pairs.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

}  // namespace chowmod
