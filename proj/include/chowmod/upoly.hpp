#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowmod/field.hpp"

namespace chowmod {

/// Dense univariate polynomial over a Field; coefficients low-degree-first,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(FieldPtr field);
  UPoly(FieldPtr field, std::vector<Element> coeffs);

  static UPoly constant(const Element& c);
  static UPoly x(const FieldPtr& field);
  /// x - a
  static UPoly linear_root(const Element& a);
  /// From prime-field coefficient values (low-degree-first).
  static UPoly from_values(const FieldPtr& field, const std::vector<mpq_class>& values);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const std::vector<Element>& coeffs() const { return c_; }
  Element coeff(std::size_t k) const;
  Element leading() const;
  Element constant_term() const { return coeff(0); }

  UPoly monic() const;
  UPoly derivative() const;
  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Element& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Element& c) { return a *= c; }

  /// Quotient and remainder; throws ZeroDivisor on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly pow(unsigned e) const;
  UPoly pow_mod(const mpz_class& e, const UPoly& m) const;
  /// Coefficientwise Frobenius followed by x -> x (used for p-th roots).
  UPoly map_coeffs(Element (*fn)(const Element&)) const;

  /// Evaluates at x, which may live in an extension of this field.
  Element eval(const Element& x) const;

  /// Order of vanishing of this polynomial along the irreducible p.
  unsigned multiplicity_of(const UPoly& p) const;

  /// Highest degree first, e.g. "u^2 + 4*u + 2".
  std::string to_string(std::string_view var = "u") const;

  int compare(const UPoly& o) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.compare(b) == 0; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return a.compare(b) != 0; }
  friend bool operator<(const UPoly& a, const UPoly& b) { return a.compare(b) < 0; }

 private:
  FieldPtr field_;
  std::vector<Element> c_;

  void trim();
};

/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
  UPoly g, s, t;
};
XGcd xgcd(const UPoly& a, const UPoly& b);

/// Formats a coefficient times a monomial body into a sum string. Shared by
/// the univariate and multivariate printers so both agree on signs.
void append_term(std::string& out, const Element& coeff, const std::string& monomial);

}  // namespace chowmod
