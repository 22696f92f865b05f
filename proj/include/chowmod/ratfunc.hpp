#pragma once

#include <string>
#include <vector>

#include "chowmod/factor.hpp"
#include "chowmod/upoly.hpp"

namespace chowmod {

class Place;

/// Element of k(t): num/den in lowest terms with den monic.
class RatFunc {
 public:
  RatFunc() = default;
  /// Throws ZeroDivisor when den is zero.
  RatFunc(const UPoly& num, const UPoly& den);
  explicit RatFunc(const UPoly& poly);

  static RatFunc constant(const Element& c);
  /// The function t.
  static RatFunc param(const FieldPtr& field);

  const FieldPtr& field() const { return num_.field(); }
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function.
  Element constant_value() const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc pow(long e) const;

  /// Value at x (x may lie in an extension); throws UndefinedAtPole.
  Element eval(const Element& x) const;
  /// Valuation at a place of P^1.
  int order_at(const Place& v) const;
  /// Value in the residue field of v; requires order 0 there.
  Element residue_value(const Place& v) const;

  /// "num" or "(num)/(den)" in the given variable name.
  std::string to_string(std::string_view var = "t1") const;

  int compare(const RatFunc& o) const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.compare(b) == 0; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return a.compare(b) != 0; }
  friend bool operator<(const RatFunc& a, const RatFunc& b) { return a.compare(b) < 0; }

 private:
  UPoly num_, den_;
};

/// A place of k(t) over k: a monic irreducible polynomial pi, or infinity
/// (uniformizer 1/t).
class Place {
 public:
  Place() = default;
  static Place infinity(const FieldPtr& field);
  /// pi is made monic; irreducibility is the caller's responsibility.
  static Place finite(const UPoly& pi);
  static Place rational(const Element& a);

  bool at_infinity() const { return infinity_; }
  const UPoly& pi() const { return pi_; }
  const FieldPtr& base() const { return base_; }
  unsigned degree() const;
  /// k for degree-1 places and infinity; k[u]/(pi) otherwise (finite prime
  /// base fields, or Q with pi of degree 2 or 3).
  FieldPtr residue_field() const;
  /// The image of t in the residue field (finite places only).
  Element root() const;
  /// Uniformizer as a rational function.
  RatFunc uniformizer() const;

  /// {"pi":"t1 + 4"} style text, or "inf".
  std::string to_string() const;

  int compare(const Place& o) const;
  friend bool operator==(const Place& a, const Place& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Place& a, const Place& b) { return a.compare(b) != 0; }
  friend bool operator<(const Place& a, const Place& b) { return a.compare(b) < 0; }

 private:
  bool infinity_ = false;
  FieldPtr base_;
  UPoly pi_;
  mutable FieldPtr residue_;
};

/// Finite places where some function has a zero or pole, sorted, plus
/// infinity (last). Throws UnfactorableEntry when a numerator or denominator
/// does not split into certified irreducibles.
std::vector<Place> support_places(const std::vector<RatFunc>& fs, bool include_infinity = true);

}  // namespace chowmod
