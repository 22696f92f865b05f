#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chowmod/field.hpp"
#include "chowmod/upoly.hpp"

namespace chowmod {

/// Variables t1..tr, y1..yn and optionally one curve parameter u, in that
/// order. Index of t_i is i-1, of y_i is r+i-1, of u is r+n.
struct VarSet {
  unsigned r = 0;
  unsigned n = 0;
  bool param = false;

  std::size_t size() const { return r + n + (param ? 1u : 0u); }
  std::size_t t(unsigned i) const { return i - 1; }
  std::size_t y(unsigned i) const { return r + i - 1; }
  std::size_t u() const { return r + n; }
  bool is_t(std::size_t idx) const { return idx < r; }
  bool is_y(std::size_t idx) const { return idx >= r && idx < r + n; }
  std::string name(std::size_t idx) const;
  /// Parses "t3", "y1", "u"; returns size() when unknown.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.r == b.r && a.n == b.n && a.param == b.param;
  }
  friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }
};

using Exponents = std::vector<unsigned>;

/// Sparse polynomial: exponent vector -> nonzero coefficient. The map order
/// is lexicographic on exponents with t1 most significant; printing goes
/// from the largest monomial down.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Element>;

  MultiPoly() = default;
  MultiPoly(FieldPtr field, VarSet vars);

  static MultiPoly constant(const FieldPtr& field, const VarSet& vars, const Element& c);
  static MultiPoly constant(const FieldPtr& field, const VarSet& vars, long c);
  static MultiPoly variable(const FieldPtr& field, const VarSet& vars, std::size_t idx);
  static MultiPoly monomial(const FieldPtr& field, const VarSet& vars, Exponents e, const Element& c);
  /// Univariate polynomial placed in variable idx.
  static MultiPoly from_upoly(const UPoly& p, const VarSet& vars, std::size_t idx);

  const FieldPtr& field() const { return field_; }
  const VarSet& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t num_terms() const { return terms_.size(); }
  Element constant_term() const;
  /// Coefficient of the largest monomial.
  Element leading_coeff() const;
  Element coeff(const Exponents& e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Element& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Element& c) { return a *= c; }
  MultiPoly pow(unsigned e) const;

  /// Exact quotient f / g; throws ZeroDivisor or InexactDivision.
  MultiPoly exact_div(const MultiPoly& g) const;
  /// True when g divides this polynomial exactly.
  bool divisible_by(const MultiPoly& g) const;

  /// Evaluates the assigned variables. With shrink, the assigned variables
  /// are removed from the VarSet (remaining y-variables are renumbered).
  MultiPoly substitute(const std::map<std::size_t, Element>& assignment, bool shrink = false) const;
  /// Replaces variable idx by a polynomial in the same VarSet.
  MultiPoly compose(std::size_t idx, const MultiPoly& value) const;
  /// Full evaluation at a point (values may lie in an extension field).
  Element evaluate(const std::vector<Element>& point) const;

  /// Throws ZeroPolynomial on the zero polynomial.
  unsigned degree_in(std::size_t idx) const;
  unsigned total_degree() const;
  /// Coefficient of var^e, as a polynomial in the same VarSet with that
  /// variable absent.
  MultiPoly coefficient_of(std::size_t idx, unsigned e) const;
  bool depends_on(std::size_t idx) const;

  /// Re-embeds into a larger VarSet; map[i] is the target index of
  /// variable i.
  MultiPoly with_vars(const VarSet& target, const std::vector<std::size_t>& map) const;
  /// Base change of the coefficient field (prime field into an extension).
  MultiPoly lift(const FieldPtr& target) const;
  /// Requires that only variable idx occurs.
  UPoly to_upoly(std::size_t idx) const;

  /// Largest monomial first; e.g. "4*t1*t2*y1 + 5*t1*t2 + 1".
  std::string to_string() const;

  int compare(const MultiPoly& o) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.compare(b) == 0; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return a.compare(b) != 0; }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.compare(b) < 0; }

 private:
  FieldPtr field_;
  VarSet vars_;
  Terms terms_;

  void add_term(const Exponents& e, const Element& c);
  void require_compatible(const MultiPoly& o) const;
};

/// Polynomial text grammar: sums and products of integer or a/b literals,
/// variables t<i>, y<i>, u, powers with unsigned exponents, parentheses, and
/// an optional leading minus in any parenthesized expression. In a VarSet
/// without a parameter, 'u' names the generator of an extension field.
MultiPoly parse_poly(std::string_view text, const FieldPtr& field, const VarSet& vars);

/// Parses a field element: "a", "a/b", or a polynomial in u over an
/// extension.
Element parse_element(std::string_view text, const FieldPtr& field);

}  // namespace chowmod
