#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowmod/cycles.hpp"

namespace chowmod {

/// A closed point of A^r x box^n given by coordinates in its residue field.
/// Points over a finite extension are stored by their smallest Frobenius
/// conjugate; points whose coordinates all lie in the prime field are moved
/// down to it.
struct ClosedPoint {
  FieldPtr field;
  std::vector<Element> t;
  std::vector<Element> y;

  /// Residue degree of the field over its prime field.
  unsigned degree() const { return field->degree(); }
  std::string to_string() const;
  int compare(const ClosedPoint& o) const;
  friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) { return a.compare(b) == 0; }
  friend bool operator<(const ClosedPoint& a, const ClosedPoint& b) { return a.compare(b) < 0; }
};

/// Canonical representative; multiplies the multiplicity by the degree
/// drop when the point moves to the prime field.
ClosedPoint canonical_point(const ClosedPoint& p, long* mult_scale = nullptr);

/// Formal Z-combination of closed points of A^r x box^n.
class ZeroCycle {
 public:
  using Terms = std::map<ClosedPoint, long>;

  ZeroCycle() = default;
  ZeroCycle(FieldPtr base, unsigned r, unsigned n, Model model);

  /// Canonicalizes the point (see canonical_point) before merging.
  void add(const ClosedPoint& p, long mult = 1);

  const FieldPtr& base() const { return base_; }
  unsigned r() const { return r_; }
  unsigned n() const { return n_; }
  Model model() const { return model_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree() const;

  ZeroCycle& operator+=(const ZeroCycle& o);
  ZeroCycle& operator-=(const ZeroCycle& o);
  friend ZeroCycle operator+(ZeroCycle a, const ZeroCycle& b) { return a += b; }
  friend ZeroCycle operator-(ZeroCycle a, const ZeroCycle& b) { return a -= b; }
  ZeroCycle scaled(long k) const;
  friend bool operator==(const ZeroCycle& a, const ZeroCycle& b);
  friend bool operator!=(const ZeroCycle& a, const ZeroCycle& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldPtr base_;
  unsigned r_ = 0, n_ = 0;
  Model model_ = Model::Original;
  Terms terms_;

  void require_compatible(const ZeroCycle& o) const;
};

struct PointFaceReport {
  bool pass = true;
  /// (point index in term order, coordinate) pairs that sit on a face or
  /// outside the box.
  std::vector<std::pair<std::size_t, unsigned>> violations;
};

/// No y-coordinate on a face value (0 in ORIGINAL; 0 or 1 in PSI), and in
/// ORIGINAL no y-coordinate equal to 1.
PointFaceReport check_face_condition(const ZeroCycle& z);

/// True iff the divisor does not vanish at any point's t-coordinates.
bool check_modulus_zerocycle(const ZeroCycle& z, const ModulusDatum& d);

/// ORIGINAL to PSI: y -> 1/(1-y); PSI to ORIGINAL: y -> (y-1)/y. Throws
/// UndefinedAtPole.
ClosedPoint convert_point(const ClosedPoint& p, Model from, Model to);
ZeroCycle psi_convert(const ZeroCycle& z, Model target);

/// A closed immersion of A^s (or a subvariety of it) into A^r, given by r
/// polynomials in t1..ts.
struct Embedding {
  FieldPtr field;
  unsigned source_dim = 0;
  std::vector<MultiPoly> coords;

  unsigned target_dim() const { return static_cast<unsigned>(coords.size()); }
  std::vector<Element> apply(const std::vector<Element>& t) const;
  /// g after f: first this, then outer.
  Embedding then(const Embedding& outer) const;
  static Embedding identity(const FieldPtr& field, unsigned dim);
};

/// Push-forward of points (multiplicity 1). With a modulus, every image
/// point must avoid it (ModulusNotAvoided otherwise).
ZeroCycle pushforward(const ZeroCycle& z, const Embedding& e, const ModulusDatum* d = nullptr);

}  // namespace chowmod
