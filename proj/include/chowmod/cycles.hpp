#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowmod/multipoly.hpp"

namespace chowmod {

/// ORIGINAL: box = P^1 minus {1}, faces at 0 and infinity.
/// PSI: box = A^1, faces at 0 and 1 (the image under y -> 1/(1-y)).
enum class Model { Original, Psi };

std::string model_name(Model m);
/// Accepts "original"/"psi" in any case.
Model parse_model(std::string_view text);

enum class FaceValue { Zero, One, Infinity };

/// The two face values of a model; the first is the one entering the
/// boundary with a plus sign before the (-1)^i factor.
///   ORIGINAL: (Infinity, Zero)   PSI: (Zero, One)
std::pair<FaceValue, FaceValue> face_values(Model m);
std::string face_value_name(FaceValue v);

enum class SignConvention { Native, Reversed };

struct ComplexOptions {
  /// Kill y-independent components that appear as faces of level-1 cycles.
  bool level0_degeneracy = true;
  SignConvention sign = SignConvention::Native;
};

/// The divisor D on A^r, a polynomial in t1..tr. For D_m the exponent
/// vector is kept alongside the monomial.
struct ModulusDatum {
  MultiPoly divisor;
  std::optional<std::vector<unsigned>> exponents;

  static ModulusDatum monomial(const FieldPtr& field, const std::vector<unsigned>& m);
  /// Throws InvalidArgument when divisor is a constant or involves y.
  static ModulusDatum general(const MultiPoly& divisor);

  unsigned r() const { return divisor.vars().r; }
  /// m = (1, ..., 1).
  bool is_reduced_monomial() const;
  /// Evaluates the divisor at t-coordinates.
  bool vanishes_at(const std::vector<Element>& t) const;
};

/// Scales to constant term 1 when the constant term is nonzero, otherwise to
/// leading coefficient 1.
MultiPoly normalize_component(const MultiPoly& f);

/// Formal Z-combination of hypersurfaces V(f) in A^r x box^n.
class HypersurfaceCycle {
 public:
  using Terms = std::map<MultiPoly, long>;

  HypersurfaceCycle() = default;
  HypersurfaceCycle(FieldPtr field, unsigned r, unsigned n, Model model);

  /// Adds mult * V(f). Nonzero constants define the empty cycle and are
  /// skipped; the zero polynomial is rejected.
  void add(const MultiPoly& f, long mult = 1);

  const FieldPtr& field() const { return field_; }
  const VarSet& vars() const { return vars_; }
  unsigned r() const { return vars_.r; }
  unsigned n() const { return vars_.n; }
  Model model() const { return model_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HypersurfaceCycle& operator+=(const HypersurfaceCycle& o);
  HypersurfaceCycle& operator-=(const HypersurfaceCycle& o);
  friend HypersurfaceCycle operator+(HypersurfaceCycle a, const HypersurfaceCycle& b) { return a += b; }
  friend HypersurfaceCycle operator-(HypersurfaceCycle a, const HypersurfaceCycle& b) { return a -= b; }
  HypersurfaceCycle scaled(long k) const;

  friend bool operator==(const HypersurfaceCycle& a, const HypersurfaceCycle& b);
  friend bool operator!=(const HypersurfaceCycle& a, const HypersurfaceCycle& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldPtr field_;
  VarSet vars_;
  Model model_ = Model::Psi;
  Terms terms_;

  void require_compatible(const HypersurfaceCycle& o) const;
};

/// Restriction of one defining polynomial to y_i = v, with y_i removed from
/// the variable set. At infinity this is the coefficient of the top power.
MultiPoly restrict_polynomial(const MultiPoly& f, unsigned i, FaceValue v);

/// Face map on cycles; throws ImproperFaceIntersection when a component
/// restricts to zero.
HypersurfaceCycle face_restrict(const HypersurfaceCycle& z, unsigned i, FaceValue v);

/// Independent of some y_i (n >= 1).
bool is_degenerate(const MultiPoly& f);

HypersurfaceCycle boundary(const HypersurfaceCycle& z, const ComplexOptions& options = {});

/// One face: per coordinate either free or a face value.
struct Face {
  std::vector<std::optional<FaceValue>> values;
  std::string to_string() const;
};

struct FaceReport {
  bool pass = true;
  std::vector<Face> violations;
};

/// Checks every proper face (3^n - 1 of them). At infinity the restriction
/// is taken on the multi-homogenization.
FaceReport check_face_condition(const HypersurfaceCycle& z);

enum class ModulusVerdict { Certified, ViolatesNecessary, Unknown };
std::string verdict_name(ModulusVerdict v);

struct ModulusReport {
  ModulusVerdict verdict = ModulusVerdict::Certified;
  /// Per component, in term order.
  std::vector<ModulusVerdict> components;
};

/// PSI model only. Certified when D divides f - 1 and every deg_{y_i} f <= 1;
/// ViolatesNecessary when some deg_{y_i} f >= 2, or D = D_(1,...,1) and
/// t1...tr does not divide f - 1.
ModulusReport check_modulus_codim1(const HypersurfaceCycle& z, const ModulusDatum& d);

/// Component form of the same test (f normalized to constant term 1).
ModulusVerdict modulus_verdict(const MultiPoly& f, const ModulusDatum& d);

/// Converts between the coordinate models by y -> 1/(1-y) (ORIGINAL to PSI)
/// and its inverse, clearing denominators. Factors y_i - 1 of ORIGINAL
/// components (supported off the box) are removed first.
HypersurfaceCycle psi_convert(const HypersurfaceCycle& z, Model target);
MultiPoly convert_polynomial(const MultiPoly& f, Model from, Model to);

}  // namespace chowmod
