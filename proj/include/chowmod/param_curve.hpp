#pragma once

#include <string>
#include <vector>

#include "chowmod/ratfunc.hpp"
#include "chowmod/zero_cycle.hpp"

namespace chowmod {

/// A rational curve P^1 -> A^r x box^n, s -> (base(s); components(s)).
/// Base coordinates may be constants (a curve over a point) or functions.
struct ParamCurve {
  FieldPtr field;
  Model model = Model::Original;
  std::vector<RatFunc> base;
  std::vector<RatFunc> components;

  unsigned r() const { return static_cast<unsigned>(base.size()); }
  unsigned n() const { return static_cast<unsigned>(components.size()); }
  /// Throws InvalidArgument when a component is identically a face value
  /// or the excluded value of the model.
  void validate() const;
  std::string to_string() const;
};

/// Boundary of a parametric curve: for each coordinate i and face value v,
/// the places where component i takes the value v, weighted by the order of
/// contact and the model's boundary sign. Points whose base coordinates have
/// a pole, or where another coordinate hits the excluded value, are dropped;
/// another coordinate on a face value is an ImproperBoundary.
ZeroCycle param_curve_boundary(const ParamCurve& c, SignConvention sign = SignConvention::Native);

/// Push-forward of a curve along an embedding of its base space. With a
/// modulus, checks that the image of the curve avoids it.
ParamCurve pushforward(const ParamCurve& c, const Embedding& e, const ModulusDatum* d = nullptr);

/// Evaluates a polynomial in t1..tr at rational functions.
RatFunc evaluate_at(const MultiPoly& p, const std::vector<RatFunc>& values);

}  // namespace chowmod
