#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowmod/milnor.hpp"

namespace chowmod {

/// Curve over the point x (base coordinates given as constants) in the
/// ORIGINAL model: t -> (t, 1 - t, (f1 - t)/(1 - t), f3, ..., fn). Its only
/// boundary point is (x; f1, 1 - f1, f3, ..., fn). Throws
/// SteinbergPrecondition when f1 = 1.
ParamCurve totaro_steinberg_curve(const FieldPtr& field, const std::vector<Element>& x, const Element& f1,
                                  const std::vector<Element>& rest = {});

/// The form with third coordinate (f1 - 1)/(1 - t). It meets the faces
/// improperly at t = 1 and t = infinity; kept so that this can be tested.
ParamCurve totaro_steinberg_curve_literal(const FieldPtr& field, const std::vector<Element>& x, const Element& f1,
                                          const std::vector<Element>& rest = {});

/// t -> (x; t, (ft - fg)/(t - fg)). Boundary: -(x; f) - (x; g) + (x; fg).
ParamCurve totaro_mult_curve(const FieldPtr& field, const std::vector<Element>& x, const Element& f,
                             const Element& g);

/// The graph over the t-line of (f1, ..., fn, u pi^r), ORIGINAL model.
/// Throws IndistinctEntries when two coordinates coincide.
ParamCurve xi_curve(const std::vector<RatFunc>& f, const RatFunc& u, const UPoly& pi, int r);

struct CurveCheck {
  bool ok = false;
  ZeroCycle boundary;
  ZeroCycle expected;
  std::string detail;
};

CurveCheck verify_steinberg_curve(const FieldPtr& field, const std::vector<Element>& x, const Element& f1,
                                  const std::vector<Element>& rest = {});
CurveCheck verify_mult_curve(const FieldPtr& field, const std::vector<Element>& x, const Element& f,
                             const Element& g);

/// psi-tilde of delta over the finite places, as a 0-cycle on A^1 x box^n.
ZeroCycle psi_tilde_delta(const FunctionMilnorElement& s);

/// d(xi) = (-1)^n psi-tilde(delta {f1, ..., fn, u pi^r}) over finite places.
CurveCheck verify_xi_curve(const std::vector<RatFunc>& f, const RatFunc& u, const UPoly& pi, int r);

struct SquareCheck {
  bool ok = false;
  std::map<ClosedPoint, MilnorElement> phi_of_boundary;
  std::map<ClosedPoint, MilnorElement> delta_of_theta;
};

/// phi(dC) = (-1)^n delta(theta(C)) for a graph curve with n + 1
/// components; both sides reduced with symbol_reduce before comparing.
SquareCheck verify_commuting_square(const ParamCurve& c);

}  // namespace chowmod
