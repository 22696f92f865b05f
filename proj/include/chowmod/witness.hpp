#pragma once

#include "chowmod/serialize.hpp"

namespace chowmod {

/// Self-contained witness certificate. Valid iff every transcript entry has
/// status "pass".
struct Certificate {
  Json claim = Json::object();
  Json witnesses = Json::array();
  Json transcript = Json::array();
  Json convention = Json::object();

  bool valid() const;
  Json to_json() const;
};

/// The residue invariant of a level-1 PSI cycle: per component, the
/// coefficient of y1 in ((1 - f)/(t1...tr)) at t = 0, extended Z-linearly.
/// Residue convention: res at y1 = infinity of (alpha*y1 + beta) is alpha.
/// Throws WrongLevel, WrongModel, NotNormalized (constant term not 1, or
/// t1...tr does not divide f - 1) and DegreeTooHigh (deg_y1 f >= 2).
Element rho(const HypersurfaceCycle& z, const ModulusDatum* d = nullptr);

/// rho(dW) = 0 for an admissible level-2 cycle, with the four face values
/// rho(W|y1=0), rho(W|y1=1), rho(W|y2=0), rho(W|y2=1) recorded. Throws
/// NotAdmissible when W fails the face or modulus check.
Certificate verify_rho_reciprocity(const HypersurfaceCycle& w, const ModulusDatum& d, const ComplexOptions& options = {});

/// W = sum m V(1 - t1...tr g y1) for Z = sum m V(1 - t1...tr g), checked to be
/// admissible with dW = Z (level-0 degeneracy off). Throws WrongLevel,
/// NotPresentable and NotAdmissible.
Certificate bounding_surface(const HypersurfaceCycle& z, const ModulusDatum& d, SignConvention sign = SignConvention::Native);

struct GeneratorResult {
  HypersurfaceCycle cycle;
  Certificate certificate;
};

/// Z_a = V(1 - t1...tr a y1) with a certificate: admissible for D_(1,...,1),
/// dZ_a = 0 under the level-0 degeneracy flag, rho(Z_a) = a.
GeneratorResult generator_cycle(const Element& a, unsigned r);

enum class ZeroCycleVariant { Plain, ProductBase };
std::string variant_name(ZeroCycleVariant v);
ZeroCycleVariant parse_variant(std::string_view text);

/// Witness for a point z = (c; y) off a monomial modulus. The hyperbola
/// t_a t_b = c_a c_b runs through z with the other coordinates fixed; for
/// Plain (a, b) = (1, 2), for ProductBase the first base_dims coordinates
/// are the base point and (a, b) are the next two. For n = 0 the graph of
/// s - c_a over the hyperbola bounds [z]. For n >= 1 the certificate
/// reports the symbol phi(z) as the obstruction, with Steinberg vanishing
/// (and the K2 oracle when n = 2) over finite fields.
Certificate zero_cycle_vanishing_witness(const ClosedPoint& z, const ModulusDatum& d,
                                         ZeroCycleVariant variant = ZeroCycleVariant::Plain, unsigned base_dims = 0);

/// Re-runs every check from the certificate's claim and witnesses. True iff
/// the recomputed transcript matches the stored one and all entries pass.
/// Throws MalformedCertificate when the JSON does not have the expected
/// shape.
bool verify_certificate(const Json& certificate);

}  // namespace chowmod
