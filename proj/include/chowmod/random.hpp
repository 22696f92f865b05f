#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "chowmod/totaro.hpp"

namespace chowmod {

/// Per-instance seed: splitmix64 over (seed, FNV-1a(name), index).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long range(long lo, long hi);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Over Q: a/b with |a| <= 9, 1 <= b <= 4. Over finite fields: uniform.
Element random_element(Rng& rng, const FieldPtr& field);
Element random_nonzero(Rng& rng, const FieldPtr& field);
/// Excludes 0 and 1.
Element random_unit_not_one(Rng& rng, const FieldPtr& field);

/// Polynomial in y1..yn of degree <= 1 in each variable (placed in vars).
MultiPoly random_multilinear_y(Rng& rng, const FieldPtr& field, const VarSet& vars);
/// Polynomial in t1..tr of total degree <= deg.
MultiPoly random_t_poly(Rng& rng, const FieldPtr& field, const VarSet& vars, unsigned deg);

/// W = V(1 - t1 t2 g(y1, y2) + h) in PSI, r = 2, with deg_yi g <= 1 and,
/// when higher is set, h = (t1 t2)^2 h'(y) with h' multilinear.
HypersurfaceCycle random_reciprocity_cycle(Rng& rng, const FieldPtr& field, bool higher);

/// Level-0 cycle: 1 to 3 components V(1 - t1...tr g(t)), multiplicities
/// in [-2, 2] minus 0.
HypersurfaceCycle random_level0_cycle(Rng& rng, const FieldPtr& field, unsigned r);

/// Admissible PSI cycle for D_(1,...,1): components V(1 - t1...tr g(t, y))
/// with g multilinear in y.
HypersurfaceCycle random_admissible_cycle(Rng& rng, const FieldPtr& field, unsigned r, unsigned n);

struct DegreePair {
  MultiPoly violator;  ///< some deg_yi = 2, scaled by a random constant
  MultiPoly reduced;   ///< the y_i^2 terms removed, constant term 1
};
DegreePair random_degree_pair(Rng& rng, const FieldPtr& field, unsigned r, unsigned n);

struct PointOffModulus {
  ClosedPoint point;
  ModulusDatum modulus;
};
/// Rational point with nonzero t-coordinates; exponents in [1, max_m].
PointOffModulus random_point_off_modulus(Rng& rng, const FieldPtr& field, unsigned r, unsigned n, unsigned max_m);

/// Random nonzero rational function with numerator and denominator of
/// degree <= deg. Over Q both split into linear factors.
RatFunc random_ratfunc(Rng& rng, const FieldPtr& field, unsigned deg);
/// Monic irreducibles usable as disjoint supports: every linear t - a, and
/// over finite fields also the irreducible quadratics. Over Q the linear
/// factors with |a| <= 6.
std::vector<UPoly> factor_pool(const FieldPtr& field);
/// c * prod f^e over the given factors, e in {-2, -1, 1, 2}, c nonzero.
RatFunc random_ratfunc_from(Rng& rng, const std::vector<UPoly>& factors);

}  // namespace chowmod
