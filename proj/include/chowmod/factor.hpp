#pragma once

#include <vector>

#include "chowmod/upoly.hpp"

namespace chowmod {

struct Factor {
  UPoly poly;  // monic
  unsigned multiplicity = 1;
  /// Over Q: a cofactor without rational roots whose degree exceeds the
  /// split bound. Its irreducibility is not asserted.
  bool unfactored = false;
};

struct Factorization {
  Element unit;  // leading coefficient of the input
  std::vector<Factor> factors;

  bool complete() const;
  /// unit * prod(factor^multiplicity)
  UPoly expand() const;
};

struct FactorOptions {
  /// Over Q, root-free cofactors of degree above this bound are returned as
  /// unfactored.
  int rational_split_bound = 1;
};

/// Over finite fields: complete factorization (square-free decomposition,
/// distinct-degree, Cantor-Zassenhaus). Over Q: rational roots with
/// multiplicity plus at most one root-free cofactor. Over extensions of Q:
/// only the unit and the monic input as an unfactored cofactor.
Factorization factor_univariate(const UPoly& p, const FactorOptions& options = {});

/// Roots in the coefficient field, with multiplicity.
std::vector<std::pair<Element, unsigned>> rational_roots(const UPoly& p);

/// Throws UnsupportedExtension when irreducibility cannot be decided
/// (degree >= 4 over Q).
bool is_irreducible(const UPoly& p);

}  // namespace chowmod
