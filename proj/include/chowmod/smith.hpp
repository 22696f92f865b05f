#pragma once

#include <gmpxx.h>

#include <vector>

namespace chowmod {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Diagonal of the Smith normal form (d1 | d2 | ... , nonnegative), of
/// length min(rows, cols).
std::vector<mpz_class> smith_diagonal(IntMatrix m);

/// Invariant factors of Z^generators / (row span of relations), skipping
/// trivial factors. A 0 entry stands for a free Z summand. The trivial group
/// gives an empty vector.
std::vector<mpz_class> abelian_invariants(const IntMatrix& relations, std::size_t generators);

}  // namespace chowmod
