#include "chowmod/smith.hpp"

#include <algorithm>
#include <utility>

#include "chowmod/error.hpp"

namespace chowmod {

namespace {

// Moves a nonzero entry of minimal absolute value in the trailing block to
// (k, k). Returns false when the block is zero.
bool pivot(IntMatrix& a, std::size_t k) {
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t bi = rows, bj = cols;
  for (std::size_t i = k; i < rows; ++i)
    for (std::size_t j = k; j < cols; ++j)
      if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
        bi = i;
        bj = j;
      }
  if (bi == rows) return false;
  std::swap(a[k], a[bi]);
  for (auto& row : a) std::swap(row[k], row[bj]);
  return true;
}

}  // namespace

std::vector<mpz_class> smith_diagonal(IntMatrix a) {
  if (a.empty() || a[0].empty()) return {};
  std::size_t rows = a.size(), cols = a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) fail(ErrorCode::InvalidArgument, "ragged matrix");
  std::size_t n = std::min(rows, cols);
  for (std::size_t k = 0; k < n; ++k) {
    if (!pivot(a, k)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][k].get_mpz_t(), a[k][k].get_mpz_t());
        for (std::size_t j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[k][j].get_mpz_t(), a[k][k].get_mpz_t());
        for (std::size_t i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) clean = false;
      }
      if (clean) {
        // Divisibility: the pivot must divide the rest of the block.
        std::size_t bad_i = rows;
        for (std::size_t i = k + 1; i < rows && bad_i == rows; ++i)
          for (std::size_t j = k + 1; j < cols; ++j)
            if (a[i][j] % a[k][k] != 0) {
              bad_i = i;
              break;
            }
        if (bad_i == rows) break;
        for (std::size_t j = k; j < cols; ++j) a[k][j] += a[bad_i][j];
      }
      pivot(a, k);
    }
  }
  std::vector<mpz_class> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = abs(a[k][k]);
  return d;
}

std::vector<mpz_class> abelian_invariants(const IntMatrix& relations, std::size_t generators) {
  std::vector<mpz_class> out;
  std::vector<mpz_class> d;
  if (!relations.empty() && generators > 0) d = smith_diagonal(relations);
  std::size_t rank = 0;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++rank;
    if (x != 1) out.push_back(x);
  }
  for (std::size_t i = rank; i < generators; ++i) out.push_back(0);
  return out;
}

}  // namespace chowmod
