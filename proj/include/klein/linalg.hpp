#pragma once

#include <cstdint>
#include <vector>

namespace klein {

struct MatrixEntry {
  int row;
  int col;
  long long value;
  bool operator==(const MatrixEntry&) const = default;
};

/// Sparse integer matrix; entries have distinct coordinates and nonzero values.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<MatrixEntry> entries;

  SparseIntMatrix transpose() const;
  /// Sort by (row, col), merge duplicates and drop zeros.
  void normalize();
  /// Product this * other, computed exactly with overflow checks.
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  bool is_zero() const { return entries.empty(); }
};

/// Rank over the rationals. The matrix is split into connected components of
/// its row/column incidence graph, and each component is eliminated
/// fraction-free (cancelling row contents), on 64-bit integers while they
/// suffice and on GMP integers otherwise.
std::size_t rank(const SparseIntMatrix& m);

/// Rank over Z/p by sparse elimination; a lower bound for the rational rank.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);

/// Dense Gaussian elimination mod p, kept as an independent probe for tests.
std::size_t dense_rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);

/// Elimination on GMP integers only (no 64-bit fast path); used to check the
/// fast path.
std::size_t rank_bigint(const SparseIntMatrix& m);

}  // namespace klein
