#pragma once

#include <compare>
#include <vector>

#include "cliffsynth/bitmatrix.hpp"
#include "cliffsynth/symplectic.hpp"

namespace cliffsynth {

enum class HvecOrder { Descending, Ascending };

// Sorted column-sum profile, minimized lexicographically by the vector-guided
// greedy search. Entries are rationals scaled by `denom` (1 for parity
// matrices, n for symplectic ones, where rank-1 blocks weigh 1/n).
//
// The default ascending sort puts solved columns first, so minimization
// rewards clearing whole columns; it keeps the large-instance abandonment
// rate at zero where descending-lex gets stuck, which is why it is the
// default. Both orders stay available for benchmarking.
struct HVector {
  std::vector<int> entries;
  int denom = 1;

  bool is_zero() const {
    for (int e : entries)
      if (e) return false;
    return true;
  }
  friend std::strong_ordering operator<=>(const HVector& a, const HVector& b) {
    return a.entries <=> b.entries;
  }
  friend bool operator==(const HVector& a, const HVector& b) {
    return a.entries == b.entries;
  }
};

// Total number of ones.
long h_sum(const BitMatrix& a);

// Sum of natural logs of the (raw) column sums; rejects zero columns.
double h_prod(const BitMatrix& a);

// Scalar costs normalised to zero on permutation matrices.
double H_sum_gl(const BitMatrix& a);
double H_prod_gl(const BitMatrix& a);

// Sorted concatenation of the column sums (each minus one) of A, its
// transpose, inverse and inverse-transpose; zero exactly on permutations.
HVector h_vector_gl(const BitMatrix& a, HvecOrder order = HvecOrder::Ascending);

// Union of the rank-1 and rank-2 block indicators (disjoint supports).
BitMatrix r12_matrix(const SpMatrix& a);

// Symplectic analogues over the block-rank grid; rank-1 blocks contribute
// 1/n so clearing rank-2 blocks always dominates.
HVector h_vector_sp(const SpMatrix& a, HvecOrder order = HvecOrder::Ascending);
double H_sum_sp(const SpMatrix& a);
double H_prod_sp(const SpMatrix& a);

}  // namespace cliffsynth
