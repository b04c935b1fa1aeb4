#pragma once

#include <optional>

#include "cliffsynth/synth_result.hpp"

namespace cliffsynth {

// Column-operation Gaussian elimination that reduces an invertible matrix to
// a permutation matrix rather than to identity: row by row, the smallest
// unused column with a one becomes the pivot and clears the other candidate
// columns. Returns nullopt when some row has no unused nonzero pivot (the
// matrix is singular). The gate list is reversed so that
// replay(circuit, terminal) reproduces the input.
std::optional<GlSynth> gaussian_synth(const BitMatrix& a);

// Transvection-based reduction of a symplectic matrix to permutation+SQC
// form: for each row, pairs of rank-2 F blocks over unused pivot columns are
// knocked down to rank 1 with one transvection each, then every rank-1 block
// is cleared against the pivot. Returns nullopt when a row holds an even
// number of rank-2 blocks over the unused pivots (impossible for symplectic
// inputs). The gate list is reversed so that replay(circuit, terminal)
// reproduces the input.
std::optional<SpSynth> volanto_synth(const SpMatrix& a);

}  // namespace cliffsynth
