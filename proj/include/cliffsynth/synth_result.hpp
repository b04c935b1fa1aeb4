#pragma once

#include <utility>
#include <vector>

#include "cliffsynth/bitmatrix.hpp"
#include "cliffsynth/circuit.hpp"
#include "cliffsynth/symplectic.hpp"

namespace cliffsynth {

// Result of parity-matrix synthesis. The contract shared by every
// synthesiser: replay(circuit, terminal) equals the input matrix, terminal
// is a permutation matrix, and circuit contains only CNOT gates.
struct GlSynth {
  BitMatrix terminal;
  Circuit circuit;

  // Circuit equal to the input when replayed from identity: the terminal
  // permutation (elided when trivial) followed by the gate list.
  Circuit full_circuit() const;
};

// Result of symplectic synthesis: replay(circuit, terminal) equals the
// input, terminal is a qubit permutation combined with single-qubit
// Cliffords, and circuit contains only two-qubit gates. perm and sqcs are
// the decomposition of terminal: perm[i] is the pivot column of row i and
// sqcs lists the non-identity single-qubit Cliffords by qubit.
struct SpSynth {
  SpMatrix terminal;
  Circuit circuit;
  std::vector<int> perm;
  std::vector<std::pair<int, Sqc>> sqcs;

  Circuit full_circuit() const;
};

// Extracts perm[i] = the column holding the single one of row i. Requires a
// permutation matrix.
std::vector<int> permutation_of(const BitMatrix& p);

struct TerminalParts {
  std::vector<int> perm;
  std::vector<std::pair<int, Sqc>> sqcs;  // non-identity blocks, by qubit
};

// Splits a permutation+single-qubit-Clifford form matrix into the qubit
// permutation and the per-qubit Clifford blocks, so that the matrix equals
// replay([SQC gates..., QPERM], identity). Requires is_perm_sqc(t).
TerminalParts decompose_terminal(const SpMatrix& t);

// Builds an SpSynth from a reduced matrix and its gate list, filling the
// perm/sqcs decomposition. Requires is_perm_sqc(terminal).
SpSynth make_sp_synth(SpMatrix terminal, Circuit circuit);

}  // namespace cliffsynth
