#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffsynth/bitmatrix.hpp"
#include "cliffsynth/symplectic.hpp"

namespace cliffsynth {

enum class GateKind : uint8_t { Cnot, Tv, Sqc, Swap, Qperm };

// One circuit element. Two-qubit entangling gates are Cnot and Tv (a
// transvection with non-identity Paulis pa on qubit a and pb on qubit b);
// Sqc, Swap and Qperm are free relabeling/cleanup gates that never count
// towards gate totals or depth.
struct Gate {
  GateKind kind = GateKind::Cnot;
  int a = -1;
  int b = -1;
  int pa = 0;  // Tv: pauli code on a; Sqc: the Sqc id
  int pb = 0;  // Tv: pauli code on b
  std::vector<int> perm;

  static Gate cnot(int control, int target) {
    return {GateKind::Cnot, control, target, 0, 0, {}};
  }
  static Gate tv(int pa, int pb, int i, int j) {
    return {GateKind::Tv, i, j, pa, pb, {}};
  }
  static Gate sqc(Sqc s, int q) {
    return {GateKind::Sqc, q, -1, static_cast<int>(s), 0, {}};
  }
  static Gate swap(int i, int j) { return {GateKind::Swap, i, j, 0, 0, {}}; }
  static Gate qperm(std::vector<int> p) {
    return {GateKind::Qperm, -1, -1, 0, 0, std::move(p)};
  }

  bool is_two_qubit() const {
    return kind == GateKind::Cnot || kind == GateKind::Tv;
  }

  friend bool operator==(const Gate& x, const Gate& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.pa == y.pa &&
           x.pb == y.pb && x.perm == y.perm;
  }
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
};

// Pauli vector of a Tv gate.
PauliVec tv_pauli(const Gate& g, int n);

// Right-multiplication of the gate's matrix onto the state map.
void apply_gate(BitMatrix& a, const Gate& g);   // parity-matrix semantics
void apply_gate(SpMatrix& a, const Gate& g);    // symplectic semantics

BitMatrix gate_matrix_gl(const Gate& g, int n);
SpMatrix gate_matrix_sp(const Gate& g, int n);

BitMatrix replay(const Circuit& c, const BitMatrix& start);
SpMatrix replay(const Circuit& c, const SpMatrix& start);

int two_qubit_count(const Circuit& c);

// Two-qubit depth: each gate joins the earliest layer after the last one
// whose qubit support it intersects; single-qubit gates, SWAP and QPERM are
// free.
int depth(const Circuit& c);

// All ways to pick disjoint qubit pairs from s (including the empty set),
// ordered by lexicographically smallest first pair. Nonempty sets are kept
// only when their first pair touches supp.
std::vector<std::vector<std::pair<int, int>>> qpart(
    const std::vector<int>& s, const std::vector<int>& supp);

enum class LayerAlphabet { Cnot, Tv };

// Every single layer over n qubits built from the qpart pair sets: for each
// nonempty pair set, the cross product of per-pair gate choices (both CNOT
// orientations, or the nine transvections).
std::vector<std::vector<Gate>> depth_one_layers(int n,
                                                const std::vector<int>& supp,
                                                LayerAlphabet alphabet);

// Rewrites `gates of c, then QPERM(p)` into `QPERM(p), then relabeled
// gates`, preserving the overall operator.
Circuit commute_perm_to_front(const Circuit& c, const std::vector<int>& p);

// Text format: one gate per line ("CNOT i j", "TV Pi Pj i j", "SQC name q",
// "SWAP i j", "QPERM p0 p1 ..."); compact form joins lines with ';'.
std::string gate_to_text(const Gate& g);
std::string circuit_to_text(const Circuit& c);
std::string circuit_to_compact(const Circuit& c);
std::optional<Circuit> parse_circuit(const std::string& text, int n,
                                     std::string* err = nullptr);

}  // namespace cliffsynth
