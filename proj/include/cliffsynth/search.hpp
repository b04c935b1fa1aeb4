#pragma once

#include <optional>
#include <vector>

#include "cliffsynth/heuristics.hpp"
#include "cliffsynth/synth_result.hpp"

namespace cliffsynth {

enum class SearchHeuristic { Vector, HSum, HProd };

// All CNOT(i, j), i != j, whose control and target columns share a one in
// some row, in ascending (i, j) order. Disjoint columns cannot reduce the
// total weight, so they are pruned.
std::vector<Gate> gate_options_gl(const BitMatrix& m);

// The nine transvections for every qubit pair (i, j), i < j, where at least
// one of the two block-grid columns is not yet in terminal form (one rank-2
// block, no rank-1). Pair-major, transvections in (X, Z, Y) x (X, Z, Y)
// order.
std::vector<Gate> gate_options_sp(const SpMatrix& m);

struct GreedyConfig {
  SearchHeuristic heuristic = SearchHeuristic::Vector;
  bool min_depth = false;
  // Abandon after this many consecutive gates without improving the best
  // heuristic seen (local-minimum detector).
  int max_wait = 10;
  // Added to the candidate depth when a gate worsens the heuristic.
  int depth_penalty = 10000;
  HvecOrder order = HvecOrder::Ascending;
};

struct AstarConfig {
  SearchHeuristic heuristic = SearchHeuristic::HSum;  // Vector not supported
  double r = 3.0;     // heuristic scale in the priority g + r*H
  int max_q = 0;      // queue bound; <= 0 picks 100 for n < 16, else 10
  bool min_depth = false;
  // Key the visited set by equivalence-class certificate instead of raw
  // matrix bytes (stronger pruning, higher per-node cost).
  bool visited_by_cert = false;
  // Safety valve for unsolvable-under-truncation instances.
  long max_nodes = 10'000'000;
};

// ok: synth satisfies the full synthesis contract. !ok (greedy abandonment
// or A* queue exhaustion): terminal holds the best matrix reached and
// circuit the ops to it — replay(circuit, terminal) still equals the input —
// but the terminal is not in reduced form and the decomposition fields are
// empty.
struct GlSearchOutcome {
  bool ok = false;
  GlSynth synth;
};

struct SpSearchOutcome {
  bool ok = false;
  SpSynth synth;
};

// Steepest-descent synthesis: at each step applies the gate option
// minimizing (depth-with-penalty, heuristic) in depth mode or the heuristic
// alone in count mode, stopping when the heuristic hits zero. Ties go to the
// earliest option in gate_options order. Throws std::invalid_argument on
// singular input.
GlSearchOutcome greedy_synth(const BitMatrix& a, const GreedyConfig& cfg);
SpSearchOutcome greedy_synth(const SpMatrix& a, const GreedyConfig& cfg);

// Best-first search with priority (g + r*H, g, insertion order), a visited
// set keyed by raw matrix bytes, and a queue truncated to max_q entries
// (largest priorities evicted) after each expansion. g is the path gate
// count, or the path depth in depth mode. Returns the first generated node
// whose heuristic is zero. Throws std::invalid_argument on singular input or
// a Vector heuristic.
GlSearchOutcome astar_synth(const BitMatrix& a, const AstarConfig& cfg);
SpSearchOutcome astar_synth(const SpMatrix& a, const AstarConfig& cfg);

}  // namespace cliffsynth
