#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliffsynth/bitmatrix.hpp"
#include "cliffsynth/circuit.hpp"
#include "cliffsynth/heuristics.hpp"
#include "cliffsynth/search.hpp"
#include "cliffsynth/symplectic.hpp"
#include "cliffsynth/synth_result.hpp"

namespace cliffsynth {

enum class DbKind : uint8_t { Gl = 0, Sp = 1 };
enum class DbMode : uint8_t { Count = 0, Depth = 1 };

inline constexpr uint32_t kNoParent = 0xFFFFFFFFu;

// One equivalence class: the representative is rebuilt by walking parent
// links from the root, first transforming the parent's gate list to the
// variant selected by (transp, inv) — (0,0) parent itself, (1,0) transpose,
// (0,1) inverse, (1,1) inverse-transpose — then appending `op`. `op` holds a
// single gate in count mode and one depth-one layer in depth mode; it is
// empty only for the root (identity) row.
struct DbRow {
  uint32_t parent = kNoParent;
  uint8_t transp = 0;
  uint8_t inv = 0;
  uint16_t cost = 0;  // BFS shell = gate count (count mode) / depth (depth mode)
  std::vector<Gate> op;
};

// Which of the four orbit variants of a class representative a certificate
// belongs to, in the fixed enumeration order.
enum class DbVariant : uint8_t { Plain = 0, Transpose = 1, Inverse = 2, InvTranspose = 3 };

struct DbIndexEntry {
  uint32_t row = 0;
  DbVariant variant = DbVariant::Plain;
};

// Equivalence-class database over GL(n,2) parity matrices or Sp(2n,2)
// symplectic matrices, one row per class up to qubit relabeling (plus
// single-qubit Cliffords for Sp), transpose and inverse, generated
// breadth-first so row order is nondecreasing in cost. The index maps the
// canonical certificate of each variant of each representative to its row,
// so membership and lookup need a single canonization of the query.
struct TreeDb {
  int n = 0;
  DbKind kind = DbKind::Gl;
  DbMode mode = DbMode::Count;
  std::vector<DbRow> rows;
  std::unordered_map<std::string, DbIndexEntry> index;
};

// Raised when a generation request exceeds the resource guard.
struct DbGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DbOptions {
  // Lifts the default size guard (GL n <= 6, Sp n <= 4) up to the hard cap
  // (GL 7, Sp 5). Callers should surface cost_estimate() before opting in.
  bool allow_large = false;
};

// Human-readable class-count and memory projection for a generation run.
std::string db_resource_estimate(int n, DbKind kind, DbMode mode);

// Exhaustive BFS from the identity: every class representative is expanded
// through all four orbit variants, applying every single gate (count mode)
// or every depth-one layer extending the representative's final layer
// (depth mode); a candidate founds a new row exactly when its class is not
// yet indexed. Deterministic given the fixed gate/variant enumeration.
TreeDb generate_db(int n, DbKind kind, DbMode mode, const DbOptions& opts = {});

// Class representative and its generating circuit: replaying the circuit
// from the identity yields the matrix; the circuit's two-qubit gate count
// (count mode) or depth (depth mode) equals the row cost.
std::pair<BitMatrix, Circuit> retrieve_gl(const TreeDb& db, uint32_t id);
std::pair<SpMatrix, Circuit> retrieve_sp(const TreeDb& db, uint32_t id);

// Minimal-cost synthesis by class lookup: canonize the input, find the
// stored representative variant with the same certificate, recover the
// relabeling sandwich, and conjugate the stored circuit through it. Returns
// nullopt when the input's class is not in the database.
std::optional<GlSynth> optimal_synth(const BitMatrix& a, const TreeDb& db);
std::optional<SpSynth> optimal_synth(const SpMatrix& a, const TreeDb& db);

struct DbStats {
  std::vector<long> per_cost;  // class count per cost 0..max
  long total = 0;
  int max_cost = 0;
};

DbStats class_stats(const TreeDb& db);

struct Regression {
  double r = 0.0;  // Pearson correlation
  double m = 0.0;  // slope
  double b = 0.0;  // intercept
};

// Least-squares fit of optimal cost against the scalar heuristic evaluated
// on every class representative (classes weighted equally). Only the scalar
// heuristics are admissible; throws on degenerate variance (fewer than two
// distinct heuristic values, e.g. n=1).
Regression heuristic_regression(const TreeDb& db, SearchHeuristic heuristic);

// Little-endian binary format, magic "CLFDB1": header (kind, mode, n, row
// count), then per row parent/flags/cost and the gate list. The certificate
// index is rebuilt on load by replaying each row.
void save_db(const TreeDb& db, const std::string& path);
TreeDb load_db(const std::string& path);

}  // namespace cliffsynth
