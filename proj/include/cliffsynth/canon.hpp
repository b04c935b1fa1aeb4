#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffsynth/bitmatrix.hpp"
#include "cliffsynth/symplectic.hpp"

namespace cliffsynth {

// Undirected graph on at most 64 vertices with a two-color vertex partition:
// r-vertices 0..nr-1, then c-vertices nr..nr+nc-1. Adjacency is kept as one
// neighbor bitmask per vertex.
struct BiGraph {
  int nr = 0;
  int nc = 0;
  std::vector<uint64_t> adj;

  BiGraph() = default;
  BiGraph(int nr_, int nc_);

  int size() const { return nr + nc; }
  void add_edge(int u, int v) {
    adj[u] |= uint64_t{1} << v;
    adj[v] |= uint64_t{1} << u;
  }
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  int edge_count() const;
};

// Canonical form of a BiGraph: `bytes` serializes the relabeled adjacency
// (two graphs get equal bytes exactly when a color-preserving isomorphism
// exists), and labeling[p] is the original vertex placed at canonical
// position p.
struct CanonCert {
  std::string bytes;
  std::vector<int> labeling;
};

// Rows become r-vertices, columns c-vertices, with an edge per matrix one.
BiGraph gl_to_graph(const BitMatrix& a);

// Extends the 2n x 2n matrix with a third block of rows and of columns
// holding the GF(2) sums across the existing two blocks, yielding a 3n x 3n
// matrix; r/c vertices per extended row/column, bipartite edges from the
// ones, plus a triangle linking the three rows of each qubit and likewise
// for columns. Throws on non-symplectic input.
BiGraph sp_to_graph(const SpMatrix& a);

// Canonical labeling by individualization-refinement over color-preserving
// vertex permutations; the certificate is the lexicographically smallest
// serialization over all discrete refinements.
CanonCert canonize(const BiGraph& g);

// Optional external canonizer hook; pass nullptr to restore the built-in.
// Not thread-safe: set once at startup.
using Canonizer = std::function<CanonCert(const BiGraph&)>;
void set_canonizer(Canonizer fn);

CanonCert gl_cert(const BitMatrix& a);
CanonCert sp_cert(const SpMatrix& a);

// Bytewise-minimum certificate over the four variants
// {A, transpose, inverse, inverse-transpose}. Throws on singular input.
CanonCert cert_min_gl(const BitMatrix& a);
CanonCert cert_min_sp(const SpMatrix& a);

// Permutation matrices with a = pr * b * pc, recovered by composing the
// canonical labelings of the two graphs; nullopt when the certificates
// differ. The reconstruction is verified before returning.
std::optional<std::pair<BitMatrix, BitMatrix>> recover_gl_perms(
    const BitMatrix& a, const BitMatrix& b);

// Symplectic matrices (each a qubit permutation combined with single-qubit
// Cliffords) with a = sr * b * sc, decoded from the labeling's action on the
// row and column vertex triples; nullopt when the certificates differ.
std::optional<std::pair<SpMatrix, SpMatrix>> recover_sp_perms(
    const SpMatrix& a, const SpMatrix& b);

}  // namespace cliffsynth
