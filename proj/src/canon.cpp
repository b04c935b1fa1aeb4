#include "cliffsynth/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cliffsynth {

BiGraph::BiGraph(int nr_, int nc_) : nr(nr_), nc(nc_) {
  if (nr_ < 0 || nc_ < 0 || nr_ + nc_ > 64)
    throw std::invalid_argument("graph limited to 64 vertices");
  adj.assign(static_cast<size_t>(nr_ + nc_), 0);
}

int BiGraph::edge_count() const {
  int twice = 0;
  for (const uint64_t m : adj) twice += std::popcount(m);
  return twice / 2;
}

BiGraph gl_to_graph(const BitMatrix& a) {
  BiGraph g(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) g.add_edge(i, a.rows() + j);
  return g;
}

BiGraph sp_to_graph(const SpMatrix& a) {
  if (!is_symplectic(a)) throw std::invalid_argument("matrix not symplectic");
  const int n = a.n;
  // Extended 3n x 3n matrix: the third row block is the per-column sum of
  // the first two row blocks, and the third column block the per-row sum of
  // the first two column blocks (including across the new rows).
  BitMatrix ext(3 * n, 3 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) ext.set(i, j, a.m.get(i, j));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < 2 * n; ++j)
      ext.set(2 * n + k, j, a.m.get(k, j) ^ a.m.get(n + k, j));
  for (int i = 0; i < 3 * n; ++i)
    for (int l = 0; l < n; ++l)
      ext.set(i, 2 * n + l, ext.get(i, l) ^ ext.get(i, n + l));

  BiGraph g(3 * n, 3 * n);
  for (int i = 0; i < 3 * n; ++i)
    for (int j = 0; j < 3 * n; ++j)
      if (ext.get(i, j)) g.add_edge(i, 3 * n + j);
  for (int k = 0; k < n; ++k) {
    const int r0 = k, r1 = n + k, r2 = 2 * n + k;
    g.add_edge(r0, r1);
    g.add_edge(r0, r2);
    g.add_edge(r1, r2);
    const int c0 = 3 * n + k, c1 = 3 * n + n + k, c2 = 3 * n + 2 * n + k;
    g.add_edge(c0, c1);
    g.add_edge(c0, c2);
    g.add_edge(c1, c2);
  }
  return g;
}

namespace {

// Splits the ordered cell list until every cell has constant degree into
// every other cell. Splitter masks are snapshots; fragments of a split cell
// are re-queued, so stale entries are harmless. All iteration orders are
// positional or keyed by degree, which keeps the ordered result invariant
// under relabeling.
void refine(const std::vector<uint64_t>& adj, std::vector<uint64_t>& cells,
            std::vector<uint64_t>& work) {
  while (!work.empty()) {
    const uint64_t w = work.back();
    work.pop_back();
    for (size_t ci = 0; ci < cells.size(); ++ci) {
      const uint64_t x = cells[ci];
      if (std::popcount(x) <= 1) continue;
      std::map<int, uint64_t> groups;
      for (uint64_t rest = x; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        groups[std::popcount(adj[v] & w)] |= uint64_t{1} << v;
      }
      if (groups.size() <= 1) continue;
      std::vector<uint64_t> frags;
      frags.reserve(groups.size());
      for (const auto& [deg, mask] : groups) frags.push_back(mask);
      cells[ci] = frags[0];
      cells.insert(cells.begin() + static_cast<long>(ci) + 1,
                   frags.begin() + 1, frags.end());
      for (const uint64_t m : frags) work.push_back(m);
      ci += frags.size() - 1;
    }
  }
}

struct DisjointSet {
  std::array<uint8_t, 64> parent;
  void reset(int v) {
    for (int i = 0; i < v; ++i) parent[i] = static_cast<uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = static_cast<uint8_t>(a);
  }
};

class CanonSearch {
public:
  explicit CanonSearch(const BiGraph& g) : g_(g), v_(g.size()) {}

  CanonCert run() {
    std::vector<uint64_t> cells;
    if (g_.nr > 0) cells.push_back(low_mask(g_.nr));
    if (g_.nc > 0) cells.push_back(low_mask(g_.nc + g_.nr) & ~low_mask(g_.nr));
    std::vector<uint64_t> work = cells;
    refine(g_.adj, cells, work);
    descend(cells);
    return {std::move(best_), std::move(best_lab_)};
  }

private:
  static uint64_t low_mask(int k) {
    return k >= 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
  }

  void descend(const std::vector<uint64_t>& cells) {
    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i)
      if (std::popcount(cells[i]) > 1) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) {
      leaf(cells);
      return;
    }
    const uint64_t cell = cells[static_cast<size_t>(target)];
    std::vector<int> explored;
    for (uint64_t rest = cell; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (in_explored_orbit(v, explored)) continue;
      explored.push_back(v);
      std::vector<uint64_t> next = cells;
      const uint64_t vbit = uint64_t{1} << v;
      next[static_cast<size_t>(target)] = vbit;
      next.insert(next.begin() + target + 1, cell & ~vbit);
      std::vector<uint64_t> work = {vbit, cell & ~vbit};
      refine(g_.adj, next, work);
      prefix_.push_back(v);
      descend(next);
      prefix_.pop_back();
    }
  }

  // True when a discovered automorphism that fixes every individualized
  // vertex so far maps v into the orbit of an already-explored branch.
  bool in_explored_orbit(int v, const std::vector<int>& explored) {
    if (explored.empty() || autos_.empty()) return false;
    uf_.reset(v_);
    for (const auto& aut : autos_) {
      bool fixes = true;
      for (const int p : prefix_)
        if (aut[static_cast<size_t>(p)] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int w = 0; w < v_; ++w) uf_.unite(w, aut[static_cast<size_t>(w)]);
    }
    const int rv = uf_.find(v);
    for (const int u : explored)
      if (uf_.find(u) == rv) return true;
    return false;
  }

  void leaf(const std::vector<uint64_t>& cells) {
    std::vector<int> lab(static_cast<size_t>(v_));
    for (int p = 0; p < v_; ++p)
      lab[static_cast<size_t>(p)] = std::countr_zero(cells[static_cast<size_t>(p)]);
    std::string cert = serialize(lab);
    if (best_.empty() || cert < best_) {
      best_ = std::move(cert);
      best_lab_ = std::move(lab);
      return;
    }
    if (cert == best_ && autos_.size() < kMaxAutos) {
      std::array<uint8_t, 64> aut{};
      for (int p = 0; p < v_; ++p)
        aut[static_cast<size_t>(lab[static_cast<size_t>(p)])] =
            static_cast<uint8_t>(best_lab_[static_cast<size_t>(p)]);
      autos_.push_back(aut);
    }
  }

  std::string serialize(const std::vector<int>& lab) const {
    std::string out;
    out.reserve(4 + static_cast<size_t>(v_ * (v_ - 1) / 2 + 7) / 8);
    out.push_back(static_cast<char>(g_.nr & 0xff));
    out.push_back(static_cast<char>((g_.nr >> 8) & 0xff));
    out.push_back(static_cast<char>(g_.nc & 0xff));
    out.push_back(static_cast<char>((g_.nc >> 8) & 0xff));
    uint8_t acc = 0;
    int nbits = 0;
    for (int p = 0; p < v_; ++p) {
      const uint64_t row = g_.adj[static_cast<size_t>(lab[static_cast<size_t>(p)])];
      for (int q = p + 1; q < v_; ++q) {
        acc = static_cast<uint8_t>(
            (acc << 1) | ((row >> lab[static_cast<size_t>(q)]) & 1));
        if (++nbits == 8) {
          out.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    }
    if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
    return out;
  }

  static constexpr size_t kMaxAutos = 128;

  const BiGraph& g_;
  int v_;
  std::string best_;
  std::vector<int> best_lab_;
  std::vector<std::array<uint8_t, 64>> autos_;
  std::vector<int> prefix_;
  DisjointSet uf_;
};

Canonizer g_canonizer;

}  // namespace

void set_canonizer(Canonizer fn) { g_canonizer = std::move(fn); }

CanonCert canonize(const BiGraph& g) {
  if (g_canonizer) return g_canonizer(g);
  return CanonSearch(g).run();
}

CanonCert gl_cert(const BitMatrix& a) { return canonize(gl_to_graph(a)); }

CanonCert sp_cert(const SpMatrix& a) { return canonize(sp_to_graph(a)); }

CanonCert cert_min_gl(const BitMatrix& a) {
  const std::optional<BitMatrix> inv = inverse(a);
  if (!inv) throw std::invalid_argument("matrix not invertible");
  CanonCert best = gl_cert(a);
  for (const BitMatrix& v :
       {transpose(a), *inv, transpose(*inv)}) {
    CanonCert c = gl_cert(v);
    if (c.bytes < best.bytes) best = std::move(c);
  }
  return best;
}

CanonCert cert_min_sp(const SpMatrix& a) {
  if (!is_symplectic(a)) throw std::invalid_argument("matrix not symplectic");
  CanonCert best = sp_cert(a);
  for (const SpMatrix& v :
       {sp_transpose(a), sp_inverse(a), sp_transpose(sp_inverse(a))}) {
    CanonCert c = sp_cert(v);
    if (c.bytes < best.bytes) best = std::move(c);
  }
  return best;
}

namespace {

// Vertex map sending graph(b) onto graph(a), from the two canonical
// labelings: phi[lab_b[p]] = lab_a[p].
std::vector<int> compose_labelings(const CanonCert& ca, const CanonCert& cb) {
  std::vector<int> phi(ca.labeling.size());
  for (size_t p = 0; p < phi.size(); ++p)
    phi[static_cast<size_t>(cb.labeling[p])] = ca.labeling[p];
  return phi;
}

}  // namespace

std::optional<std::pair<BitMatrix, BitMatrix>> recover_gl_perms(
    const BitMatrix& a, const BitMatrix& b) {
  const CanonCert ca = gl_cert(a), cb = gl_cert(b);
  if (ca.bytes != cb.bytes) return std::nullopt;
  const int n = a.rows();
  const std::vector<int> phi = compose_labelings(ca, cb);
  BitMatrix pr(n, n), pc(n, n);
  for (int i = 0; i < n; ++i) pr.set(phi[static_cast<size_t>(i)], i, true);
  for (int j = 0; j < n; ++j)
    pc.set(j, phi[static_cast<size_t>(n + j)] - n, true);
  if (!(mul(mul(pr, b), pc) == a))
    throw std::logic_error("labeling composition failed to reconstruct");
  return std::make_pair(std::move(pr), std::move(pc));
}

std::optional<std::pair<SpMatrix, SpMatrix>> recover_sp_perms(
    const SpMatrix& a, const SpMatrix& b) {
  const CanonCert ca = sp_cert(a), cb = sp_cert(b);
  if (ca.bytes != cb.bytes) return std::nullopt;
  const int n = a.n;
  const std::vector<int> phi = compose_labelings(ca, cb);
  // Row u of b equals the phi-image row of the extended matrix of a: either
  // a genuine row x < 2n or, for x >= 2n, the sum of rows x-2n and x-n. The
  // resulting basis-change matrices are qubit permutations with invertible
  // per-qubit blocks, hence symplectic.
  const auto set_extended_row = [n](BitMatrix& m, int row, int x) {
    if (x < 2 * n) {
      m.set(row, x, true);
    } else {
      m.set(row, x - 2 * n, true);
      m.set(row, x - n, true);
    }
  };
  BitMatrix l(2 * n, 2 * n), r(2 * n, 2 * n);
  for (int u = 0; u < 2 * n; ++u)
    set_extended_row(l, u, phi[static_cast<size_t>(u)]);
  for (int j = 0; j < 2 * n; ++j)
    set_extended_row(r, j, phi[static_cast<size_t>(3 * n + j)] - 3 * n);
  const SpMatrix lm(n, std::move(l)), rm(n, std::move(r));
  assert(is_symplectic(lm) && is_symplectic(rm));
  SpMatrix sr = sp_inverse(lm);
  SpMatrix sc = sp_inverse(sp_transpose(rm));
  if (!(mul(mul(sr.m, b.m), sc.m) == a.m))
    throw std::logic_error("labeling composition failed to reconstruct");
  return std::make_pair(std::move(sr), std::move(sc));
}

}  // namespace cliffsynth
