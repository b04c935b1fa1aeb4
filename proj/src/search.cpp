#include "cliffsynth/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "cliffsynth/canon.hpp"

namespace cliffsynth {

std::vector<Gate> gate_options_gl(const BitMatrix& m) {
  const BitMatrix t = transpose(m);
  std::vector<Gate> out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j)
      if (i != j && t.rows_intersect(i, j)) out.push_back(Gate::cnot(i, j));
  return out;
}

std::vector<Gate> gate_options_sp(const SpMatrix& m) {
  const RankMask rm = rank_mask(m);
  auto col_terminal = [&](int c) {
    return rm.r2.col_weight(c) == 1 && rm.r1.col_weight(c) == 0;
  };
  std::vector<Gate> out;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      if (col_terminal(i) && col_terminal(j)) continue;
      for (int pa = 1; pa <= 3; ++pa)
        for (int pb = 1; pb <= 3; ++pb) out.push_back(Gate::tv(pa, pb, i, j));
    }
  return out;
}

namespace {

struct LnTable {
  std::vector<double> v;
  explicit LnTable(int max_w) : v(static_cast<size_t>(max_w) + 1, 0.0) {
    for (int w = 1; w <= max_w; ++w) v[w] = std::log(static_cast<double>(w));
  }
};

// Histogram of heuristic-vector entries. Comparing histograms from the top
// value down (more entries of a high value = larger) matches lexicographic
// comparison of the descending-sorted vectors; from the bottom up (more
// entries of a low value = smaller) matches the ascending sort.
struct Profile {
  std::vector<int> c;
};

int compare_profiles(const Profile& a, const Profile& b, HvecOrder order) {
  const int size = static_cast<int>(a.c.size());
  if (order == HvecOrder::Descending) {
    for (int v = size - 1; v >= 0; --v)
      if (a.c[v] != b.c[v]) return a.c[v] > b.c[v] ? 1 : -1;
  } else {
    for (int v = 0; v < size; ++v)
      if (a.c[v] != b.c[v]) return a.c[v] > b.c[v] ? -1 : 1;
  }
  return 0;
}

// Incremental layering identical to depth(): each gate joins the earliest
// layer above the last one whose support it intersects.
class DepthTracker {
 public:
  explicit DepthTracker(int n) : words_((n + 63) / 64) {}

  int depth() const { return static_cast<int>(layers_.size()); }

  int probe(const Gate& g) const {
    const auto m = mask(g);
    const size_t pos = place(m);
    return static_cast<int>(pos == layers_.size() ? layers_.size() + 1
                                                  : layers_.size());
  }

  void push(const Gate& g) {
    const auto m = mask(g);
    const size_t pos = place(m);
    if (pos == layers_.size()) {
      layers_.push_back(m);
    } else {
      for (int w = 0; w < words_; ++w) layers_[pos][w] |= m[w];
    }
  }

 private:
  std::vector<uint64_t> mask(const Gate& g) const {
    std::vector<uint64_t> m(words_, 0);
    m[g.a >> 6] |= uint64_t{1} << (g.a & 63);
    m[g.b >> 6] |= uint64_t{1} << (g.b & 63);
    return m;
  }

  size_t place(const std::vector<uint64_t>& m) const {
    size_t i = layers_.size();
    while (i > 0 && disjoint(layers_[i - 1], m)) --i;
    return i;
  }

  bool disjoint(const std::vector<uint64_t>& x,
                const std::vector<uint64_t>& y) const {
    for (int w = 0; w < words_; ++w)
      if (x[w] & y[w]) return false;
    return true;
  }

  int words_;
  std::vector<std::vector<uint64_t>> layers_;
};

// Parity-matrix search state: the matrix together with its transpose,
// inverse and inverse-transpose, all updated in O(n) per CNOT (gates are
// involutions, so undo = apply). Row-weight arrays of the four variants give
// every heuristic without rescanning the matrices.
class GlState {
 public:
  explicit GlState(const BitMatrix& m) : n_(m.rows()), a_(m), at_(transpose(m)) {
    auto inv = inverse(m);
    if (!inv) throw std::invalid_argument("matrix is singular");
    ai_ = std::move(*inv);
    ait_ = transpose(ai_);
    for (auto& arr : rw_) arr.assign(n_, 0);
    total_a_ = total_ai_ = 0;
    for (int r = 0; r < n_; ++r) {
      rw_[0][r] = a_.row_weight(r);
      rw_[1][r] = at_.row_weight(r);
      rw_[2][r] = ai_.row_weight(r);
      rw_[3][r] = ait_.row_weight(r);
      total_a_ += rw_[0][r];
      total_ai_ += rw_[2][r];
    }
  }

  int qubits() const { return n_; }
  const BitMatrix& matrix() const { return a_; }
  bool terminal() const { return total_a_ == static_cast<long>(n_); }
  std::string key() const { return a_.key(); }
  std::string cert_key() const { return cert_min_gl(a_).bytes; }

  void apply(const Gate& g) {
    const int i = g.a, j = g.b;
    // Row weights of A: rows holding a one in column i gain or lose the
    // flipped bit in column j. Column i of A is row i of the transpose.
    scan_bits(at_.row(i), [&](int r) {
      const int d = a_.get(r, j) ? -1 : 1;
      rw_[0][r] += d;
      total_a_ += d;
    });
    // Row weights of the inverse-transpose: its update is col_i ^= col_j,
    // so rows holding a one in its column j (= row j of the inverse) change.
    scan_bits(ai_.row(j), [&](int r) {
      rw_[3][r] += ait_.get(r, i) ? -1 : 1;
    });
    a_.xor_cols(j, i);
    at_.xor_rows(j, i);
    total_ai_ -= rw_[2][i];
    ai_.xor_rows(i, j);
    rw_[2][i] = ai_.row_weight(i);
    total_ai_ += rw_[2][i];
    ait_.xor_cols(i, j);
    rw_[1][j] = at_.row_weight(j);
  }
  void undo(const Gate& g) { apply(g); }

  void options(std::vector<Gate>& out) const {
    out.clear();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && at_.rows_intersect(i, j)) out.push_back(Gate::cnot(i, j));
  }

  double scalar(SearchHeuristic h, const LnTable& ln) const {
    if (h == SearchHeuristic::HSum)
      return static_cast<double>(total_a_ + total_ai_) / (2.0 * n_) - 1.0;
    double s = 0;
    for (const auto& arr : rw_)
      for (int w : arr) s += ln.v[w];
    return s / (4.0 * n_);
  }

  int profile_size() const { return n_; }
  void profile(Profile& out) const {
    out.c.assign(n_, 0);
    for (const auto& arr : rw_)
      for (int w : arr) ++out.c[w - 1];
  }

 private:
  template <class Fn>
  void scan_bits(const uint64_t* row, Fn&& fn) const {
    for (int w = 0; w < a_.words_per_row(); ++w) {
      uint64_t bits = row[w];
      while (bits) {
        fn((w << 6) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  int n_;
  BitMatrix a_, at_, ai_, ait_;
  std::array<std::vector<int>, 4> rw_;  // row weights of a, at, ai, ait
  long total_a_ = 0, total_ai_ = 0;
};

// Symplectic search state: the matrix plus its block-rank grid with per-row
// and per-column rank-1/rank-2 counts. A transvection on qubits (a, b) only
// touches grid columns a and b, so updates cost O(n) block recomputations.
class SpState {
 public:
  explicit SpState(const SpMatrix& m) : n_(m.n), p_(m) {
    if (!is_symplectic(m)) throw std::invalid_argument("matrix is not symplectic");
    rank_.assign(static_cast<size_t>(n_) * n_, 0);
    col_r1_.assign(n_, 0);
    col_r2_.assign(n_, 0);
    row_r1_.assign(n_, 0);
    row_r2_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) update_block(i, j);
  }

  int qubits() const { return n_; }
  const SpMatrix& sp() const { return p_; }
  bool terminal() const { return nonzero_ == n_; }
  std::string key() const { return p_.m.key(); }
  std::string cert_key() const { return cert_min_sp(p_).bytes; }

  void apply(const Gate& g) {
    PauliVec v(n_);
    v.set_pauli(g.a, g.pa);
    v.set_pauli(g.b, g.pb);
    apply_transvection(p_.m, v);
    for (int k = 0; k < n_; ++k) {
      update_block(k, g.a);
      update_block(k, g.b);
    }
  }
  void undo(const Gate& g) { apply(g); }

  void options(std::vector<Gate>& out) const {
    out.clear();
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        if (col_terminal(i) && col_terminal(j)) continue;
        for (int pa = 1; pa <= 3; ++pa)
          for (int pb = 1; pb <= 3; ++pb) out.push_back(Gate::tv(pa, pb, i, j));
      }
  }

  double scalar(SearchHeuristic h, const LnTable& ln) const {
    if (h == SearchHeuristic::HSum)
      return static_cast<double>(nonzero_) / n_ - 1.0;
    double s = 0;
    for (int j = 0; j < n_; ++j) s += ln.v[col_r1_[j] + col_r2_[j]];
    for (int i = 0; i < n_; ++i) s += ln.v[row_r1_[i] + row_r2_[i]];
    return s / (2.0 * n_);
  }

  int profile_size() const { return n_ * (n_ - 1) + 1; }
  void profile(Profile& out) const {
    out.c.assign(profile_size(), 0);
    for (int j = 0; j < n_; ++j)
      ++out.c[n_ * col_r2_[j] + col_r1_[j] - n_];
    for (int i = 0; i < n_; ++i)
      ++out.c[n_ * row_r2_[i] + row_r1_[i] - n_];
  }

 private:
  bool col_terminal(int c) const { return col_r2_[c] == 1 && col_r1_[c] == 0; }

  void update_block(int i, int j) {
    uint8_t& slot = rank_[static_cast<size_t>(i) * n_ + j];
    const int next = f_submatrix(p_, i, j).rank();
    if (slot == next) return;
    adjust(i, j, slot, -1);
    slot = static_cast<uint8_t>(next);
    adjust(i, j, slot, 1);
  }

  void adjust(int i, int j, int rank, int d) {
    if (rank == 0) return;
    nonzero_ += d;
    if (rank == 1) {
      col_r1_[j] += d;
      row_r1_[i] += d;
    } else {
      col_r2_[j] += d;
      row_r2_[i] += d;
    }
  }

  int n_;
  SpMatrix p_;
  std::vector<uint8_t> rank_;
  std::vector<int> col_r1_, col_r2_, row_r1_, row_r2_;
  int nonzero_ = 0;
};

struct CoreResult {
  bool ok = false;
  std::vector<Gate> ops;  // in application order; callers reverse
};

template <class State>
CoreResult greedy_core(State& st, const GreedyConfig& cfg) {
  const LnTable ln(st.qubits());
  const bool vec = cfg.heuristic == SearchHeuristic::Vector;
  Profile h_last, h_min, cand, best;
  double h_last_s = 0, h_min_s = 0;
  if (vec) {
    st.profile(h_last);
    h_min = h_last;
  } else {
    h_last_s = st.scalar(cfg.heuristic, ln);
    h_min_s = h_last_s;
  }

  DepthTracker layers(st.qubits());
  std::vector<Gate> ops, opts;
  int wait = 0;
  while (!st.terminal()) {
    st.options(opts);
    bool have = false;
    Gate best_g;
    int best_d = 0;
    double best_s = 0;
    for (const Gate& g : opts) {
      st.apply(g);
      double s = 0;
      if (vec)
        st.profile(cand);
      else
        s = st.scalar(cfg.heuristic, ln);
      int d = 0;
      if (cfg.min_depth) {
        d = layers.probe(g);
        const bool worse = vec ? compare_profiles(cand, h_last, cfg.order) > 0
                               : s > h_last_s;
        if (worse) d += cfg.depth_penalty;
      }
      bool better = !have;
      if (have && d != best_d) better = d < best_d;
      if (have && d == best_d)
        better = vec ? compare_profiles(cand, best, cfg.order) < 0 : s < best_s;
      if (better) {
        have = true;
        best_g = g;
        best_d = d;
        if (vec)
          std::swap(best, cand);
        else
          best_s = s;
      }
      st.undo(g);
    }
    st.apply(best_g);
    ops.push_back(best_g);
    if (cfg.min_depth) layers.push(best_g);
    if (vec)
      h_last = best;
    else
      h_last_s = best_s;
    const bool improved = vec ? compare_profiles(h_last, h_min, cfg.order) < 0
                              : h_last_s < h_min_s;
    if (improved) {
      if (vec)
        h_min = h_last;
      else
        h_min_s = h_last_s;
      wait = 0;
    } else if (++wait > cfg.max_wait) {
      return {false, std::move(ops)};
    }
  }
  return {true, std::move(ops)};
}

template <class State>
CoreResult astar_core(const State& root, const AstarConfig& cfg) {
  if (cfg.heuristic == SearchHeuristic::Vector)
    throw std::invalid_argument("best-first search needs a scalar heuristic");
  if (root.terminal()) return {true, {}};

  const int n = root.qubits();
  const LnTable ln(n);
  const size_t max_q =
      cfg.max_q > 0 ? static_cast<size_t>(cfg.max_q) : (n < 16 ? 100 : 10);

  struct Node {
    int parent;
    Gate op;
  };
  std::vector<Node> arena;
  arena.push_back({-1, Gate{}});

  std::unordered_set<std::string> visited;
  visited.insert(cfg.visited_by_cert ? root.cert_key() : root.key());

  using Entry = std::tuple<double, int, int>;  // (g + r*H, g, insertion id)
  std::multiset<Entry> queue;
  const double h0 = root.scalar(cfg.heuristic, ln);
  queue.insert({cfg.r * h0, 0, 0});

  double best_h = h0;
  int best_g = 0, best_id = 0;
  auto path_to = [&](int id) {
    std::vector<Gate> path;
    for (int cur = id; cur > 0; cur = arena[cur].parent)
      path.push_back(arena[cur].op);
    std::reverse(path.begin(), path.end());
    return path;
  };

  State st = root;
  std::vector<Gate> opts;
  long nodes = 1;
  bool capped = false;
  while (!queue.empty() && !capped) {
    const auto [f_a, g_a, id_a] = *queue.begin();
    queue.erase(queue.begin());
    std::vector<Gate> path = path_to(id_a);
    st = root;
    for (const Gate& g : path) st.apply(g);
    DepthTracker layers(n);
    if (cfg.min_depth)
      for (const Gate& g : path) layers.push(g);

    st.options(opts);
    for (const Gate& g : opts) {
      st.apply(g);
      std::string key = cfg.visited_by_cert ? st.cert_key() : st.key();
      if (visited.insert(std::move(key)).second) {
        const int id = static_cast<int>(arena.size());
        arena.push_back({id_a, g});
        if (st.terminal()) {
          path.push_back(g);
          return {true, std::move(path)};
        }
        const int g_b = cfg.min_depth ? layers.probe(g) : g_a + 1;
        const double h_b = st.scalar(cfg.heuristic, ln);
        queue.insert({g_b + cfg.r * h_b, g_b, id});
        if (h_b < best_h || (h_b == best_h && g_b < best_g)) {
          best_h = h_b;
          best_g = g_b;
          best_id = id;
        }
        if (++nodes >= cfg.max_nodes) {
          capped = true;
          break;
        }
      }
      st.undo(g);
    }
    while (queue.size() > max_q) queue.erase(std::prev(queue.end()));
  }
  return {false, path_to(best_id)};
}

}  // namespace

GlSearchOutcome greedy_synth(const BitMatrix& a, const GreedyConfig& cfg) {
  GlState st(a);
  CoreResult core = greedy_core(st, cfg);
  std::reverse(core.ops.begin(), core.ops.end());
  GlSearchOutcome out;
  out.ok = core.ok;
  out.synth.terminal = st.matrix();
  out.synth.circuit = Circuit{st.qubits(), std::move(core.ops)};
  return out;
}

SpSearchOutcome greedy_synth(const SpMatrix& a, const GreedyConfig& cfg) {
  SpState st(a);
  CoreResult core = greedy_core(st, cfg);
  std::reverse(core.ops.begin(), core.ops.end());
  Circuit circuit{st.qubits(), std::move(core.ops)};
  SpSearchOutcome out;
  out.ok = core.ok;
  if (core.ok) {
    out.synth = make_sp_synth(st.sp(), std::move(circuit));
  } else {
    out.synth.terminal = st.sp();
    out.synth.circuit = std::move(circuit);
  }
  return out;
}

GlSearchOutcome astar_synth(const BitMatrix& a, const AstarConfig& cfg) {
  const GlState root(a);
  CoreResult core = astar_core(root, cfg);
  BitMatrix reached = a;
  for (const Gate& g : core.ops) apply_gate(reached, g);
  std::reverse(core.ops.begin(), core.ops.end());
  GlSearchOutcome out;
  out.ok = core.ok;
  out.synth.terminal = std::move(reached);
  out.synth.circuit = Circuit{root.qubits(), std::move(core.ops)};
  return out;
}

SpSearchOutcome astar_synth(const SpMatrix& a, const AstarConfig& cfg) {
  const SpState root(a);
  CoreResult core = astar_core(root, cfg);
  SpMatrix reached = a;
  for (const Gate& g : core.ops) apply_gate(reached, g);
  std::reverse(core.ops.begin(), core.ops.end());
  Circuit circuit{root.qubits(), std::move(core.ops)};
  SpSearchOutcome out;
  out.ok = core.ok;
  if (core.ok) {
    out.synth = make_sp_synth(std::move(reached), std::move(circuit));
  } else {
    out.synth.terminal = std::move(reached);
    out.synth.circuit = std::move(circuit);
  }
  return out;
}

}  // namespace cliffsynth
