#include "cliffsynth/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cliffsynth {

PauliVec tv_pauli(const Gate& g, int n) {
  if (g.kind != GateKind::Tv) throw std::invalid_argument("not a tv gate");
  PauliVec v(n);
  v.set_pauli(g.a, g.pa);
  v.set_pauli(g.b, g.pb);
  return v;
}

namespace {

void permute_cols(BitMatrix& a, const std::vector<int>& col_map) {
  // col k of the input becomes col col_map[k] of the result
  BitMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, col_map[c], true);
  a = out;
}

void check_pair(const Gate& g, int n) {
  if (g.a == g.b || g.a < 0 || g.b < 0 || g.a >= n || g.b >= n)
    throw std::invalid_argument("gate qubits out of range");
}

}  // namespace

void apply_gate(BitMatrix& a, const Gate& g) {
  const int n = a.cols();
  switch (g.kind) {
    case GateKind::Cnot:
      check_pair(g, n);
      a.xor_cols(g.b, g.a);
      return;
    case GateKind::Swap: {
      check_pair(g, n);
      for (int r = 0; r < a.rows(); ++r) {
        const bool x = a.get(r, g.a), y = a.get(r, g.b);
        a.set(r, g.a, y);
        a.set(r, g.b, x);
      }
      return;
    }
    case GateKind::Qperm: {
      if (static_cast<int>(g.perm.size()) != n)
        throw std::invalid_argument("qperm size mismatch");
      permute_cols(a, g.perm);
      return;
    }
    default:
      throw std::invalid_argument("gate kind not valid on parity matrices");
  }
}

void apply_gate(SpMatrix& a, const Gate& g) {
  const int n = a.n;
  switch (g.kind) {
    case GateKind::Cnot:
      check_pair(g, n);
      a.m.xor_cols(g.b, g.a);              // X_c -> X_c X_t
      a.m.xor_cols(n + g.a, n + g.b);      // Z_t -> Z_c Z_t
      return;
    case GateKind::Tv:
      check_pair(g, n);
      apply_transvection(a.m, tv_pauli(g, n));
      return;
    case GateKind::Sqc: {
      if (g.a < 0 || g.a >= n) throw std::invalid_argument("bad sqc qubit");
      const auto b = sqc_block(static_cast<Sqc>(g.pa));
      const int q = g.a;
      for (int r = 0; r < 2 * n; ++r) {
        const bool x = a.m.get(r, q), z = a.m.get(r, n + q);
        a.m.set(r, q, (x & b[0][0]) ^ (z & b[1][0]));
        a.m.set(r, n + q, (x & b[0][1]) ^ (z & b[1][1]));
      }
      return;
    }
    case GateKind::Swap: {
      check_pair(g, n);
      for (int r = 0; r < 2 * n; ++r) {
        bool x = a.m.get(r, g.a), y = a.m.get(r, g.b);
        a.m.set(r, g.a, y);
        a.m.set(r, g.b, x);
        x = a.m.get(r, n + g.a);
        y = a.m.get(r, n + g.b);
        a.m.set(r, n + g.a, y);
        a.m.set(r, n + g.b, x);
      }
      return;
    }
    case GateKind::Qperm: {
      if (static_cast<int>(g.perm.size()) != n)
        throw std::invalid_argument("qperm size mismatch");
      std::vector<int> col_map(2 * n);
      for (int k = 0; k < n; ++k) {
        col_map[k] = g.perm[k];
        col_map[n + k] = n + g.perm[k];
      }
      permute_cols(a.m, col_map);
      return;
    }
  }
}

BitMatrix gate_matrix_gl(const Gate& g, int n) {
  BitMatrix m = BitMatrix::identity(n);
  apply_gate(m, g);
  return m;
}

SpMatrix gate_matrix_sp(const Gate& g, int n) {
  SpMatrix m(n);
  apply_gate(m, g);
  return m;
}

BitMatrix replay(const Circuit& c, const BitMatrix& start) {
  BitMatrix m = start;
  for (const Gate& g : c.gates) apply_gate(m, g);
  return m;
}

SpMatrix replay(const Circuit& c, const SpMatrix& start) {
  SpMatrix m = start;
  for (const Gate& g : c.gates) apply_gate(m, g);
  return m;
}

int two_qubit_count(const Circuit& c) {
  int k = 0;
  for (const Gate& g : c.gates) k += g.is_two_qubit();
  return k;
}

int depth(const Circuit& c) {
  const int words = (c.n + 63) / 64;
  std::vector<std::vector<uint64_t>> layers;
  auto disjoint = [&](const std::vector<uint64_t>& x,
                      const std::vector<uint64_t>& y) {
    for (int w = 0; w < words; ++w)
      if (x[w] & y[w]) return false;
    return true;
  };
  for (const Gate& g : c.gates) {
    if (!g.is_two_qubit()) continue;
    std::vector<uint64_t> m(words, 0);
    m[g.a >> 6] |= uint64_t{1} << (g.a & 63);
    m[g.b >> 6] |= uint64_t{1} << (g.b & 63);
    size_t i = layers.size();
    while (i > 0 && disjoint(layers[i - 1], m)) --i;
    if (i == layers.size()) {
      layers.push_back(std::move(m));
    } else {
      for (int w = 0; w < words; ++w) layers[i][w] |= m[w];
    }
  }
  return static_cast<int>(layers.size());
}

namespace {

void qpart_rec(const std::vector<int>& s, const std::vector<char>& in_supp,
               bool guard_first,
               std::vector<std::pair<int, int>>& prefix,
               std::vector<std::vector<std::pair<int, int>>>& out) {
  out.push_back(prefix);
  const int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int a = s[i], b = s[j];
      if (guard_first && !in_supp[a] && !in_supp[b]) continue;
      std::vector<int> rest;
      rest.reserve(m - 2);
      for (int k = 0; k < m; ++k)
        if (k != i && k != j) {
          // Keep only positions after i so every set is produced once, keyed
          // by its lexicographically smallest pair.
          if (k > i) rest.push_back(s[k]);
        }
      prefix.emplace_back(a, b);
      qpart_rec(rest, in_supp, false, prefix, out);
      prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> qpart(
    const std::vector<int>& s, const std::vector<int>& supp) {
  int maxv = 0;
  for (int v : s) maxv = std::max(maxv, v);
  std::vector<char> in_supp(maxv + 1, 0);
  for (int v : supp)
    if (v >= 0 && v <= maxv) in_supp[v] = 1;
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> prefix;
  qpart_rec(s, in_supp, true, prefix, out);
  return out;
}

std::vector<std::vector<Gate>> depth_one_layers(int n,
                                                const std::vector<int>& supp,
                                                LayerAlphabet alphabet) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  std::vector<std::vector<Gate>> out;
  for (const auto& pairs : qpart(s, supp)) {
    if (pairs.empty()) continue;
    // Odometer over the per-pair gate choices, last pair fastest.
    const int choices = alphabet == LayerAlphabet::Cnot ? 2 : 9;
    std::vector<int> idx(pairs.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<Gate> layer;
      layer.reserve(pairs.size());
      for (size_t p = 0; p < pairs.size(); ++p) {
        const auto [a, b] = pairs[p];
        if (alphabet == LayerAlphabet::Cnot) {
          layer.push_back(idx[p] == 0 ? Gate::cnot(a, b) : Gate::cnot(b, a));
        } else {
          static constexpr int kOrder[3] = {1, 2, 3};
          layer.push_back(
              Gate::tv(kOrder[idx[p] / 3], kOrder[idx[p] % 3], a, b));
        }
      }
      out.push_back(std::move(layer));
      int p = static_cast<int>(pairs.size()) - 1;
      while (p >= 0) {
        if (++idx[p] < choices) break;
        idx[p] = 0;
        --p;
      }
      done = p < 0;
    }
  }
  return out;
}

Circuit commute_perm_to_front(const Circuit& c, const std::vector<int>& p) {
  const int n = c.n;
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<int> pinv(n);
  for (int k = 0; k < n; ++k) pinv[p[k]] = k;

  Circuit out;
  out.n = n;
  bool identity = true;
  for (int k = 0; k < n; ++k) identity &= p[k] == k;
  if (!identity) out.gates.push_back(Gate::qperm(p));
  for (Gate g : c.gates) {
    switch (g.kind) {
      case GateKind::Cnot:
      case GateKind::Tv:
      case GateKind::Swap:
        g.a = p[g.a];
        g.b = p[g.b];
        break;
      case GateKind::Sqc:
        g.a = p[g.a];
        break;
      case GateKind::Qperm: {
        std::vector<int> np(n);
        for (int x = 0; x < n; ++x) np[x] = p[g.perm[pinv[x]]];
        g.perm = std::move(np);
        break;
      }
    }
    out.gates.push_back(std::move(g));
  }
  return out;
}

std::string gate_to_text(const Gate& g) {
  std::ostringstream o;
  switch (g.kind) {
    case GateKind::Cnot: o << "CNOT " << g.a << ' ' << g.b; break;
    case GateKind::Tv:
      o << "TV " << pauli_letter(g.pa) << ' ' << pauli_letter(g.pb) << ' '
        << g.a << ' ' << g.b;
      break;
    case GateKind::Sqc:
      o << "SQC " << kSqcNames[static_cast<size_t>(g.pa)] << ' ' << g.a;
      break;
    case GateKind::Swap: o << "SWAP " << g.a << ' ' << g.b; break;
    case GateKind::Qperm: {
      o << "QPERM";
      for (int v : g.perm) o << ' ' << v;
      break;
    }
  }
  return o.str();
}

std::string circuit_to_text(const Circuit& c) {
  std::string out;
  for (const Gate& g : c.gates) {
    out += gate_to_text(g);
    out += '\n';
  }
  return out;
}

std::string circuit_to_compact(const Circuit& c) {
  std::string out;
  for (size_t i = 0; i < c.gates.size(); ++i) {
    if (i) out += ';';
    out += gate_to_text(c.gates[i]);
  }
  return out;
}

std::optional<Circuit> parse_circuit(const std::string& text, int n,
                                     std::string* err) {
  auto fail = [&](const std::string& m) -> std::optional<Circuit> {
    if (err) *err = m;
    return std::nullopt;
  };
  Circuit c;
  c.n = n;
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ';', '\n');
  std::istringstream in(norm);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;  // blank line
    auto ctx = [&](const std::string& m) {
      return "line " + std::to_string(lineno) + ": " + m;
    };
    if (op == "CNOT" || op == "SWAP") {
      int a, b;
      if (!(ls >> a >> b)) return fail(ctx("expected two qubit indices"));
      if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        return fail(ctx("qubit indices out of range"));
      c.gates.push_back(op == "CNOT" ? Gate::cnot(a, b) : Gate::swap(a, b));
    } else if (op == "TV") {
      std::string pa, pb;
      int a, b;
      if (!(ls >> pa >> pb >> a >> b))
        return fail(ctx("expected two paulis and two qubits"));
      if (pa.size() != 1 || pb.size() != 1) return fail(ctx("bad pauli"));
      const auto ca = pauli_code(pa[0]), cb = pauli_code(pb[0]);
      if (!ca || !cb) return fail(ctx("bad pauli letter"));
      if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        return fail(ctx("qubit indices out of range"));
      c.gates.push_back(Gate::tv(*ca, *cb, a, b));
    } else if (op == "SQC") {
      std::string name;
      int q;
      if (!(ls >> name >> q)) return fail(ctx("expected name and qubit"));
      const auto s = sqc_from_name(name);
      if (!s) return fail(ctx("unknown single-qubit clifford"));
      if (q < 0 || q >= n) return fail(ctx("qubit index out of range"));
      c.gates.push_back(Gate::sqc(*s, q));
    } else if (op == "QPERM") {
      std::vector<int> p;
      int v;
      while (ls >> v) p.push_back(v);
      if (static_cast<int>(p.size()) != n)
        return fail(ctx("permutation length must equal qubit count"));
      std::vector<bool> seen(n, false);
      for (int x : p) {
        if (x < 0 || x >= n || seen[x]) return fail(ctx("not a permutation"));
        seen[x] = true;
      }
      c.gates.push_back(Gate::qperm(std::move(p)));
    } else {
      return fail(ctx("unknown gate '" + op + "'"));
    }
    std::string extra;
    if (ls >> extra) return fail(ctx("trailing tokens"));
  }
  return c;
}

}  // namespace cliffsynth
