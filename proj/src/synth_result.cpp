#include "cliffsynth/synth_result.hpp"

#include <stdexcept>

namespace cliffsynth {

std::vector<int> permutation_of(const BitMatrix& p) {
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation");
  const int n = p.rows();
  std::vector<int> perm(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (p.get(r, c)) perm[r] = c;
  return perm;
}

namespace {

bool is_identity_perm(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

Circuit GlSynth::full_circuit() const {
  Circuit out{circuit.n, {}};
  const std::vector<int> perm = permutation_of(terminal);
  if (!is_identity_perm(perm)) out.gates.push_back(Gate::qperm(perm));
  out.gates.insert(out.gates.end(), circuit.gates.begin(),
                   circuit.gates.end());
  return out;
}

TerminalParts decompose_terminal(const SpMatrix& t) {
  if (!is_perm_sqc(t))
    throw std::invalid_argument("matrix is not in permutation+SQC form");
  const int n = t.n;
  TerminalParts parts;
  parts.perm.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const F2x2 f = f_submatrix(t, i, j);
      if (f.rank() != 2) continue;
      parts.perm[i] = j;
      const std::array<std::array<uint8_t, 2>, 2> block = {
          {{static_cast<uint8_t>(f.bits & 1),
            static_cast<uint8_t>((f.bits >> 1) & 1)},
           {static_cast<uint8_t>((f.bits >> 2) & 1),
            static_cast<uint8_t>((f.bits >> 3) & 1)}}};
      const auto s = sqc_from_block(block);
      if (!s) throw std::logic_error("rank-2 block with no Clifford label");
      if (*s != Sqc::I) parts.sqcs.emplace_back(i, *s);
      break;
    }
  }
  return parts;
}

SpSynth make_sp_synth(SpMatrix terminal, Circuit circuit) {
  SpSynth out;
  TerminalParts parts = decompose_terminal(terminal);
  out.terminal = std::move(terminal);
  out.circuit = std::move(circuit);
  out.perm = std::move(parts.perm);
  out.sqcs = std::move(parts.sqcs);
  return out;
}

Circuit SpSynth::full_circuit() const {
  Circuit out{circuit.n, {}};
  for (const auto& [q, s] : sqcs) out.gates.push_back(Gate::sqc(s, q));
  if (!is_identity_perm(perm)) out.gates.push_back(Gate::qperm(perm));
  out.gates.insert(out.gates.end(), circuit.gates.begin(),
                   circuit.gates.end());
  return out;
}

}  // namespace cliffsynth
