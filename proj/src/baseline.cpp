#include "cliffsynth/baseline.hpp"

#include <algorithm>

namespace cliffsynth {

std::optional<GlSynth> gaussian_synth(const BitMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const int n = a.rows();
  BitMatrix p = a;
  std::vector<Gate> ops;
  std::vector<char> unused(n, 1);
  for (int i = 0; i < n; ++i) {
    // Smallest unused column with a one becomes the pivot; no unused
    // candidate means the row is a combination of already-cleaned rows.
    int pivot = -1;
    for (int c = 0; c < n; ++c)
      if (unused[c] && p.get(i, c)) {
        pivot = c;
        break;
      }
    if (pivot < 0) return std::nullopt;
    unused[pivot] = 0;
    // Clear every other one in the row, used pivot columns included:
    // cleaned rows are zero at the pivot column, so they stay intact.
    for (int j = 0; j < n; ++j) {
      if (j == pivot || !p.get(i, j)) continue;
      const Gate g = Gate::cnot(pivot, j);
      apply_gate(p, g);
      ops.push_back(g);
    }
  }
  std::reverse(ops.begin(), ops.end());
  GlSynth out;
  out.circuit = Circuit{n, std::move(ops)};
  out.terminal = std::move(p);
  return out;
}

namespace {

// 2x2 GF(2) product on the packed F-block representation
// (bit0..bit3 = entries (0,0), (0,1), (1,0), (1,1)).
uint8_t f_mul(uint8_t a, uint8_t b) {
  const int a00 = a & 1, a01 = (a >> 1) & 1, a10 = (a >> 2) & 1,
            a11 = (a >> 3) & 1;
  const int b00 = b & 1, b01 = (b >> 1) & 1, b10 = (b >> 2) & 1,
            b11 = (b >> 3) & 1;
  const int c00 = (a00 & b00) ^ (a01 & b10);
  const int c01 = (a00 & b01) ^ (a01 & b11);
  const int c10 = (a10 & b00) ^ (a11 & b10);
  const int c11 = (a10 & b01) ^ (a11 & b11);
  return static_cast<uint8_t>(c00 | (c01 << 1) | (c10 << 2) | (c11 << 3));
}

// Inverse of a rank-2 packed block: swap the diagonal (determinant is 1).
uint8_t f_inv(uint8_t a) {
  return static_cast<uint8_t>((a & 0b0110) | ((a & 1) << 3) | ((a >> 3) & 1));
}

Gate tv_from_bits(int q1, int x1, int z1, int q2, int x2, int z2) {
  return Gate::tv(x1 | (z1 << 1), x2 | (z2 << 1), q1, q2);
}

// Transvection clearing a pair of rank-2 blocks F_ij, F_ik down to rank 1:
// the Pauli is (first row of F_ij) on qubit j and (second row of F_ik) on
// qubit k.
Gate pair_reduction_gate(const SpMatrix& p, int i, int j, int k) {
  const int n = p.n;
  return tv_from_bits(j, p.m.get(i, j), p.m.get(i, n + j),
                      k, p.m.get(n + i, k), p.m.get(n + i, n + k));
}

// Transvection clearing a rank-1 block F_ij against the rank-2 pivot block
// F_ip. The product G = F_ip^{-1} F_ij has rank 1; on the pivot qubit the
// Pauli is (x, z) = (second-row, first-row) nonzero indicators of G, on the
// target qubit (x, z) = (first-column, second-column) indicators.
Gate rank1_reduction_gate(const SpMatrix& p, int i, int pivot, int j) {
  const uint8_t g =
      f_mul(f_inv(f_submatrix(p, i, pivot).bits), f_submatrix(p, i, j).bits);
  const int g00 = g & 1, g01 = (g >> 1) & 1, g10 = (g >> 2) & 1,
            g11 = (g >> 3) & 1;
  const int a = g10 | g11, b = g00 | g01;  // rows of G, swapped
  const int c = g00 | g10, d = g01 | g11;  // columns of G, in order
  return tv_from_bits(pivot, a, b, j, c, d);
}

}  // namespace

std::optional<SpSynth> volanto_synth(const SpMatrix& a) {
  const int n = a.n;
  SpMatrix p = a;
  std::vector<Gate> ops;
  std::vector<char> unused(n, 1);
  for (int i = 0; i < n; ++i) {
    std::vector<int> r;
    for (int c = 0; c < n; ++c)
      if (unused[c] && f_submatrix(p, i, c).rank() == 2) r.push_back(c);
    if (r.size() % 2 == 0) return std::nullopt;
    const int pivot = r.front();
    unused[pivot] = 0;
    for (size_t t = 1; t + 1 < r.size(); t += 2) {
      const Gate g = pair_reduction_gate(p, i, r[t], r[t + 1]);
      apply_gate(p, g);
      ops.push_back(g);
    }
    std::vector<int> rank1;
    for (int j = 0; j < n; ++j)
      if (f_submatrix(p, i, j).rank() == 1) rank1.push_back(j);
    for (const int j : rank1) {
      const Gate g = rank1_reduction_gate(p, i, pivot, j);
      apply_gate(p, g);
      ops.push_back(g);
    }
  }
  // Non-symplectic inputs can slip past the per-row parity checks yet still
  // fail to reach the reduced form; reject them here.
  if (!is_perm_sqc(p)) return std::nullopt;
  std::reverse(ops.begin(), ops.end());
  return make_sp_synth(std::move(p), Circuit{n, std::move(ops)});
}

}  // namespace cliffsynth
