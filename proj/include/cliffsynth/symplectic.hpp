#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffsynth/bitmatrix.hpp"

namespace cliffsynth {

// Pauli operator on n qubits, sign-free: bit i is the X part of qubit i,
// bit n+i the Z part. Codes per qubit: 0 = I, 1 = X, 2 = Z, 3 = Y.
struct PauliVec {
  int n = 0;
  BitMatrix bits;  // 1 x 2n row

  PauliVec() = default;
  explicit PauliVec(int n_) : n(n_), bits(1, 2 * n_) {}

  bool x(int i) const { return bits.get(0, i); }
  bool z(int i) const { return bits.get(0, n + i); }
  void set_x(int i, bool v) { bits.set(0, i, v); }
  void set_z(int i, bool v) { bits.set(0, n + i, v); }

  int pauli_at(int q) const { return (x(q) ? 1 : 0) | (z(q) ? 2 : 0); }
  void set_pauli(int q, int code) {
    set_x(q, code & 1);
    set_z(q, code & 2);
  }
  bool is_zero() const { return bits.row_is_zero(0); }
  int weight() const;  // number of qubits with a non-identity Pauli

  // The vector with X and Z halves exchanged (right-multiplication by the
  // symplectic form).
  PauliVec omega_swapped() const;

  friend bool operator==(const PauliVec& a, const PauliVec& b) {
    return a.n == b.n && a.bits == b.bits;
  }
};

char pauli_letter(int code);           // 1->'X', 2->'Z', 3->'Y'
std::optional<int> pauli_code(char letter);

// Symplectic inner product u * Omega * v^T; 1 exactly when the operators
// anticommute.
int symplectic_product(const PauliVec& u, const PauliVec& v);

// 2n x 2n binary matrix acting on Pauli row vectors by right multiplication:
// rows 0..n-1 are the images of X_0..X_{n-1}, rows n..2n-1 of Z_0..Z_{n-1}.
struct SpMatrix {
  int n = 0;
  BitMatrix m;

  SpMatrix() = default;
  explicit SpMatrix(int n_) : n(n_), m(BitMatrix::identity(2 * n_)) {}
  SpMatrix(int n_, BitMatrix m_) : n(n_), m(std::move(m_)) {}

  friend bool operator==(const SpMatrix& a, const SpMatrix& b) {
    return a.n == b.n && a.m == b.m;
  }
};

BitMatrix omega(int n);
bool is_symplectic(const BitMatrix& a);
inline bool is_symplectic(const SpMatrix& a) { return is_symplectic(a.m); }

// Inverse via the form: A^{-1} = Omega A^T Omega. Requires symplectic input.
SpMatrix sp_inverse(const SpMatrix& a);
SpMatrix sp_transpose(const SpMatrix& a);
SpMatrix sp_mul(const SpMatrix& a, const SpMatrix& b);

// The transvection sqrt(P): u -> u + <u,v> v, as a matrix I + Omega v^T v.
SpMatrix transvection_matrix(const PauliVec& v);

// In-place right multiplication of a by the transvection of v.
void apply_transvection(BitMatrix& a, const PauliVec& v);
// In-place left multiplication (used when composing state preparations).
void apply_transvection_left(BitMatrix& a, const PauliVec& v);

// The nine transvections supported on exactly the qubit pair {i, j},
// enumerated with Pauli codes in (X, Z, Y) order on i, then on j.
std::vector<PauliVec> two_qubit_transvections(int n, int i, int j);

// 2x2 block of A at row-qubit i, column-qubit j:
// [[A(i,j), A(i,j+n)], [A(i+n,j), A(i+n,j+n)]], packed low-to-high as
// bit0..bit3.
struct F2x2 {
  uint8_t bits = 0;
  int rank() const {
    if (bits == 0) return 0;
    const int a = bits & 1, b = (bits >> 1) & 1, c = (bits >> 2) & 1,
              d = (bits >> 3) & 1;
    return ((a & d) ^ (b & c)) ? 2 : 1;
  }
};

F2x2 f_submatrix(const SpMatrix& a, int i, int j);

// Indicator masks over the n x n grid of F blocks: r1 marks rank-1 blocks,
// r2 rank-2 blocks. A symplectic matrix is a qubit permutation combined with
// single-qubit Cliffords exactly when r2 is a permutation and r1 is zero.
struct RankMask {
  BitMatrix r1, r2;
};

RankMask rank_mask(const SpMatrix& a);
bool is_perm_sqc(const SpMatrix& a);

// The six single-qubit Cliffords at the symplectic level (= GL(2,2)).
enum class Sqc : uint8_t { I = 0, H, S, HS, SH, HSH };

inline constexpr std::array<const char*, 6> kSqcNames = {"I",  "H",  "S",
                                                         "HS", "SH", "HSH"};
// 2x2 blocks in row-vector convention, rows (X image, Z image),
// entries (x bit, z bit).
std::array<std::array<uint8_t, 2>, 2> sqc_block(Sqc s);
std::optional<Sqc> sqc_from_name(const std::string& name);
std::optional<Sqc> sqc_from_block(const std::array<std::array<uint8_t, 2>, 2>& b);

SpMatrix sqc_matrix(int n, int q, Sqc s);
SpMatrix cnot_symplectic(int n, int control, int target);
SpMatrix cz_symplectic(int n, int i, int j);
SpMatrix swap_symplectic(int n, int i, int j);
// perm[k] is the qubit position k is sent to.
SpMatrix qperm_symplectic(int n, const std::vector<int>& perm);

// Checks the standard gate decompositions into transvections and phase
// gates at the symplectic level (and that a deliberately wrong variant
// fails). Returns true when all hold.
bool cnot_cz_identities();

// Uniformly random symplectic matrix, built by mapping basis pairs onto
// random symplectic pairs with transvections, one qubit at a time.
SpMatrix random_sp(int n, uint64_t seed);

// Text format: header "sp n", then 2n rows of 2n bits.
std::string to_text(const SpMatrix& a);
std::optional<SpMatrix> parse_sp(const std::string& text,
                                 std::string* err = nullptr);

}  // namespace cliffsynth
