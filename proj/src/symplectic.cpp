#include "cliffsynth/symplectic.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "cliffsynth/prng.hpp"

namespace cliffsynth {

int PauliVec::weight() const {
  int w = 0;
  for (int q = 0; q < n; ++q)
    if (pauli_at(q)) ++w;
  return w;
}

PauliVec PauliVec::omega_swapped() const {
  PauliVec s(n);
  for (int q = 0; q < n; ++q) {
    s.set_x(q, z(q));
    s.set_z(q, x(q));
  }
  return s;
}

char pauli_letter(int code) {
  switch (code) {
    case 1: return 'X';
    case 2: return 'Z';
    case 3: return 'Y';
    default: throw std::invalid_argument("bad pauli code");
  }
}

std::optional<int> pauli_code(char letter) {
  switch (letter) {
    case 'X': return 1;
    case 'Z': return 2;
    case 'Y': return 3;
    default: return std::nullopt;
  }
}

namespace {

int parity_and(const uint64_t* a, const uint64_t* b, int words) {
  uint64_t acc = 0;
  for (int i = 0; i < words; ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

}  // namespace

int symplectic_product(const PauliVec& u, const PauliVec& v) {
  if (u.n != v.n) throw std::invalid_argument("size mismatch");
  const PauliVec vs = v.omega_swapped();
  return parity_and(u.bits.row(0), vs.bits.row(0), u.bits.words_per_row());
}

BitMatrix omega(int n) {
  BitMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m.set(i, n + i, true);
    m.set(n + i, i, true);
  }
  return m;
}

bool is_symplectic(const BitMatrix& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0 || a.rows() == 0) return false;
  const int n = a.rows() / 2;
  const BitMatrix om = omega(n);
  return mul(mul(a, om), transpose(a)) == om;
}

SpMatrix sp_inverse(const SpMatrix& a) {
  const BitMatrix om = omega(a.n);
  return SpMatrix(a.n, mul(mul(om, transpose(a.m)), om));
}

SpMatrix sp_transpose(const SpMatrix& a) {
  return SpMatrix(a.n, transpose(a.m));
}

SpMatrix sp_mul(const SpMatrix& a, const SpMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("size mismatch");
  return SpMatrix(a.n, mul(a.m, b.m));
}

SpMatrix transvection_matrix(const PauliVec& v) {
  SpMatrix t(v.n);
  apply_transvection(t.m, v);
  return t;
}

void apply_transvection(BitMatrix& a, const PauliVec& v) {
  if (a.cols() != 2 * v.n) throw std::invalid_argument("size mismatch");
  const PauliVec vs = v.omega_swapped();
  const uint64_t* vrow = v.bits.row(0);
  const uint64_t* srow = vs.bits.row(0);
  const int words = v.bits.words_per_row();
  for (int r = 0; r < a.rows(); ++r) {
    uint64_t* arow = a.row(r);
    if (parity_and(arow, srow, words))
      for (int w = 0; w < words; ++w) arow[w] ^= vrow[w];
  }
}

void apply_transvection_left(BitMatrix& a, const PauliVec& v) {
  if (a.rows() != 2 * v.n) throw std::invalid_argument("size mismatch");
  const PauliVec vs = v.omega_swapped();
  const int words = a.words_per_row();
  // w = v * A
  std::vector<uint64_t> w(words, 0);
  for (int k = 0; k < 2 * v.n; ++k)
    if (v.bits.get(0, k)) {
      const uint64_t* arow = a.row(k);
      for (int i = 0; i < words; ++i) w[i] ^= arow[i];
    }
  for (int r = 0; r < 2 * v.n; ++r)
    if (vs.bits.get(0, r)) {
      uint64_t* arow = a.row(r);
      for (int i = 0; i < words; ++i) arow[i] ^= w[i];
    }
}

std::vector<PauliVec> two_qubit_transvections(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("bad qubit pair");
  static constexpr int kOrder[3] = {1, 2, 3};  // X, Z, Y
  std::vector<PauliVec> out;
  out.reserve(9);
  for (int a : kOrder)
    for (int b : kOrder) {
      PauliVec v(n);
      v.set_pauli(i, a);
      v.set_pauli(j, b);
      out.push_back(std::move(v));
    }
  return out;
}

F2x2 f_submatrix(const SpMatrix& a, int i, int j) {
  const int n = a.n;
  F2x2 f;
  f.bits = static_cast<uint8_t>(a.m.get(i, j) | (a.m.get(i, j + n) << 1) |
                                (a.m.get(i + n, j) << 2) |
                                (a.m.get(i + n, j + n) << 3));
  return f;
}

RankMask rank_mask(const SpMatrix& a) {
  RankMask rm{BitMatrix(a.n, a.n), BitMatrix(a.n, a.n)};
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      switch (f_submatrix(a, i, j).rank()) {
        case 1: rm.r1.set(i, j, true); break;
        case 2: rm.r2.set(i, j, true); break;
        default: break;
      }
    }
  return rm;
}

bool is_perm_sqc(const SpMatrix& a) {
  const RankMask rm = rank_mask(a);
  if (!is_permutation(rm.r2)) return false;
  for (int i = 0; i < a.n; ++i)
    if (!rm.r1.row_is_zero(i)) return false;
  return true;
}

std::array<std::array<uint8_t, 2>, 2> sqc_block(Sqc s) {
  // Row-vector convention: row 0 is the (x,z) image of X, row 1 of Z.
  switch (s) {
    case Sqc::I: return {{{1, 0}, {0, 1}}};
    case Sqc::H: return {{{0, 1}, {1, 0}}};
    case Sqc::S: return {{{1, 1}, {0, 1}}};
    case Sqc::HS: return {{{0, 1}, {1, 1}}};
    case Sqc::SH: return {{{1, 1}, {1, 0}}};
    case Sqc::HSH: return {{{1, 0}, {1, 1}}};
  }
  throw std::invalid_argument("bad sqc");
}

std::optional<Sqc> sqc_from_name(const std::string& name) {
  for (size_t i = 0; i < kSqcNames.size(); ++i)
    if (name == kSqcNames[i]) return static_cast<Sqc>(i);
  return std::nullopt;
}

std::optional<Sqc> sqc_from_block(
    const std::array<std::array<uint8_t, 2>, 2>& b) {
  for (int i = 0; i < 6; ++i) {
    const Sqc s = static_cast<Sqc>(i);
    if (sqc_block(s) == b) return s;
  }
  return std::nullopt;
}

SpMatrix sqc_matrix(int n, int q, Sqc s) {
  if (q < 0 || q >= n) throw std::invalid_argument("bad qubit");
  SpMatrix m(n);
  const auto b = sqc_block(s);
  m.m.set(q, q, b[0][0]);
  m.m.set(q, n + q, b[0][1]);
  m.m.set(n + q, q, b[1][0]);
  m.m.set(n + q, n + q, b[1][1]);
  return m;
}

SpMatrix cnot_symplectic(int n, int control, int target) {
  if (control == target || control < 0 || target < 0 || control >= n ||
      target >= n)
    throw std::invalid_argument("bad cnot qubits");
  SpMatrix m(n);
  m.m.set(control, target, true);          // X_c -> X_c X_t
  m.m.set(n + target, n + control, true);  // Z_t -> Z_c Z_t
  return m;
}

SpMatrix cz_symplectic(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("bad cz qubits");
  SpMatrix m(n);
  m.m.set(i, n + j, true);  // X_i -> X_i Z_j
  m.m.set(j, n + i, true);  // X_j -> X_j Z_i
  return m;
}

SpMatrix swap_symplectic(int n, int i, int j) {
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k;
  std::swap(p[i], p[j]);
  return qperm_symplectic(n, p);
}

SpMatrix qperm_symplectic(int n, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("bad permutation size");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  SpMatrix m(n, BitMatrix(2 * n, 2 * n));
  for (int k = 0; k < n; ++k) {
    m.m.set(k, perm[k], true);
    m.m.set(n + k, n + perm[k], true);
  }
  return m;
}

bool cnot_cz_identities() {
  const int n = 2;
  // Operator products map to reversed matrix products: conjugation applies
  // the rightmost operator first, so rep(P1 P2 ... Pk) = M_k ... M_2 M_1.
  auto prod = [](const std::vector<SpMatrix>& ops) {
    SpMatrix acc(2);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
      acc = sp_mul(acc, *it);
    return acc;
  };
  auto cube = [](const SpMatrix& a) { return sp_mul(sp_mul(a, a), a); };

  auto tv = [&](int p0, int p1) {
    PauliVec v(n);
    v.set_pauli(0, p0);
    v.set_pauli(1, p1);
    return transvection_matrix(v);
  };
  auto tv1 = [&](int q, int p) {
    PauliVec v(n);
    v.set_pauli(q, p);
    return transvection_matrix(v);
  };

  const SpMatrix s0 = sqc_matrix(n, 0, Sqc::S);
  const SpMatrix s1 = sqc_matrix(n, 1, Sqc::S);

  // CZ_{01} = S_0^3 S_1^3 sqrt(Z_0 Z_1)
  const SpMatrix cz_rhs = prod({cube(s0), cube(s1), tv(2, 2)});
  if (!(cz_rhs == cz_symplectic(n, 0, 1))) return false;

  // CNOT_{01} = S_0^3 sqrt(X_1)^3 sqrt(Z_0 X_1)
  const SpMatrix cnot_rhs = prod({cube(s0), cube(tv1(1, 1)), tv(2, 1)});
  if (!(cnot_rhs == cnot_symplectic(n, 0, 1))) return false;

  // Deliberately wrong final factor must not reproduce CNOT.
  const SpMatrix wrong = prod({cube(s0), cube(tv1(1, 1)), tv(2, 2)});
  if (wrong == cnot_symplectic(n, 0, 1)) return false;

  return true;
}

namespace {

// Uniform Pauli vector supported on qubits >= lo; optionally nonzero.
PauliVec random_supported(Prng& rng, int n, int lo, bool nonzero) {
  for (;;) {
    PauliVec v(n);
    for (int q = lo; q < n; ++q)
      v.set_pauli(q, static_cast<int>(rng.next_below(4)));
    if (!nonzero || !v.is_zero()) return v;
  }
}

PauliVec add(const PauliVec& a, const PauliVec& b) {
  PauliVec r = a;
  for (int w = 0; w < r.bits.words_per_row(); ++w)
    r.bits.row(0)[w] ^= b.bits.row(0)[w];
  return r;
}

// Transvection vectors sending x to y (one when they anticommute, two via a
// random midpoint otherwise). Draws stay inside qubits >= lo.
void map_vector(Prng& rng, int n, int lo, const PauliVec& x, const PauliVec& y,
                std::vector<PauliVec>& out) {
  if (x == y) return;
  if (symplectic_product(x, y) == 1) {
    out.push_back(add(x, y));
    return;
  }
  for (;;) {
    const PauliVec z = random_supported(rng, n, lo, true);
    if (symplectic_product(x, z) == 1 && symplectic_product(y, z) == 1) {
      out.push_back(add(x, z));
      out.push_back(add(z, y));
      return;
    }
  }
}

}  // namespace

SpMatrix random_sp(int n, uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  Prng rng(seed);
  SpMatrix m(n);
  for (int k = 0; k < n; ++k) {
    const PauliVec v1 = random_supported(rng, n, k, true);
    PauliVec v2(n);
    do {
      v2 = random_supported(rng, n, k, false);
    } while (symplectic_product(v1, v2) != 1);

    PauliVec ex(n), ez(n);
    ex.set_x(k, true);
    ez.set_z(k, true);

    std::vector<PauliVec> tvs;
    map_vector(rng, n, k, ex, v1, tvs);
    PauliVec w0 = ez;
    for (const PauliVec& t : tvs)
      if (symplectic_product(w0, t) == 1) w0 = add(w0, t);
    if (!(w0 == v2)) {
      if (symplectic_product(w0, v2) == 1) {
        tvs.push_back(add(w0, v2));
      } else {
        for (;;) {
          const PauliVec z = random_supported(rng, n, k, true);
          if (symplectic_product(v1, z) == 1 &&
              symplectic_product(w0, z) == 1 &&
              symplectic_product(v2, z) == 1) {
            tvs.push_back(add(w0, z));
            tvs.push_back(add(z, v2));
            break;
          }
        }
      }
    }
    // Row-vector products compose left factor first, so the step's matrix is
    // T_{tvs[0]} * ... * T_{tvs[last]}, prepended onto the accumulated tail.
    for (auto it = tvs.rbegin(); it != tvs.rend(); ++it)
      apply_transvection_left(m.m, *it);
  }
  return m;
}

std::string to_text(const SpMatrix& a) {
  std::ostringstream out;
  out << "sp " << a.n << '\n';
  for (int r = 0; r < 2 * a.n; ++r) {
    for (int c = 0; c < 2 * a.n; ++c) out << (a.m.get(r, c) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

std::optional<SpMatrix> parse_sp(const std::string& text, std::string* err) {
  auto fail = [&](const std::string& m) -> std::optional<SpMatrix> {
    if (err) *err = m;
    return std::nullopt;
  };
  std::istringstream in(text);
  std::string tag;
  long n = 0;
  if (!(in >> tag) || tag != "sp") return fail("expected 'sp n' header");
  if (!(in >> n) || n <= 0 || n > 2048) return fail("bad qubit count");
  std::string rest;
  std::getline(in, rest);
  std::ostringstream body;
  body << (2 * n) << '\n';
  std::string line;
  while (std::getline(in, line)) body << line << '\n';
  auto m = parse_matrix(body.str(), err);
  if (!m) return std::nullopt;
  return SpMatrix(static_cast<int>(n), std::move(*m));
}

}  // namespace cliffsynth
