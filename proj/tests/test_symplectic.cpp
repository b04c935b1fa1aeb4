#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>

#include "cliffsynth/prng.hpp"
#include "cliffsynth/symplectic.hpp"
#include "test_support.hpp"

using namespace cliffsynth;

namespace {

PauliVec random_pauli(int n, Prng& rng) {
  PauliVec v(n);
  for (int q = 0; q < n; ++q)
    v.set_pauli(q, static_cast<int>(rng.next_below(4)));
  return v;
}

// Anticommutation oracle: odd number of positions with distinct
// non-identity Paulis.
int naive_product(const PauliVec& u, const PauliVec& v) {
  int acc = 0;
  for (int q = 0; q < u.n; ++q) {
    const int a = u.pauli_at(q), b = v.pauli_at(q);
    if (a != 0 && b != 0 && a != b) acc ^= 1;
  }
  return acc;
}

}  // namespace

TEST_CASE("symplectic product matches the anticommutation oracle") {
  Prng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(9));
    const PauliVec u = random_pauli(n, rng);
    const PauliVec v = random_pauli(n, rng);
    REQUIRE(symplectic_product(u, v) == naive_product(u, v));
    REQUIRE(symplectic_product(u, u) == 0);
  }
}

TEST_CASE("symplectic membership accepts the group and rejects outsiders") {
  REQUIRE(is_symplectic(SpMatrix(3)));
  // On one qubit every invertible matrix preserves the form.
  BitMatrix s(2, 2);
  s.set(0, 0, true);
  s.set(0, 1, true);
  s.set(1, 1, true);
  REQUIRE(is_symplectic(s));
  BitMatrix sing(2, 2);
  sing.set(0, 0, true);
  sing.set(1, 0, true);
  REQUIRE_FALSE(is_symplectic(sing));
  // On two qubits a lone off-diagonal one breaks the form.
  BitMatrix bad = BitMatrix::identity(4);
  bad.set(0, 1, true);
  REQUIRE_FALSE(is_symplectic(bad));
}

TEST_CASE("group inverse and transpose stay symplectic and compose to identity") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const SpMatrix a = random_sp(3, seed);
    REQUIRE(is_symplectic(a));
    const SpMatrix inv = sp_inverse(a);
    REQUIRE(is_symplectic(inv));
    REQUIRE(sp_mul(a, inv) == SpMatrix(3));
    REQUIRE(sp_mul(inv, a) == SpMatrix(3));
    REQUIRE(is_symplectic(sp_transpose(a)));
  }
}

TEST_CASE("transvections are involutions and match their matrix form") {
  Prng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(6));
    PauliVec v = random_pauli(n, rng);
    if (v.is_zero()) v.set_pauli(0, 1);
    const SpMatrix tv = transvection_matrix(v);
    REQUIRE(is_symplectic(tv));
    REQUIRE(sp_mul(tv, tv) == SpMatrix(n));

    const SpMatrix a = random_sp(n, rng.next_u64());
    BitMatrix right = a.m;
    apply_transvection(right, v);
    REQUIRE(right == mul(a.m, tv.m));
    BitMatrix left = a.m;
    apply_transvection_left(left, v);
    REQUIRE(left == mul(tv.m, a.m));
  }
}

TEST_CASE("exactly nine transvections touch a given qubit pair") {
  const auto tvs = two_qubit_transvections(4, 1, 3);
  REQUIRE(tvs.size() == 9);
  std::set<std::string> distinct;
  for (const PauliVec& v : tvs) {
    REQUIRE(v.pauli_at(1) != 0);
    REQUIRE(v.pauli_at(3) != 0);
    REQUIRE(v.pauli_at(0) == 0);
    REQUIRE(v.pauli_at(2) == 0);
    distinct.insert(v.bits.key());
  }
  REQUIRE(distinct.size() == 9);
  // Enumeration order pairs (X, Z, Y) on the first qubit with (X, Z, Y) on
  // the second.
  REQUIRE(tvs[0].pauli_at(1) == 1);
  REQUIRE(tvs[0].pauli_at(3) == 1);
  REQUIRE(tvs[1].pauli_at(3) == 2);
  REQUIRE(tvs[3].pauli_at(1) == 2);
  REQUIRE(tvs[8].pauli_at(1) == 3);
  REQUIRE(tvs[8].pauli_at(3) == 3);
}

TEST_CASE("cnot maps stabilizer generators the standard way") {
  const SpMatrix g = cnot_symplectic(2, 0, 1);
  REQUIRE(is_symplectic(g));
  // Rows are images of X0, X1, Z0, Z1.
  PauliVec x0(2), x0x1(2), z1(2), z0z1(2);
  x0.set_pauli(0, 1);
  x0x1.set_pauli(0, 1);
  x0x1.set_pauli(1, 1);
  z1.set_pauli(1, 2);
  z0z1.set_pauli(0, 2);
  z0z1.set_pauli(1, 2);
  for (int c = 0; c < 4; ++c) {
    REQUIRE(g.m.get(0, c) == x0x1.bits.get(0, c));  // X0 -> X0 X1
    REQUIRE(g.m.get(3, c) == z0z1.bits.get(0, c));  // Z1 -> Z0 Z1
  }
  PauliVec x1(2), z0(2);
  x1.set_pauli(1, 1);
  z0.set_pauli(0, 2);
  for (int c = 0; c < 4; ++c) {
    REQUIRE(g.m.get(1, c) == x1.bits.get(0, c));  // X1 fixed
    REQUIRE(g.m.get(2, c) == z0.bits.get(0, c));  // Z0 fixed
  }
}

TEST_CASE("standard gate decompositions hold at the matrix level") {
  REQUIRE(cnot_cz_identities());
}

TEST_CASE("swap equals the transposition qubit permutation") {
  REQUIRE(swap_symplectic(3, 0, 2) == qperm_symplectic(3, {2, 1, 0}));
  REQUIRE_THROWS(qperm_symplectic(3, {0, 0, 1}));
}

TEST_CASE("single-qubit clifford blocks enumerate GL(2,2) and compose") {
  std::set<uint8_t> blocks;
  for (int i = 0; i < 6; ++i) {
    const auto b = sqc_block(static_cast<Sqc>(i));
    blocks.insert(static_cast<uint8_t>(b[0][0] | (b[0][1] << 1) |
                                       (b[1][0] << 2) | (b[1][1] << 3)));
    REQUIRE(is_symplectic(sqc_matrix(3, 1, static_cast<Sqc>(i))));
    REQUIRE(sqc_from_block(b) == static_cast<Sqc>(i));
    REQUIRE(sqc_from_name(kSqcNames[static_cast<size_t>(i)]) ==
            static_cast<Sqc>(i));
  }
  REQUIRE(blocks.size() == 6);

  const auto prod = [](Sqc x, Sqc y) {
    return mul(sqc_matrix(1, 0, x).m, sqc_matrix(1, 0, y).m);
  };
  REQUIRE(prod(Sqc::H, Sqc::S) == sqc_matrix(1, 0, Sqc::HS).m);
  REQUIRE(prod(Sqc::S, Sqc::H) == sqc_matrix(1, 0, Sqc::SH).m);
  REQUIRE(mul(prod(Sqc::H, Sqc::S), sqc_matrix(1, 0, Sqc::H).m) ==
          sqc_matrix(1, 0, Sqc::HSH).m);
  REQUIRE(prod(Sqc::H, Sqc::H) == BitMatrix::identity(2));
  REQUIRE(prod(Sqc::S, Sqc::S) == BitMatrix::identity(2));
}

TEST_CASE("block rank grid identifies permutation-with-cliffords form") {
  const SpMatrix id(3);
  REQUIRE(is_perm_sqc(id));
  const RankMask rm = rank_mask(id);
  REQUIRE(rm.r2 == BitMatrix::identity(3));
  REQUIRE(rm.r1 == BitMatrix(3, 3));

  const SpMatrix cn = cnot_symplectic(2, 0, 1);
  REQUIRE_FALSE(is_perm_sqc(cn));
  const RankMask rc = rank_mask(cn);
  REQUIRE(rc.r2 == BitMatrix::identity(2));
  REQUIRE(rc.r1.get(0, 1));
  REQUIRE(rc.r1.get(1, 0));

  const SpMatrix sw = swap_symplectic(2, 0, 1);
  REQUIRE(is_perm_sqc(sw));

  const F2x2 f = f_submatrix(cn, 0, 1);
  REQUIRE(f.rank() == 1);
  REQUIRE(f_submatrix(cn, 0, 0).rank() == 2);
}

TEST_CASE("random symplectic sampling is symplectic and seed-deterministic") {
  for (const int n : {1, 2, 3, 5, 8, 16}) {
    const SpMatrix a = random_sp(n, 7);
    REQUIRE(is_symplectic(a));
    REQUIRE(a == random_sp(n, 7));
    if (n > 1) REQUIRE_FALSE(a == random_sp(n, 8));
  }
}

TEST_CASE("one-qubit sampling covers the whole group near-uniformly") {
  std::map<std::string, int> freq;
  const int draws = 6000;
  for (int s = 0; s < draws; ++s) ++freq[random_sp(1, 1000 + s).m.key()];
  REQUIRE(freq.size() == 6);
  for (const auto& [key, count] : freq) {
    REQUIRE(count > 830);
    REQUIRE(count < 1170);
  }
}

TEST_CASE("two-qubit sampling reaches all 720 group elements") {
  const auto all = testsupport::enumerate_sp2();
  REQUIRE(all.size() == 720);
  std::set<std::string> seen;
  for (int s = 0; s < 20000 && seen.size() < 720; ++s)
    seen.insert(random_sp(2, 50000 + s).m.key());
  REQUIRE(seen.size() == 720);
  std::set<std::string> expect;
  for (const SpMatrix& m : all) expect.insert(m.m.key());
  REQUIRE(seen == expect);
}

TEST_CASE("symplectic text form round-trips") {
  const SpMatrix a = random_sp(3, 5);
  const auto back = parse_sp(to_text(a));
  REQUIRE(back.has_value());
  REQUIRE(*back == a);
  std::string err;
  REQUIRE_FALSE(parse_sp("sp 2\n0101\n", &err).has_value());
  REQUIRE_FALSE(err.empty());
}
