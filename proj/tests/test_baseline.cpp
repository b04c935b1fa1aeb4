#include <catch2/catch_amalgamated.hpp>

#include "cliffsynth/baseline.hpp"
#include "cliffsynth/prng.hpp"
#include "test_support.hpp"

using namespace cliffsynth;

TEST_CASE("elimination leaves permutations untouched") {
  Prng rng(51);
  const BitMatrix pm = testsupport::perm_matrix(testsupport::random_perm(6, rng));
  const auto res = gaussian_synth(pm);
  REQUIRE(res.has_value());
  REQUIRE(res->circuit.gates.empty());
  REQUIRE(res->terminal == pm);
}

TEST_CASE("one off-diagonal one needs exactly one gate") {
  BitMatrix a = BitMatrix::identity(2);
  a.set(0, 1, true);
  const auto res = gaussian_synth(a);
  REQUIRE(res.has_value());
  REQUIRE(res->circuit.gates.size() == 1);
  REQUIRE(res->terminal == BitMatrix::identity(2));
  REQUIRE(replay(res->circuit, res->terminal) == a);
}

TEST_CASE("singular matrices are rejected") {
  BitMatrix ones(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) ones.set(r, c, true);
  REQUIRE_FALSE(gaussian_synth(ones).has_value());
  REQUIRE_FALSE(gaussian_synth(BitMatrix(3, 3)).has_value());
}

TEST_CASE("elimination reconstructs every sampled invertible matrix") {
  Prng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(8));
    const BitMatrix a = random_gl(n, rng.next_u64());
    const auto res = gaussian_synth(a);
    REQUIRE(res.has_value());
    REQUIRE(is_permutation(res->terminal));
    REQUIRE(static_cast<int>(res->circuit.gates.size()) <= n * n);
    for (const Gate& g : res->circuit.gates)
      REQUIRE(g.kind == GateKind::Cnot);
    REQUIRE(replay(res->circuit, res->terminal) == a);
    REQUIRE(replay(res->full_circuit(), BitMatrix::identity(n)) == a);
  }
}

TEST_CASE("elimination is deterministic") {
  const BitMatrix a = random_gl(7, 1234);
  const auto r1 = gaussian_synth(a);
  const auto r2 = gaussian_synth(a);
  REQUIRE(r1->terminal == r2->terminal);
  REQUIRE(r1->circuit.gates.size() == r2->circuit.gates.size());
  for (size_t k = 0; k < r1->circuit.gates.size(); ++k)
    REQUIRE(r1->circuit.gates[k] == r2->circuit.gates[k]);
}

TEST_CASE("transvection reduction leaves identity untouched") {
  const auto res = volanto_synth(SpMatrix(3));
  REQUIRE(res.has_value());
  REQUIRE(res->circuit.gates.empty());
  REQUIRE(res->terminal == SpMatrix(3));
  REQUIRE(res->perm == std::vector<int>{0, 1, 2});
  REQUIRE(res->sqcs.empty());
}

TEST_CASE("a single transvection matrix synthesizes to one gate") {
  PauliVec v(2);
  v.set_pauli(0, 1);
  v.set_pauli(1, 1);
  const SpMatrix a = transvection_matrix(v);
  const auto res = volanto_synth(a);
  REQUIRE(res.has_value());
  REQUIRE(res->circuit.gates.size() == 1);
  REQUIRE(res->circuit.gates[0].kind == GateKind::Tv);
  REQUIRE(replay(res->circuit, res->terminal) == a);
}

TEST_CASE("non-symplectic input is rejected") {
  BitMatrix bad = BitMatrix::identity(4);
  bad.set(0, 1, true);
  REQUIRE_FALSE(volanto_synth(SpMatrix(2, bad)).has_value());
}

TEST_CASE("transvection reduction reconstructs sampled symplectics") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const SpMatrix a = random_sp(3, seed);
    const auto res = volanto_synth(a);
    REQUIRE(res.has_value());
    REQUIRE(is_perm_sqc(res->terminal));
    const RankMask rm = rank_mask(res->terminal);
    REQUIRE(is_permutation(rm.r2));
    REQUIRE(rm.r1 == BitMatrix(3, 3));
    for (const Gate& g : res->circuit.gates)
      REQUIRE(g.kind == GateKind::Tv);
    REQUIRE(replay(res->circuit, res->terminal) == a);
    REQUIRE(replay(res->full_circuit(), SpMatrix(3)) == a);
  }
}

TEST_CASE("transvection reduction handles every two-qubit clifford") {
  for (const SpMatrix& a : testsupport::enumerate_sp2()) {
    const auto res = volanto_synth(a);
    REQUIRE(res.has_value());
    REQUIRE(replay(res->circuit, res->terminal) == a);
    REQUIRE(static_cast<int>(res->circuit.gates.size()) <= 3);
  }
}

TEST_CASE("single-qubit synthesis needs no two-qubit gates") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    const SpMatrix a = random_sp(1, seed);
    const auto res = volanto_synth(a);
    REQUIRE(res.has_value());
    REQUIRE(res->circuit.gates.empty());
    REQUIRE(replay(res->full_circuit(), SpMatrix(1)) == a);
  }
}
