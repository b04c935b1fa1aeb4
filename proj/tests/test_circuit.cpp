#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/prng.hpp"
#include "test_support.hpp"

using namespace cliffsynth;

namespace {

Gate random_two_qubit(int n, Prng& rng, bool allow_tv) {
  const int i = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
  int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(n - 1)));
  if (j >= i) ++j;
  if (allow_tv && rng.next_bool()) {
    const int pa = 1 + static_cast<int>(rng.next_below(3));
    const int pb = 1 + static_cast<int>(rng.next_below(3));
    return Gate::tv(pa, pb, i, j);
  }
  return Gate::cnot(i, j);
}

}  // namespace

TEST_CASE("gate application equals multiplication by the gate matrix") {
  Prng rng(31);
  const int n = 4;
  for (int trial = 0; trial < 50; ++trial) {
    SpMatrix sp = random_sp(n, rng.next_u64());
    BitMatrix gl = random_gl(n, rng.next_u64());
    Gate g = random_two_qubit(n, rng, true);
    switch (static_cast<int>(rng.next_below(4))) {
      case 0:
        g = Gate::sqc(static_cast<Sqc>(rng.next_below(6)),
                      static_cast<int>(rng.next_below(n)));
        break;
      case 1:
        g = Gate::swap(g.a, g.b);
        break;
      case 2:
        g = Gate::qperm(testsupport::random_perm(n, rng));
        break;
      default:
        break;
    }
    SpMatrix sp2 = sp;
    apply_gate(sp2, g);
    REQUIRE(sp2.m == mul(sp.m, gate_matrix_sp(g, n).m));
    if (g.kind == GateKind::Cnot || g.kind == GateKind::Swap ||
        g.kind == GateKind::Qperm) {
      BitMatrix gl2 = gl;
      apply_gate(gl2, g);
      REQUIRE(gl2 == mul(gl, gate_matrix_gl(g, n)));
    }
  }
}

TEST_CASE("replay composes gates left to right") {
  Prng rng(32);
  const int n = 5;
  Circuit c{n, {}};
  for (int k = 0; k < 12; ++k)
    c.gates.push_back(random_two_qubit(n, rng, true));
  const SpMatrix start = random_sp(n, 77);
  SpMatrix expect = start;
  for (const Gate& g : c.gates) expect = sp_mul(expect, gate_matrix_sp(g, n));
  REQUIRE(replay(c, start) == expect);
}

TEST_CASE("depth counts packed layers of two-qubit gates") {
  REQUIRE(depth(Circuit{3, {}}) == 0);
  REQUIRE(depth(Circuit{2, {Gate::cnot(0, 1)}}) == 1);
  REQUIRE(depth(Circuit{4, {Gate::cnot(0, 1), Gate::cnot(2, 3)}}) == 1);
  REQUIRE(depth(Circuit{3, {Gate::cnot(0, 1), Gate::cnot(1, 2)}}) == 2);
  // The third gate avoids the second layer because their supports are
  // disjoint, and lands in the second layer right after conflicting with
  // the first.
  REQUIRE(depth(Circuit{4, {Gate::cnot(0, 1), Gate::cnot(1, 2),
                            Gate::cnot(0, 3)}}) == 2);
  // Relabeling and single-qubit gates are free.
  REQUIRE(depth(Circuit{2, {Gate::swap(0, 1), Gate::cnot(0, 1),
                            Gate::sqc(Sqc::H, 0), Gate::qperm({1, 0})}}) == 1);
  REQUIRE(two_qubit_count(Circuit{2, {Gate::swap(0, 1), Gate::cnot(0, 1),
                                      Gate::tv(1, 2, 0, 1)}}) == 2);
}

TEST_CASE("disjoint pair sets enumerate each matching once") {
  const std::vector<int> s{0, 1, 2};
  const auto sets = qpart(s, s);
  REQUIRE(sets.size() == 4);
  REQUIRE(sets[0].empty());
  REQUIRE(sets[1] == std::vector<std::pair<int, int>>{{0, 1}});
  REQUIRE(sets[2] == std::vector<std::pair<int, int>>{{0, 2}});
  REQUIRE(sets[3] == std::vector<std::pair<int, int>>{{1, 2}});

  const std::vector<int> s4{0, 1, 2, 3};
  const auto sets4 = qpart(s4, s4);
  REQUIRE(sets4.size() == 10);
  std::set<std::set<std::pair<int, int>>> unique;
  for (const auto& m : sets4)
    unique.insert(std::set<std::pair<int, int>>(m.begin(), m.end()));
  REQUIRE(unique.size() == 10);
  // Restricting the support keeps only matchings whose first pair touches
  // it, plus the empty set.
  const auto restricted = qpart(s4, {3});
  for (size_t i = 1; i < restricted.size(); ++i)
    REQUIRE((restricted[i][0].first == 3 || restricted[i][0].second == 3));
}

TEST_CASE("single-layer enumeration covers orientations and pauli choices") {
  const auto cn3 = depth_one_layers(3, {0, 1, 2}, LayerAlphabet::Cnot);
  REQUIRE(cn3.size() == 6);  // three pairs, two orientations
  const auto cn4 = depth_one_layers(4, {0, 1, 2, 3}, LayerAlphabet::Cnot);
  REQUIRE(cn4.size() == 24);  // 6*2 single pairs + 3 matchings * 4
  const auto tv2 = depth_one_layers(2, {0, 1}, LayerAlphabet::Tv);
  REQUIRE(tv2.size() == 9);
  std::set<std::string> distinct;
  for (const auto& layer : tv2) {
    REQUIRE(layer.size() == 1);
    distinct.insert(gate_to_text(layer[0]));
  }
  REQUIRE(distinct.size() == 9);
  const auto tv4 = depth_one_layers(4, {0, 1, 2, 3}, LayerAlphabet::Tv);
  REQUIRE(tv4.size() == 6 * 9 + 3 * 81);
}

TEST_CASE("qubit permutations commute to the front by relabeling") {
  Prng rng(33);
  const int n = 5;
  for (int trial = 0; trial < 30; ++trial) {
    Circuit c{n, {}};
    for (int k = 0; k < 8; ++k)
      c.gates.push_back(random_two_qubit(n, rng, true));
    const std::vector<int> p = testsupport::random_perm(n, rng);

    Circuit suffixed = c;
    suffixed.gates.push_back(Gate::qperm(p));
    const Circuit fronted = commute_perm_to_front(c, p);

    REQUIRE(replay(fronted, SpMatrix(n)) == replay(suffixed, SpMatrix(n)));
    bool identity = true;
    for (int q = 0; q < n; ++q) identity = identity && p[q] == q;
    const size_t lead = identity ? 0 : 1;  // trivial permutations are elided
    REQUIRE(fronted.gates.size() == c.gates.size() + lead);
    if (!identity) REQUIRE(fronted.gates[0].kind == GateKind::Qperm);
    for (size_t k = lead; k < fronted.gates.size(); ++k)
      REQUIRE(fronted.gates[k].kind == c.gates[k - lead].kind);
  }
}

TEST_CASE("circuit text form round-trips including permutations") {
  Circuit c{3, {Gate::cnot(0, 2), Gate::tv(1, 3, 0, 1), Gate::sqc(Sqc::SH, 2),
                Gate::swap(1, 2), Gate::qperm({2, 0, 1})}};
  for (const std::string& text :
       {circuit_to_text(c), circuit_to_compact(c)}) {
    std::string err;
    const auto back = parse_circuit(text, 3, &err);
    REQUIRE(back.has_value());
    REQUIRE(back->gates.size() == c.gates.size());
    for (size_t k = 0; k < c.gates.size(); ++k)
      REQUIRE(back->gates[k] == c.gates[k]);
  }
  std::string err;
  REQUIRE_FALSE(parse_circuit("CNOT 0 3", 3, &err).has_value());
  REQUIRE_FALSE(err.empty());
  REQUIRE_FALSE(parse_circuit("TV I X 0 1", 3, &err).has_value());
  REQUIRE_FALSE(parse_circuit("QPERM 0 0 1", 3, &err).has_value());
  REQUIRE_FALSE(parse_circuit("NOPE 1", 3, &err).has_value());
}
