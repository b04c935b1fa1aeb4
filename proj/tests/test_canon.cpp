#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>

#include "cliffsynth/canon.hpp"
#include "cliffsynth/prng.hpp"
#include "test_support.hpp"

using namespace cliffsynth;

namespace {

// Random qubit-permutation-with-single-qubit-Cliffords symplectic matrix.
SpMatrix random_perm_sqc(int n, Prng& rng) {
  SpMatrix m = qperm_symplectic(n, testsupport::random_perm(n, rng));
  for (int q = 0; q < n; ++q)
    m = sp_mul(sqc_matrix(n, q, static_cast<Sqc>(rng.next_below(6))), m);
  return m;
}

}  // namespace

TEST_CASE("matrix graphs carry one edge per matrix one") {
  REQUIRE(gl_to_graph(BitMatrix::identity(2)).edge_count() == 2);
  BitMatrix ones(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) ones.set(r, c, true);
  REQUIRE(gl_to_graph(ones).edge_count() == 4);
  BitMatrix a = BitMatrix::identity(2);
  a.set(0, 1, true);
  const BiGraph g = gl_to_graph(a);
  REQUIRE(g.edge_count() == 3);
  REQUIRE(g.nr == 2);
  REQUIRE(g.nc == 2);
  REQUIRE(g.has_edge(0, 2));
  REQUIRE(g.has_edge(0, 3));
  REQUIRE(g.has_edge(1, 3));
}

TEST_CASE("symplectic graphs extend the matrix with block sums and triangles") {
  const BiGraph g = sp_to_graph(SpMatrix(1));
  REQUIRE(g.size() == 6);
  // Extended matrix [[1,0,1],[0,1,1],[1,1,0]] has six ones; two triangles
  // add six more edges.
  REQUIRE(g.edge_count() == 12);
  REQUIRE(g.has_edge(0, 1));  // row triple clique
  REQUIRE(g.has_edge(0, 2));
  REQUIRE(g.has_edge(1, 2));
  REQUIRE(g.has_edge(3, 4));  // column triple clique
  REQUIRE(sp_to_graph(SpMatrix(4)).size() == 24);
  BitMatrix bad = BitMatrix::identity(4);
  bad.set(0, 1, true);
  REQUIRE_THROWS(sp_to_graph(SpMatrix(2, bad)));
}

TEST_CASE("certificates ignore row and column order") {
  const BitMatrix i2 = BitMatrix::identity(2);
  BitMatrix sw(2, 2);
  sw.set(0, 1, true);
  sw.set(1, 0, true);
  REQUIRE(gl_cert(i2).bytes == gl_cert(sw).bytes);
  BitMatrix a = i2;
  a.set(0, 1, true);
  REQUIRE(gl_cert(i2).bytes != gl_cert(a).bytes);
}

TEST_CASE("certificates are invariant under random row and column shuffles") {
  Prng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(4));
    const BitMatrix a = random_gl(n, rng.next_u64());
    const BitMatrix pr = testsupport::perm_matrix(testsupport::random_perm(n, rng));
    const BitMatrix pc = testsupport::perm_matrix(testsupport::random_perm(n, rng));
    const BitMatrix b = mul(mul(pr, a), pc);
    REQUIRE(gl_cert(a).bytes == gl_cert(b).bytes);
  }
}

TEST_CASE("equal certificates mean matrices differ by permutations only") {
  const auto all = testsupport::enumerate_gl3();
  // Oracle relation: reachable by some pair of row/column permutations.
  std::vector<BitMatrix> perms3;
  std::vector<int> p{0, 1, 2};
  do {
    perms3.push_back(testsupport::perm_matrix(p));
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::string, size_t> class_of;
  std::vector<std::string> canonical_member;
  std::vector<std::string> certs;
  certs.reserve(all.size());
  for (const BitMatrix& m : all) certs.push_back(gl_cert(m).bytes);

  for (size_t x = 0; x < all.size(); ++x) {
    std::set<std::string> orbit;
    for (const BitMatrix& pr : perms3)
      for (const BitMatrix& pc : perms3)
        orbit.insert(mul(mul(pr, all[x]), pc).key());
    for (size_t y = 0; y < all.size(); ++y) {
      const bool same_orbit = orbit.count(all[y].key()) > 0;
      const bool same_cert = certs[x] == certs[y];
      REQUIRE(same_orbit == same_cert);
    }
  }
}

TEST_CASE("the 168 invertible 3x3 matrices form five closed classes") {
  std::set<std::string> classes;
  for (const BitMatrix& m : testsupport::enumerate_gl3()) {
    const CanonCert c = cert_min_gl(m);
    classes.insert(c.bytes);
    REQUIRE(cert_min_gl(transpose(m)).bytes == c.bytes);
    REQUIRE(cert_min_gl(*inverse(m)).bytes == c.bytes);
  }
  REQUIRE(classes.size() == 5);
}

TEST_CASE("recovered permutations reconstruct the matrix exactly") {
  Prng rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(4));
    const BitMatrix b = random_gl(n, rng.next_u64());
    const BitMatrix pr = testsupport::perm_matrix(testsupport::random_perm(n, rng));
    const BitMatrix pc = testsupport::perm_matrix(testsupport::random_perm(n, rng));
    const BitMatrix a = mul(mul(pr, b), pc);
    const auto rec = recover_gl_perms(a, b);
    REQUIRE(rec.has_value());
    REQUIRE(is_permutation(rec->first));
    REQUIRE(is_permutation(rec->second));
    REQUIRE(mul(mul(rec->first, b), rec->second) == a);
  }
  const BitMatrix i3 = BitMatrix::identity(3);
  BitMatrix other = i3;
  other.set(0, 1, true);
  REQUIRE_FALSE(recover_gl_perms(i3, other).has_value());
}

TEST_CASE("symplectic certificates ignore one-sided relabelings") {
  Prng rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(2));
    const SpMatrix b = random_sp(n, rng.next_u64());
    const SpMatrix sr = random_perm_sqc(n, rng);
    const SpMatrix sc = random_perm_sqc(n, rng);
    const SpMatrix a = sp_mul(sp_mul(sr, b), sc);
    REQUIRE(sp_cert(a).bytes == sp_cert(b).bytes);
  }
}

TEST_CASE("symplectic recovery rebuilds the relabeling pair") {
  Prng rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const SpMatrix b = random_sp(3, rng.next_u64());
    const SpMatrix sr = random_perm_sqc(3, rng);
    const SpMatrix sc = random_perm_sqc(3, rng);
    const SpMatrix a = sp_mul(sp_mul(sr, b), sc);
    const auto rec = recover_sp_perms(a, b);
    REQUIRE(rec.has_value());
    REQUIRE(is_perm_sqc(rec->first));
    REQUIRE(is_perm_sqc(rec->second));
    REQUIRE(mul(mul(rec->first.m, b.m), rec->second.m) == a.m);
  }
}

TEST_CASE("canonical labelings map qubit triples onto qubit triples") {
  const auto all = testsupport::enumerate_sp2();
  std::map<std::string, std::vector<size_t>> by_cert;
  std::vector<CanonCert> certs(all.size());
  for (size_t i = 0; i < all.size(); ++i) {
    certs[i] = sp_cert(all[i]);
    by_cert[certs[i].bytes].push_back(i);
  }
  // Two-sided relabelings plus transpose/inverse collapse the group to two
  // classes: the free one and the entangling one.
  std::set<std::string> min_classes;
  for (const SpMatrix& m : all) min_classes.insert(cert_min_sp(m).bytes);
  REQUIRE(min_classes.size() == 2);

  Prng rng(65);
  for (const auto& [cert, members] : by_cert) {
    for (int trial = 0; trial < 10; ++trial) {
      const size_t x = members[rng.next_below(members.size())];
      const size_t y = members[rng.next_below(members.size())];
      // Composing the two labelings sends row triples to row triples.
      const int v = 12;
      std::vector<int> phi(static_cast<size_t>(v));
      for (int pos = 0; pos < v; ++pos)
        phi[static_cast<size_t>(certs[y].labeling[static_cast<size_t>(pos)])] =
            certs[x].labeling[static_cast<size_t>(pos)];
      for (int side = 0; side < 2; ++side) {
        const int off = side * 6;
        for (int k = 0; k < 2; ++k) {
          const std::set<int> triple{phi[static_cast<size_t>(off + k)],
                                     phi[static_cast<size_t>(off + 2 + k)],
                                     phi[static_cast<size_t>(off + 4 + k)]};
          bool matches = false;
          for (int k2 = 0; k2 < 2; ++k2)
            if (triple == std::set<int>{off + k2, off + 2 + k2, off + 4 + k2})
              matches = true;
          REQUIRE(matches);
        }
      }
      const auto rec = recover_sp_perms(all[x], all[y]);
      REQUIRE(rec.has_value());
      REQUIRE(mul(mul(rec->first.m, all[y].m), rec->second.m) == all[x].m);
    }
  }
}
