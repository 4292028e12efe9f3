#include "helpers.hpp"
#include "hibi/multiplicity.hpp"
#include "hibi/oracles.hpp"

#include <doctest.h>

using namespace hibi;
using hibi::test::error_of;

TEST_SUITE("multiplicity") {

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(4) == 14);
  CHECK(catalan(4) == maximal_chain_count(idn(2, 6).poset()));
  for (unsigned m = 0; m <= 9; ++m) CHECK(catalan(m) == oracle::ballot_sequences(m));
}

TEST_CASE("fixed_point_mult") {
  CHECK(fixed_point_mult(chain_lattice(5)) == 1);
  CHECK(fixed_point_mult(diamond_lattice()) == 2);
  for (int n = 4; n <= 9; ++n) CHECK(fixed_point_mult(idn(2, n)) == catalan(n - 2));
}

TEST_CASE("partitions and hooks") {
  const Partition p({3, 2});
  CHECK(p.size() == 5);
  CHECK(p.hook(0, 0) == 4);
  CHECK(p.hook(1, 1) == 1);
  CHECK(p.conjugate().parts() == std::vector<int>{2, 2, 1});
  CHECK(standard_tableaux_count(p) == 5);
  CHECK(standard_tableaux_count(Partition({2, 1})) == 2);
  CHECK(standard_tableaux_count(Partition::rectangle(2, 4)) == 14);
  CHECK(error_of([] { Partition({1, 2}); }) == Errc::BadParameters);
  CHECK(error_of([] { Partition({2, 0}); }) == Errc::BadParameters);
}

TEST_CASE("hook_mult") {
  CHECK(hook_mult(3, 6) == 42);
  for (int n = 2; n <= 8; ++n) CHECK(hook_mult(1, n) == 1);
  CHECK(hook_mult(2, 6) == 14);
  CHECK(error_of([] { hook_mult(4, 4); }) == Errc::BadParameters);
}

TEST_CASE("property: hook_mult counts maximal chains of I_{d,n}") {
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d < n; ++d) {
      CAPTURE(d);
      CAPTURE(n);
      const auto L = idn(d, n);
      CHECK(hook_mult(d, n) == oracle::chain_count_dfs(L.poset()));
      CHECK(hook_mult(d, n) == hook_mult(n - d, n));
    }
  }
}

TEST_CASE("face_mult") {
  CHECK(face_mult(WindowFace{2, 4, 1, 1}) == 2);
  CHECK(face_mult(WindowFace{3, 7, 2, 2}) == 2);
  for (int n = 4; n <= 8; ++n) CHECK(face_mult(JBlockFace{n, 1, 0}) == 2);
  CHECK(face_mult(JBlockFace{9, 1, 3}) == catalan(5));
  CHECK(face_mult(JBlockUnionFace{9, {{1, 1}, {5, 0}}}) == 10);
  CHECK(error_of([] { face_mult(WindowFace{2, 4, 2, 1}); }) == Errc::IndexOutOfRange);
  CHECK(error_of([] { face_mult(JBlockUnionFace{8, {{1, 0}, {2, 0}}}); }) == Errc::BlocksOverlapOrTouch);
}

TEST_CASE("property: identify_face_family inverts the face constructors") {
  for (int n = 4; n <= 8; ++n) {
    GrassmannLattice G(2, n);
    for (int i = 1; i <= n - 3; ++i) {
      for (int k = 0; i + k <= n - 3; ++k) {
        const auto back = identify_face_family(G, jblock_face(G, i, k));
        CHECK(face_mult(back) == catalan(k + 2));
      }
    }
  }
  GrassmannLattice G9(2, 9);
  const auto u = identify_face_family(G9, jblock_union_face(G9, {{1, 1}, {5, 0}}));
  REQUIRE(std::holds_alternative<JBlockUnionFace>(u));
  CHECK(std::get<JBlockUnionFace>(u).blocks == std::vector<JBlock>{{1, 1}, {5, 0}});

  GrassmannLattice G36(3, 6);
  for (const auto& w : all_windows(G36)) {
    const auto f = identify_face_family(G36, w.Lij);
    REQUIRE(std::holds_alternative<WindowFace>(f));
    CHECK(std::get<WindowFace>(f).i == w.i);
    CHECK(std::get<WindowFace>(f).j == w.j);
  }
  CHECK(error_of([&] { identify_face_family(G36, ElementSet{}); }) == Errc::UnsupportedFace);
}

}
