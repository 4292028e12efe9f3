#include "helpers.hpp"
#include "hibi/harness.hpp"
#include "hibi/multiplicity.hpp"

#include <doctest.h>

using namespace hibi;

TEST_SUITE("harness") {

TEST_CASE("I_{2,4}: criterion and verdict agree") {
  GrassmannLattice G(2, 4);
  const auto r = conjecture_harness(G.lattice(), &G);
  CHECK(r.disagreements() == 0);
  CHECK(r.both_singular > 0);
  CHECK(r.inconsistent_classes == 0);
}

TEST_CASE("counterexample shows a disagreement") {
  const auto L = counterexample_lattice();
  const auto r = conjecture_harness(L);
  CHECK(r.gl_true_singular >= 1);
  const int x = test::at(L, {1, 5, 6});
  const auto it = std::find_if(r.faces.begin(), r.faces.end(), [&](const HarnessFace& f) { return f.D == ElementSet{x}; });
  REQUIRE(it != r.faces.end());
  CHECK(it->gl);
  CHECK_FALSE(it->smooth);
}

TEST_CASE("chains are smooth everywhere") {
  const auto r = conjecture_harness(chain_lattice(5));
  CHECK(r.faces.size() == 32);
  CHECK(r.both_smooth == 32);
}

TEST_CASE("h_isomorphic") {
  const auto L = idn(2, 5);
  GrassmannLattice G(2, 5);
  const auto h1 = h_poset(L, singular_window(G, 1, 1).Lij);
  const auto h2 = h_poset(L, singular_window(G, 2, 1).Lij);
  CHECK(h_isomorphic(h1, h2));
  CHECK_FALSE(h_isomorphic(h1, h_poset(L, jblock_face(G, 1, 1))));
}

TEST_CASE("H classes carry at most one known multiplicity on I_{2,6}") {
  GrassmannLattice G(2, 6);
  const auto r = conjecture_harness(G.lattice(), &G);
  CHECK(r.disagreements() == 0);
  CHECK(r.inconsistent_classes == 0);
  CHECK(r.known_multiplicities > 0);
}

}
