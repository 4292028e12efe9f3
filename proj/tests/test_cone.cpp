#include "helpers.hpp"
#include "hibi/cone.hpp"
#include "hibi/corpus.hpp"
#include "hibi/int_matrix.hpp"
#include "hibi/multiplicity.hpp"
#include "hibi/oracles.hpp"

#include <doctest.h>

using namespace hibi;
using hibi::test::at;
using hibi::test::error_of;

namespace {

std::vector<std::vector<int>> sorted_rows(const std::vector<Generator>& g) {
  auto r = generator_rows(g);
  std::sort(r.begin(), r.end());
  return r;
}

ElementSet everything(const DistributiveLattice& L) {
  ElementSet s(L.size());
  for (int x = 0; x < static_cast<int>(L.size()); ++x) s[x] = x;
  return s;
}

}  // namespace

TEST_SUITE("cone") {

TEST_CASE("cone_generators") {
  for (int k = 1; k <= 5; ++k) {
    const auto C = chain_lattice(k);
    const auto W = cone_generators(C);
    CHECK(W.size() == static_cast<std::size_t>(k));
    CHECK(oracle::rational_rank(generator_rows(W)) == static_cast<std::size_t>(k));
  }
  const auto L = idn(2, 4);
  const auto W = cone_generators(L);
  CHECK(W.size() == 6);
  CHECK(std::count_if(W.begin(), W.end(), [](const Generator& g) { return g.kind == Generator::Kind::Maximal; }) == 1);
  for (const auto& g : W) CHECK(g.v.coords.size() == 5);

  const auto D = diamond_lattice();
  const auto WD = cone_generators(D);
  CHECK(WD.size() == 4);
  CHECK(oracle::rational_rank(generator_rows(WD)) == 3);
}

TEST_CASE("face_generators") {
  const auto L = idn(2, 4);
  CHECK(face_generators(L, everything(L)).empty());
  GrassmannLattice G(2, 4);
  const auto D = test::tuples(L, {{1, 2}, {3, 4}});
  auto ref = oracle::cover_vectors(G, {{{2, 3}, {1, 3}}, {{1, 4}, {1, 3}}, {{3, 4}, {2, 3}}, {{3, 4}, {1, 4}}});
  CHECK(sorted_rows(face_generators(L, D)) == ref);
  CHECK(error_of([&] { face_generators(L, test::tuples(L, {{1, 3}, {2, 4}})); }) == Errc::NotEmbedded);
}

TEST_CASE("face_generators on the counterexample") {
  const auto L = counterexample_lattice();
  const ElementSet D{at(L, {1, 5, 6})};
  const auto W = face_generators(L, D);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> covers;
  bool has_234 = false;
  for (const auto& g : W) {
    const auto& J = L.join_irreducibles();
    if (g.kind == Generator::Kind::Cover) {
      covers.emplace_back(L.poset().label(J[g.upper]).tuple(), L.poset().label(J[g.lower]).tuple());
    } else {
      has_234 = L.poset().label(J[g.upper]).tuple() == std::vector<int>{2, 3, 4};
    }
  }
  std::sort(covers.begin(), covers.end());
  using P = std::pair<std::vector<int>, std::vector<int>>;
  const std::vector<P> expected{P{{1, 3, 5}, {1, 3, 4}}, P{{1, 3, 6}, {1, 3, 5}}, P{{1, 4, 5}, {1, 3, 5}},
                                P{{1, 5, 6}, {1, 3, 6}}, P{{1, 5, 6}, {1, 4, 5}}};
  CHECK(covers == expected);
  CHECK(has_234);
  CHECK(W.size() == 6);
}

TEST_CASE("face_support") {
  const auto L = idn(2, 4);
  CHECK(face_support(L, {}) == everything(L));
  std::vector<NVector> all;
  for (const auto& g : cone_generators(L)) all.push_back(g.v);
  CHECK(face_support(L, all).empty());
  const auto D = test::tuples(L, {{1, 2}, {3, 4}});
  std::vector<NVector> w;
  for (const auto& g : face_generators(L, D)) w.push_back(g.v);
  CHECK(face_support(L, w) == D);
  std::vector<NVector> junk{NVector{{1, 1, 0, 0, 0}}};
  CHECK(error_of([&] { face_support(L, junk); }) == Errc::NotGenerators);
}

TEST_CASE("distinguished_point") {
  const auto L = idn(2, 4);
  const auto p = distinguished_point(L, everything(L));
  CHECK(std::all_of(p.begin(), p.end(), [](const Rational& r) { return r == 1; }));
  const auto z = distinguished_point(L, {});
  CHECK(std::all_of(z.begin(), z.end(), [](const Rational& r) { return r == 0; }));
  const auto D = test::tuples(L, {{1, 2}, {3, 4}});
  const auto q = distinguished_point(L, D);
  for (int x = 0; x < static_cast<int>(L.size()); ++x) CHECK((q[x] == 1) == std::binary_search(D.begin(), D.end(), x));
}

TEST_CASE("h_poset") {
  const auto L = idn(2, 4);
  CHECK(h_poset(L, everything(L)).empty());
  const auto H = h_poset(L, test::tuples(L, {{1, 2}, {3, 4}}));
  CHECK(H.components.size() == 1);
  CHECK(H.edges.size() == 4);
  CHECK(H.vertices.size() == 4);
  CHECK(H.marked.empty());

  GrassmannLattice G(2, 8);
  const auto U = h_poset(G.lattice(), jblock_union_face(G, {{1, 0}, {4, 0}}));
  CHECK(U.components.size() == 2);
}

TEST_CASE("face_geometry") {
  const auto L = idn(2, 4);
  const auto g0 = face_geometry(L, everything(L));
  CHECK(g0.face_dim == 0);
  CHECK(g0.orbit_dim == 5);
  CHECK(g0.ambient_dim == 5);
  const auto g = face_geometry(L, test::tuples(L, {{1, 2}, {3, 4}}));
  CHECK(g.face_dim == 3);
  CHECK(g.orbit_dim == 2);
  CHECK(g.ambient_dim == 5);
  const auto C = counterexample_lattice();
  const auto gc = face_geometry(C, ElementSet{at(C, {1, 5, 6})});
  CHECK(gc.face_dim == 5);
  CHECK(gc.orbit_dim == 1);
  CHECK(gc.ambient_dim == 6);
}

TEST_CASE("property: face bijection round trip, binomials and dimensions") {
  for (const auto& [name, L] : lattice_corpus(14)) {
    CAPTURE(name);
    for (const auto& D : enumerate_embedded_sublattices(L)) {
      const auto W = face_generators(L, D);
      std::vector<NVector> v;
      for (const auto& g : W) v.push_back(g.v);
      CHECK(face_support(L, v) == D);
      CHECK(binomial_violations(L, distinguished_point(L, D)).empty());
      const auto geo = face_geometry(L, D);
      CHECK(geo.dims_add_up());
      CHECK(geo.face_dim == static_cast<int>(oracle::rational_rank(generator_rows(W))));
      for (const auto& g : W) {
        for (int a : D) CHECK(functional_eval(L, a, g.v) == 0);
      }
    }
  }
}

}
