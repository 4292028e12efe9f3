#include "helpers.hpp"
#include "hibi/corpus.hpp"
#include "hibi/int_matrix.hpp"
#include "hibi/oracles.hpp"
#include "hibi/rational_lp.hpp"
#include "hibi/smoothness.hpp"

#include <doctest.h>

#include <random>

using namespace hibi;
using hibi::test::at;
using hibi::test::error_of;
using Rows = std::vector<std::vector<int>>;

namespace {

std::vector<BigInt> big(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

Rows random_rows(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Rows r(rows, std::vector<int>(cols));
  for (auto& row : r)
    for (auto& x : row) x = dist(rng);
  return r;
}

}  // namespace

TEST_SUITE("smoothness") {

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form(IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)) == big({1, 1, 1}));
  CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 2}}, 2)) == big({2, 2}));
  CHECK(smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}, 2)) == big({2, 4}));
  const auto L = idn(2, 4);
  const auto W = face_generators(L, test::tuples(L, {{1, 2}, {3, 4}}));
  const auto M = IntMatrix::from_rows(generator_rows(W), 5);
  CHECK(smith_normal_form(M) == big({1, 1, 1}));
  CHECK(rank(M) == 3);
}

TEST_CASE("property: SNF and rank agree with determinantal divisors") {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 60; ++t) {
    const int r = 1 + t % 4, c = 1 + (t / 4) % 4;
    const auto rows = random_rows(rng, r, c, -3, 3);
    CAPTURE(t);
    const auto M = IntMatrix::from_rows(rows, c);
    CHECK(smith_normal_form(M) == oracle::snf_by_minors(rows));
    CHECK(rank(M) == oracle::rational_rank(rows));
    const auto dep = row_dependency(M);
    CHECK(dep.has_value() == (rank(M) < static_cast<std::size_t>(r)));
    if (dep) {
      for (int j = 0; j < c; ++j) {
        BigInt s = 0;
        for (int i = 0; i < r; ++i) s += (*dep)[i] * rows[i][j];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("property: SNF on larger random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 8; ++t) {
    const auto rows = random_rows(rng, 6, 6, -9, 9);
    CHECK(smith_normal_form(IntMatrix::from_rows(rows, 6)) == oracle::snf_by_minors(rows));
  }
}

TEST_CASE("minimal_row_dependency finds a circuit") {
  // rows 0 and 3 are parallel; rows 1, 2, 4 form a larger dependency
  const Rows rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 1, 1}};
  const auto dep = minimal_row_dependency(IntMatrix::from_rows(rows, 3));
  REQUIRE(dep.has_value());
  int support = 0;
  for (const auto& c : *dep) support += c != 0;
  CHECK(support == 2);
  CHECK_FALSE(minimal_row_dependency(IntMatrix::from_rows({{1, 0}, {0, 1}}, 2)).has_value());
}

TEST_CASE("cone_combination") {
  const Rows gens{{1, 0}, {0, 1}};
  const auto c = cone_combination(gens, {2, 3});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK_FALSE(in_rational_cone(gens, {-1, 0}));
  CHECK(in_rational_cone(Rows{{1, 1}, {1, -1}}, {1, 0}));
}

TEST_CASE("irredundant_generators") {
  CHECK(irredundant_generators(Rows{{1, 0}, {0, 1}, {1, 1}}) == std::vector<int>{0, 1});
  const Rows indep{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(irredundant_generators(indep) == std::vector<int>{0, 1, 2});
  const auto L = idn(2, 4);
  const auto rows = generator_rows(face_generators(L, test::tuples(L, {{1, 2}, {3, 4}})));
  CHECK(irredundant_generators(rows).size() == 4);
  CHECK(error_of([] { irredundant_generators(Rows(65, std::vector<int>{1})); }) == Errc::SizeLimitExceeded);
}

TEST_CASE("property: irredundant_generators is idempotent") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    const auto rows = random_rows(rng, 2 + t % 5, 3, -2, 2);
    const auto keep = irredundant_generators(rows);
    Rows kept;
    for (int i : keep) kept.push_back(rows[i]);
    const auto again = irredundant_generators(kept);
    CHECK(again.size() == kept.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (std::find(keep.begin(), keep.end(), static_cast<int>(i)) == keep.end()) {
        CHECK(in_rational_cone(kept, rows[i]));
      }
    }
  }
}

TEST_CASE("is_smooth_face examples") {
  const auto L = idn(2, 4);
  ElementSet all(L.size());
  for (int x = 0; x < static_cast<int>(L.size()); ++x) all[x] = x;
  CHECK(is_smooth_face(L, all).smooth());
  CHECK(is_smooth_face(L, all).generators.empty());

  const auto v = is_smooth_face(L, test::tuples(L, {{1, 2}, {3, 4}}));
  CHECK_FALSE(v.smooth());
  CHECK(v.evidence == SmoothnessVerdict::Evidence::Dependency);
  CHECK(std::count_if(v.dependency.begin(), v.dependency.end(), [](const BigInt& c) { return c != 0; }) == 4);
  for (const auto& c : v.dependency) CHECK(abs(c) <= 1);
  CHECK(replay_evidence(v));

  const auto C = counterexample_lattice();
  const auto vc = is_smooth_face(C, ElementSet{at(C, {1, 5, 6})});
  CHECK_FALSE(vc.smooth());
  CHECK(vc.rank == 5);
  CHECK(replay_evidence(vc));
}

TEST_CASE("gl_criterion examples") {
  const auto L = idn(2, 4);
  ElementSet all(L.size());
  for (int x = 0; x < static_cast<int>(L.size()); ++x) all[x] = x;
  CHECK(gl_criterion(L, all));
  CHECK_FALSE(gl_criterion(L, test::tuples(L, {{1, 2}, {3, 4}})));
  const auto C = counterexample_lattice();
  CHECK(gl_criterion(C, ElementSet{at(C, {1, 5, 6})}));
  CHECK(error_of([&] { gl_criterion(L, test::tuples(L, {{1, 3}, {2, 4}})); }) == Errc::NotEmbedded);
}

TEST_CASE("singular_locus_idn") {
  const auto r24 = singular_locus_idn(2, 4);
  REQUIRE(r24.windows.size() == 1);
  CHECK(r24.windows[0].geometry.face_dim == 3);
  CHECK(r24.windows[0].geometry.ambient_dim - r24.windows[0].geometry.orbit_dim == 3);
  CHECK(r24.windows[0].matches_diamond);
  CHECK(r24.windows[0].multiplicity == 2);
  CHECK(singular_locus_idn(2, 5).windows.size() == 2);
  CHECK(singular_locus_idn(3, 7).windows.size() == 6);
  CHECK(singular_locus_idn(3, 7).windows_ok());
}

TEST_CASE("property: exhaustive scans agree on small Grassmann lattices") {
  for (auto [d, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 5}}) {
    GrassmannLattice G(d, n);
    const auto s1 = scan_idn_faces(G, 1);
    CAPTURE(n);
    CHECK(s1.ok());
    CHECK(s1.disagreements == 0);
    CHECK(s1.faces == s1.smooth + s1.singular);
    CHECK(s1.maximal_singular.size() == all_windows(G).size());
    const auto s2 = scan_idn_faces(G, 3);
    CHECK(s2.faces == s1.faces);
    CHECK(s2.singular == s1.singular);
    CHECK(s2.maximal_singular == s1.maximal_singular);
  }
}

TEST_CASE("property: smooth faces have unimodular generators on the corpus") {
  for (const auto& [name, L] : lattice_corpus(10)) {
    CAPTURE(name);
    for (const auto& D : enumerate_embedded_sublattices(L)) {
      const auto v = is_smooth_face(L, D);
      CHECK(replay_evidence(v));
      if (v.smooth()) {
        Rows kept;
        const auto rows = generator_rows(v.generators);
        for (int i : v.kept) kept.push_back(rows[i]);
        CHECK(oracle::rational_rank(kept) == kept.size());
        for (const auto& f : oracle::snf_by_minors(kept)) CHECK(f == 1);
      }
    }
  }
}

}
