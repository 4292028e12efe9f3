#include "helpers.hpp"
#include "hibi/corpus.hpp"
#include "hibi/hilbert.hpp"
#include "hibi/multiplicity.hpp"
#include "hibi/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hibi;
using hibi::test::error_of;

TEST_SUITE("hilbert") {

TEST_CASE("SqFreeIdeal normalisation") {
  const SqFreeIdeal I(4, {{2, 0}, {0, 2, 3}, {1}});
  CHECK(I.generators() == std::vector<std::vector<int>>{{0, 2}, {1}});
  CHECK(I.contains_monomial_support({0, 1}));
  CHECK_FALSE(I.contains_monomial_support({0, 3}));
  CHECK(error_of([] { SqFreeIdeal(2, {{}}); }) == Errc::BadParameters);
  CHECK(error_of([] { SqFreeIdeal(2, {{5}}); }) == Errc::BadParameters);
}

TEST_CASE("sqfree_hilbert examples") {
  const auto h1 = sqfree_hilbert(SqFreeIdeal(1, {}));
  CHECK(h1.krull_dim == 1);
  CHECK(h1.degree == 1);
  for (unsigned m = 0; m <= 5; ++m) CHECK(h1.phi(m) == 1);

  const auto hd = sqfree_hilbert(SqFreeIdeal(4, {{1, 2}}));
  CHECK(hd.krull_dim == 3);
  CHECK(hd.degree == 2);
  CHECK(hd.phi(1) == 4);
  CHECK(hd.phi(2) == 9);

  const auto L = idn(2, 4);
  const auto h = sqfree_hilbert(stanley_reisner_ideal(L));
  CHECK(h.krull_dim == 5);
  CHECK(h.degree == 2);
  CHECK(error_of([] { sqfree_hilbert(SqFreeIdeal(25, {})); }) == Errc::SizeLimitExceeded);
}

TEST_CASE("property: phi matches monomial enumeration and the series") {
  std::mt19937 rng(99);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 6;
    std::uniform_int_distribution<int> count(0, 4), var(0, n - 1), len(1, std::min(n, 3));
    std::vector<std::vector<int>> gens(count(rng));
    for (auto& g : gens) {
      const int l = len(rng);
      for (int k = 0; k < l; ++k) g.push_back(var(rng));
    }
    const SqFreeIdeal I(n, gens);
    const auto h = sqfree_hilbert(I);
    for (unsigned m = 0; m <= 5; ++m) {
      CAPTURE(t);
      CHECK(h.phi(m) == oracle::standard_monomials(I, m));
      CHECK(h.series_coefficient(m) == h.phi(m));
    }
  }
}

TEST_CASE("lattice_hilbert_crosscheck") {
  const auto rows = lattice_hilbert_crosscheck(diamond_lattice(), 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].phi == 4);
  CHECK(rows[1].multichains == 9);
  CHECK(rows[1].equal());
  for (const auto& [name, L] : lattice_corpus(12)) {
    CAPTURE(name);
    const auto r = lattice_hilbert_crosscheck(L, 3);
    CHECK(r[0].multichains == L.size());
    for (const auto& row : r) CHECK(row.equal());
    const auto h = sqfree_hilbert(stanley_reisner_ideal(L));
    CHECK(h.degree == fixed_point_mult(L));
    CHECK(h.krull_dim == static_cast<int>(L.rank_of_torus()));
  }
  CHECK(error_of([] { lattice_hilbert_crosscheck(idn(2, 6), 2); }) == Errc::SizeLimitExceeded);
}

}
