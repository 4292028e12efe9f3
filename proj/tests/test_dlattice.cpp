#include "helpers.hpp"
#include "hibi/corpus.hpp"
#include "hibi/dlattice.hpp"
#include "hibi/multiplicity.hpp"
#include "hibi/oracles.hpp"

#include <doctest.h>

using namespace hibi;
using hibi::test::at;
using hibi::test::error_of;

TEST_SUITE("dlattice") {

TEST_CASE("lattice_from_poset") {
  CHECK(lattice_from_poset(chain_poset(3)).size() == 3);
  CHECK(lattice_from_poset(test::diamond_poset()).size() == 4);
  const auto n5 = Poset::from_labels({"0", "a", "b", "c", "1"},
                                     {{"a", "0"}, {"b", "0"}, {"c", "b"}, {"1", "a"}, {"1", "c"}});
  CHECK(error_of([&] { lattice_from_poset(n5); }) == Errc::NotDistributive);
  const auto m3 = Poset::from_labels({"0", "a", "b", "c", "1"},
                                     {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"1", "a"}, {"1", "b"}, {"1", "c"}});
  CHECK(error_of([&] { lattice_from_poset(m3); }) == Errc::NotDistributive);
  CHECK(error_of([] { lattice_from_poset(antichain_poset(2)); }) == Errc::NotALattice);
}

TEST_CASE("irreducibles of I_{2,4}") {
  const auto L = idn(2, 4);
  const auto irr = irreducibles(L);
  CHECK(test::labels_of(L, normalized(irr.join)) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(test::labels_of(L, normalized(irr.join_meet)) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  const auto C = chain_lattice(5);
  CHECK(irreducibles(C).join.size() == 5);
}

TEST_CASE("cover_delta") {
  const auto L = idn(2, 4);
  CHECK(cover_delta(L, at(L, {1, 3}), at(L, {1, 2})) == at(L, {1, 3}));
  CHECK(cover_delta(L, at(L, {2, 4}), at(L, {1, 4})) == at(L, {2, 3}));
  CHECK(error_of([&] { cover_delta(L, at(L, {2, 4}), at(L, {1, 2})); }) == Errc::NotACover);
  const auto C = chain_lattice(4);
  CHECK(cover_delta(C, C.top(), C.poset().lower_covers(C.top()).front()) == C.top());
}

TEST_CASE("is_embedded_sublattice") {
  const auto L = idn(2, 4);
  ElementSet all(L.size());
  for (int x = 0; x < static_cast<int>(L.size()); ++x) all[x] = x;
  CHECK(is_embedded_sublattice(L, all));
  CHECK(is_embedded_sublattice(L, test::tuples(L, {{1, 2}, {3, 4}})));
  CHECK_FALSE(is_embedded_sublattice(L, test::tuples(L, {{1, 3}, {2, 4}})));
}

TEST_CASE("enumerate_embedded_sublattices") {
  for (int k = 1; k <= 6; ++k) CHECK(enumerate_embedded_sublattices(chain_lattice(k)).size() == (1u << k));
  const auto L = idn(2, 4);
  const auto faces = enumerate_embedded_sublattices(L);
  CHECK(std::count(faces.begin(), faces.end(), ElementSet{}) == 1);
  CHECK(std::count(faces.begin(), faces.end(), test::tuples(L, {{1, 2}, {3, 4}})) == 1);
  CHECK(faces == enumerate_embedded_sublattices(L, 3));
}

TEST_CASE("property: embedded sublattices equal the definition filter") {
  for (const auto& [name, L] : lattice_corpus(12)) {
    CAPTURE(name);
    std::vector<ElementSet> ref;
    const std::uint32_t n = static_cast<std::uint32_t>(L.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto s = mask_to_set(mask);
      if (oracle::is_embedded_by_definition(L.poset(), s)) ref.push_back(s);
    }
    auto got = enumerate_embedded_sublattices(L);
    std::sort(got.begin(), got.end());
    std::sort(ref.begin(), ref.end());
    CHECK(got == ref);
  }
}

TEST_CASE("property: join, meet, irreducibles and Birkhoff round trip") {
  for (const auto& [name, L] : lattice_corpus(20)) {
    CAPTURE(name);
    const auto& p = L.poset();
    const int n = static_cast<int>(L.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        CHECK(L.join(a, b) == oracle::brute_join(p, a, b));
        CHECK(L.meet(a, b) == oracle::brute_meet(p, a, b));
      }
    }
    CHECK(normalized(L.join_irreducibles()) == oracle::join_irreducibles_by_count(p));
    const auto B = birkhoff(L);
    for (int a = 0; a < n; ++a) {
      CHECK(B.element_of(B.ideal_of[a]) == a);
      for (int b = 0; b < n; ++b) CHECK(((B.ideal_of[a] & B.ideal_of[b]) == B.ideal_of[a]) == L.leq(a, b));
    }
  }
}

TEST_CASE("binomial_violations") {
  const auto L = idn(2, 4);
  const std::vector<Rational> ones(L.size(), Rational(1));
  CHECK(binomial_violations(L, ones).empty());
  const auto good = characteristic_point(L, test::tuples(L, {{1, 2}, {3, 4}}));
  CHECK(binomial_violations(L, good).empty());
  const auto bad = characteristic_point(L, test::tuples(L, {{1, 4}, {2, 3}}));
  const auto v = binomial_violations(L, bad);
  REQUIRE(v.size() == 1);
  CHECK(std::min(v[0].tau, v[0].phi) == std::min(at(L, {1, 4}), at(L, {2, 3})));
}

}
