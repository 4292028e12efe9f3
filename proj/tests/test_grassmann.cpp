#include "helpers.hpp"
#include "hibi/dlattice.hpp"
#include "hibi/grassmann.hpp"
#include "hibi/oracles.hpp"

#include <doctest.h>

using namespace hibi;
using hibi::test::at;
using hibi::test::error_of;
using Tuples = std::vector<std::vector<int>>;

TEST_SUITE("grassmann") {

TEST_CASE("idn") {
  const auto C = idn(1, 3);
  CHECK(C.size() == 3);
  CHECK(grading(C.poset()).rank == 2);
  const auto L = idn(2, 4);
  CHECK(L.size() == 6);
  CHECK(L.rank_of_torus() == 5);
  CHECK(grading(L.poset()).rank == 4);
  CHECK(error_of([] { idn(3, 3); }) == Errc::BadParameters);
  CHECK(error_of([] { idn(0, 3); }) == Errc::BadParameters);
  for (int n = 3; n <= 8; ++n) {
    for (int d = 1; d < n; ++d) CHECK(idn(d, n).size() == binomial(n, d));
  }
}

TEST_CASE("classify_element") {
  CHECK(classify_element(3, 6, GrassTuple({2, 3, 4})).kind == ElementClass::Both);
  CHECK(classify_element(2, 4, GrassTuple({1, 3})).kind == ElementClass::JoinIrr);
  CHECK(classify_element(3, 6, GrassTuple({1, 4, 5})).kind == ElementClass::JoinIrr);
  CHECK(classify_element(2, 4, GrassTuple({1, 3})).segments == Tuples{{1}, {3}});
}

TEST_CASE("property: classify_element agrees with cover counts") {
  for (int n = 3; n <= 8; ++n) {
    for (int d = 1; d < n; ++d) {
      GrassmannLattice G(d, n);
      const auto& L = G.lattice();
      const auto irr = irreducibles(L);
      for (int x = 0; x < static_cast<int>(L.size()); ++x) {
        const bool j = std::count(irr.join.begin(), irr.join.end(), x) > 0;
        const bool m = std::count(irr.meet.begin(), irr.meet.end(), x) > 0;
        const auto expected = j && m ? ElementClass::Both
                              : j    ? ElementClass::JoinIrr
                              : m    ? ElementClass::MeetIrr
                                     : ElementClass::Neither;
        CAPTURE(G.tuple(x).str());
        CHECK(classify_element(d, n, G.tuple(x)).kind == expected);
      }
    }
  }
}

TEST_CASE("singular_window examples") {
  GrassmannLattice G(2, 4);
  const auto w = singular_window(G, 1, 1);
  CHECK(w.mu == GrassTuple({1, 3}));
  CHECK(w.lambda == GrassTuple({2, 4}));
  CHECK(w.A == GrassTuple({2, 3}));
  CHECK(w.B == GrassTuple({1, 4}));
  CHECK(w.C == GrassTuple({3, 4}));
  CHECK(test::labels_of(G.lattice(), w.Lij) == Tuples{{1, 2}, {3, 4}});

  GrassmannLattice G37(3, 7);
  const auto w2 = singular_window(G37, 1, 2);
  CHECK(w2.mu == GrassTuple({1, 2, 4}));
  CHECK(w2.lambda == GrassTuple({2, 3, 7}));

  CHECK(error_of([&] { singular_window(G, 2, 1); }) == Errc::IndexOutOfRange);
  CHECK(error_of([&] { singular_window(G, 1, 0); }) == Errc::IndexOutOfRange);
  CHECK(all_windows(G37).size() == 6);
}

TEST_CASE("property: windows match the closed-form tuples and are embedded") {
  for (int n = 4; n <= 8; ++n) {
    for (int d = 2; d <= std::min(4, n - 2); ++d) {
      GrassmannLattice G(d, n);
      for (const auto& w : all_windows(G)) {
        CAPTURE(d);
        CAPTURE(n);
        const auto ref = oracle::window_tuples(d, n, w.i, w.j);
        CHECK(w.mu.entries() == ref.mu);
        CHECK(w.A.entries() == ref.A);
        CHECK(w.B.entries() == ref.B);
        CHECK(w.C.entries() == ref.C);
        CHECK(is_embedded_sublattice(G.lattice(), w.Lij));
        const int mu = G.index(w.mu), lambda = G.index(w.lambda);
        for (int x : w.Lij) CHECK_FALSE((G.lattice().leq(mu, x) && G.lattice().leq(x, lambda)));
      }
    }
  }
}

TEST_CASE("jblock_face") {
  GrassmannLattice G5(2, 5);
  CHECK(test::labels_of(G5.lattice(), jblock_face(G5, 2, 0)) == Tuples{{1, 2}, {1, 3}, {2, 3}, {4, 5}});

  GrassmannLattice G6(2, 6);
  CHECK(test::labels_of(G6.lattice(), jblock_face(G6, 1, 0)) ==
        Tuples{{1, 2}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
  // maximal k leaves the top as the upper interval
  const auto top = jblock_face(G6, 1, 6 - 1 - 3);
  CHECK(std::count(top.begin(), top.end(), at(G6.lattice(), {5, 6})) == 1);
  CHECK(std::count(top.begin(), top.end(), at(G6.lattice(), {4, 6})) == 0);

  CHECK(jblock_union_face(G6, {{1, 1}}) == jblock_face(G6, 1, 1));
  GrassmannLattice G8(2, 8);
  const auto u = jblock_union_face(G8, {{1, 0}, {4, 0}});
  CHECK(is_embedded_sublattice(G8.lattice(), u));
  CHECK(error_of([&] { jblock_union_face(G6, {{1, 0}, {2, 0}}); }) == Errc::BlocksOverlapOrTouch);
  CHECK(error_of([&] { jblock_face(G6, 0, 0); }) == Errc::IndexOutOfRange);
  CHECK(error_of([&] { jblock_face(G6, 2, 2); }) == Errc::IndexOutOfRange);
}

TEST_CASE("property: J-block faces are embedded and meet no window") {
  for (int n = 4; n <= 9; ++n) {
    GrassmannLattice G(2, n);
    for (int i = 1; i <= n - 3; ++i) {
      for (int k = 0; i + k <= n - 3; ++k) {
        const auto D = jblock_face(G, i, k);
        CHECK(is_embedded_sublattice(G.lattice(), D));
        for (int t = i; t <= i + k; ++t) {
          const auto Lt = singular_window(G, t, 1).Lij;
          CHECK(std::includes(Lt.begin(), Lt.end(), D.begin(), D.end()));
        }
      }
    }
  }
}

TEST_CASE("counterexample lattice") {
  const auto L = counterexample_lattice();
  // the interval [(1,3,4),(2,5,6)] of I_{3,6}
  CHECK(L.size() == 12);
  const auto& jm = L.irreducibles().join_meet;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (int a : jm) {
    for (int b : jm) {
      if (a < b && !L.poset().comparable(a, b)) {
        auto x = L.poset().label(a).tuple(), y = L.poset().label(b).tuple();
        if (y < x) std::swap(x, y);
        pairs.emplace_back(x, y);
      }
    }
  }
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == std::vector<int>{1, 5, 6});
  CHECK(pairs[0].second == std::vector<int>{2, 3, 4});
}

}
