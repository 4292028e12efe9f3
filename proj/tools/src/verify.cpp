#include "hibi/verify.hpp"

#include "hibi/corpus.hpp"
#include "hibi/error.hpp"
#include "hibi/grassmann.hpp"
#include "hibi/hilbert.hpp"
#include "hibi/int_matrix.hpp"
#include "hibi/multiplicity.hpp"
#include "hibi/oracles.hpp"
#include "hibi/smoothness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hibi {

namespace {

constexpr std::size_t kChainDfsLimit = 20;
constexpr std::size_t kRoundTripLimit = 16;
constexpr std::size_t kCrosscheckLimit = 12;

class Suite {
 public:
  explicit Suite(std::string name) { result_.suite = std::move(name); }

  // body returns an empty string on success, otherwise a failure detail.
  void check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult c;
    c.name = name;
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    result_.checks.push_back(std::move(c));
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::vector<std::pair<int, int>> idn_params(int d_max, int n_max, std::size_t max_size) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= n_max; ++n)
    for (int d = 1; d < n && d <= d_max; ++d)
      if (binomial(n, d) <= max_size) out.emplace_back(d, n);
  return out;
}

std::string dn(int d, int n) { return "I_{" + std::to_string(d) + "," + std::to_string(n) + "}"; }

SuiteResult poset_suite(std::size_t max_size) {
  Suite s("poset_core");
  const auto corpus = lattice_corpus(std::min(max_size, kChainDfsLimit));
  s.check("maximal_chain_count matches depth-first enumeration", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      const BigInt dp = maximal_chain_count(L.poset());
      if (dp < 1 || dp != oracle::chain_count_dfs(L.poset())) return name;
    }
    return {};
  });
  s.check("order ideals closed under union and intersection", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      const auto ideals = order_ideals(L.poset());
      std::set<ElementSet> all(ideals.begin(), ideals.end());
      for (const auto& a : ideals) {
        for (const auto& b : ideals) {
          ElementSet u, i;
          std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(i));
          if (!all.count(u) || !all.count(i)) return name;
        }
      }
    }
    return {};
  });
  s.check("interval(P, min, max) = P", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      Poset whole = interval(L.poset(), L.bottom(), L.top());
      if (whole.size() != L.size() || whole.cover_pairs() != L.poset().cover_pairs()) return name;
    }
    return {};
  });
  return s.take();
}

SuiteResult dlattice_suite(std::size_t max_size) {
  Suite s("dlattice");
  const auto corpus = lattice_corpus(max_size);
  s.check("Birkhoff round trip and ideal lattice operations", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      const auto B = birkhoff(L);
      const int n = static_cast<int>(L.size());
      for (int a = 0; a < n; ++a) {
        if (B.element_of(L.ideal(a)) != a) return name + ": element_of";
        for (int b = 0; b < n; ++b) {
          if (L.ideal(L.join(a, b)) != (L.ideal(a) | L.ideal(b))) return name + ": join";
          if (L.ideal(L.meet(a, b)) != (L.ideal(a) & L.ideal(b))) return name + ": meet";
        }
      }
    }
    return {};
  });
  s.check("binomial violations vanish exactly on embedded sublattices", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      if (L.size() > kRoundTripLimit) continue;
      const int n = static_cast<int>(L.size());
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        const ElementSet S = mask_to_set(m);
        const bool clean = binomial_violations(L, characteristic_point(L, S)).empty();
        if (clean != is_embedded_sublattice(L, S)) return name;
      }
    }
    return {};
  });
  s.check("#J(L) equals the length of a maximal chain", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      const Grading g = grading(L.poset());
      if (!g.graded || static_cast<int>(L.rank_of_torus()) != g.rank + 1) return name;
    }
    return {};
  });
  s.check("cover_delta along a maximal chain lists J(L) once", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      std::vector<int> seen{L.bottom()};
      int x = L.bottom();
      while (x != L.top()) {
        const int y = L.poset().upper_covers(x).front();
        seen.push_back(cover_delta(L, y, x));
        x = y;
      }
      std::sort(seen.begin(), seen.end());
      auto J = L.join_irreducibles();
      std::sort(J.begin(), J.end());
      if (seen != J) return name;
    }
    return {};
  });
  return s.take();
}

SuiteResult grassmann_suite(std::size_t max_size) {
  Suite s("grassmann");
  s.check("#J(I_{d,n}) = d(n-d)+1 = maximal chain length", [&]() -> std::string {
    for (auto [d, n] : idn_params(4, 9, std::max<std::size_t>(max_size, 126))) {
      const auto L = idn(d, n);
      const Grading g = grading(L.poset());
      if (static_cast<int>(L.rank_of_torus()) != d * (n - d) + 1 || g.rank + 1 != d * (n - d) + 1) return dn(d, n);
    }
    return {};
  });
  s.check("classify_element agrees with cover counts (d<=4, n<=9)", [&]() -> std::string {
    for (auto [d, n] : idn_params(4, 9, 126)) {
      GrassmannLattice G(d, n);
      const auto& L = G.lattice();
      const auto& irr = L.irreducibles();
      for (int x = 0; x < static_cast<int>(L.size()); ++x) {
        const bool j = std::count(irr.join.begin(), irr.join.end(), x) > 0;
        const bool m = std::count(irr.meet.begin(), irr.meet.end(), x) > 0;
        const auto c = classify_element(d, n, G.tuple(x)).kind;
        const auto want = j && m ? ElementClass::Both : j ? ElementClass::JoinIrr : m ? ElementClass::MeetIrr : ElementClass::Neither;
        if (c != want) return dn(d, n) + " " + G.tuple(x).str();
      }
    }
    return {};
  });
  s.check("every diamond of J(I_{d,n}) has some mu_ij as its bottom (d<=4, n<=9)", [&]() -> std::string {
    for (auto [d, n] : idn_params(4, 9, 126)) {
      GrassmannLattice G(d, n);
      const auto& L = G.lattice();
      const auto& JP = L.j_poset();
      std::set<int> mus;
      if (d >= 2 && n - d >= 2) {
        for (const auto& w : all_windows(G)) mus.insert(L.j_position(G.index(w.mu)));
      }
      for (int a = 0; a < static_cast<int>(JP.size()); ++a) {
        const auto& ups = JP.upper_covers(a);
        for (std::size_t p = 0; p < ups.size(); ++p)
          for (std::size_t q = p + 1; q < ups.size(); ++q) {
            // two covers of a with a common upper cover close a diamond
            for (int c : JP.upper_covers(ups[p])) {
              if (JP.is_cover(c, ups[q]) && !mus.count(a)) return dn(d, n);
            }
          }
      }
    }
    return {};
  });
  s.check("every L_ij is an embedded sublattice (d<=4, n<=9)", [&]() -> std::string {
    for (auto [d, n] : idn_params(4, 9, 126)) {
      if (d < 2 || n - d < 2) continue;
      GrassmannLattice G(d, n);
      for (const auto& w : all_windows(G)) {
        if (!is_embedded_sublattice(G.lattice(), w.Lij)) return dn(d, n);
      }
    }
    return {};
  });
  return s.take();
}

SuiteResult cone_suite(std::size_t max_size) {
  Suite s("cone");
  const auto corpus = lattice_corpus(std::min(max_size, kRoundTripLimit));
  s.check("face_support inverts face_generators", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      for (const auto& D : enumerate_embedded_sublattices(L)) {
        std::vector<NVector> vs;
        for (const auto& g : face_generators(L, D)) vs.push_back(g.v);
        if (face_support(L, vs) != D) return name;
      }
    }
    return {};
  });
  s.check("face_dim + orbit_dim = #J on every face", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      for (const auto& D : enumerate_embedded_sublattices(L)) {
        if (!face_geometry(L, D).dims_add_up()) return name;
      }
    }
    return {};
  });
  s.check("generator entries in {-1,0,1} with the cover sign pattern", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      for (const auto& g : cone_generators(L)) {
        int plus = 0, minus = 0;
        for (int c : g.v.coords) {
          if (c < -1 || c > 1) return name;
          plus += c == 1;
          minus += c == -1;
        }
        const bool ok = g.kind == Generator::Kind::Cover ? (plus == 1 && minus == 1) : (plus == 1 && minus == 0);
        if (!ok) return name;
      }
    }
    return {};
  });
  s.check("distinguished points satisfy all binomials", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      for (const auto& D : enumerate_embedded_sublattices(L)) {
        if (!binomial_violations(L, distinguished_point(L, D)).empty()) return name;
      }
    }
    return {};
  });
  return s.take();
}

SuiteResult smoothness_suite(std::size_t max_size, int workers) {
  Suite s("smoothness");
  for (auto [d, n] : idn_params(6, 12, max_size)) {
    if (d < 2 || n - d < 2) continue;
    s.check("smooth <=> window-free <=> gl_criterion on " + dn(d, n), [&, d = d, n = n]() -> std::string {
      GrassmannLattice G(d, n);
      const FaceScan scan = scan_idn_faces(G, workers);
      if (scan.disagreements) return std::to_string(scan.disagreements) + " disagreements";
      if (!scan.dependencies_contain_window_diamond) return "dependency without a window diamond";
      if (!scan.evidence_replays) return "evidence does not replay";
      if (!scan.maximal_singular_are_windows || !scan.maximal_singular_dim3) return "purity";
      return {};
    });
  }
  s.check("W(sigma_ij) is the window diamond (d<=4, n<=9)", [&]() -> std::string {
    for (auto [d, n] : idn_params(4, 9, 126)) {
      if (d < 2 || n - d < 2) continue;
      GrassmannLattice G(d, n);
      for (const auto& w : all_windows(G)) {
        if (face_generators(G.lattice(), w.Lij) != window_diamond_generators(G, w)) return dn(d, n);
      }
    }
    return {};
  });
  s.check("SNF invariant under row and column permutations", [&]() -> std::string {
    for (auto [d, n] : idn_params(4, 7, 126)) {
      if (d < 2 || n - d < 2) continue;
      GrassmannLattice G(d, n);
      for (const auto& w : all_windows(G)) {
        auto rows = generator_rows(face_generators(G.lattice(), w.Lij));
        const std::size_t cols = G.lattice().rank_of_torus();
        auto base = smith_normal_form(IntMatrix::from_rows(rows, cols));
        std::reverse(rows.begin(), rows.end());
        for (auto& r : rows) std::reverse(r.begin(), r.end());
        if (smith_normal_form(IntMatrix::from_rows(rows, cols)) != base) return dn(d, n);
        if (smith_normal_form(IntMatrix::from_rows(rows, cols).transposed()) != base) return dn(d, n);
      }
    }
    return {};
  });
  return s.take();
}

SuiteResult multiplicity_suite(std::size_t max_size) {
  Suite s("multiplicity");
  s.check("fixed_point_mult(I_{2,n}) = catalan(n-2), 4 <= n <= 12", []() -> std::string {
    for (int n = 4; n <= 12; ++n)
      if (fixed_point_mult(idn(2, n)) != catalan(n - 2)) return "n=" + std::to_string(n);
    return {};
  });
  s.check("hook_mult = chain count for d(n-d) <= 24", []() -> std::string {
    for (int n = 2; n <= 25; ++n)
      for (int d = 1; d < n; ++d) {
        if (d * (n - d) > 24) continue;
        if (hook_mult(d, n) != fixed_point_mult(idn(d, n))) return dn(d, n);
      }
    return {};
  });
  s.check("hook_mult(d,n) = hook_mult(n-d,n)", []() -> std::string {
    for (int n = 2; n <= 16; ++n)
      for (int d = 1; d < n; ++d)
        if (hook_mult(d, n) != hook_mult(n - d, n)) return dn(d, n);
    return {};
  });
  s.check("face_mult(JBlock) depends only on k", []() -> std::string {
    for (int k = 0; k <= 5; ++k) {
      const BigInt ref = face_mult(JBlockFace{k + 4, 1, k});
      for (int n = k + 4; n <= 12; ++n)
        for (int i = 1; i <= n - k - 3; ++i)
          if (face_mult(JBlockFace{n, i, k}) != ref) return "k=" + std::to_string(k);
    }
    return {};
  });
  const auto corpus = lattice_corpus(std::min<std::size_t>(max_size, 20));
  s.check("Stanley-Reisner degree = chains, dim = chain length", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      const HilbertData h = sqfree_hilbert(stanley_reisner_ideal(L));
      if (h.degree != fixed_point_mult(L) || h.krull_dim != static_cast<int>(L.rank_of_torus())) return name;
      for (unsigned m = 0; m <= 12; ++m)
        if (h.phi(m) != h.series_coefficient(m)) return name + ": series";
    }
    return {};
  });
  s.check("three-way Hilbert crosscheck (m <= 3)", [&]() -> std::string {
    for (const auto& [name, L] : corpus) {
      if (L.size() > kCrosscheckLimit) continue;
      for (const auto& row : lattice_hilbert_crosscheck(L, 3))
        if (!row.equal()) return name + ": m=" + std::to_string(row.m);
    }
    return {};
  });
  return s.take();
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"poset_core", "dlattice", "grassmann",
                                              "cone", "smoothness", "multiplicity"};
  return names;
}

std::vector<SuiteResult> run_verify(const std::string& suite, std::size_t max_size, int workers) {
  const auto& names = verify_suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(Errc::BadParameters, "unknown suite \"" + suite + "\"");
  }
  std::vector<SuiteResult> out;
  auto want = [&](const char* n) { return suite == "all" || suite == n; };
  if (want("poset_core")) out.push_back(poset_suite(max_size));
  if (want("dlattice")) out.push_back(dlattice_suite(max_size));
  if (want("grassmann")) out.push_back(grassmann_suite(max_size));
  if (want("cone")) out.push_back(cone_suite(max_size));
  if (want("smoothness")) out.push_back(smoothness_suite(max_size, workers));
  if (want("multiplicity")) out.push_back(multiplicity_suite(max_size));
  return out;
}

io::Json verify_json(const std::vector<SuiteResult>& results) {
  io::Json suites = io::Json::array();
  bool all = true;
  for (const auto& r : results) {
    io::Json checks = io::Json::array();
    for (const auto& c : r.checks) {
      checks.push_back(io::Json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    suites.push_back(io::Json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}});
    all = all && r.passed();
  }
  return io::Json{{"passed", all}, {"suites", std::move(suites)}};
}

}  // namespace hibi
