#include "hibi/smoothness.hpp"

#include "hibi/error.hpp"
#include "hibi/multiplicity.hpp"
#include "hibi/parallel.hpp"
#include "hibi/rational_lp.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace hibi {

namespace {

constexpr std::size_t kMaxLpVectors = 64;
constexpr std::size_t kMaxDisagreementExamples = 8;

IntMatrix rows_matrix(const std::vector<Generator>& gens, const std::vector<int>& pick,
                      std::size_t dim) {
  IntMatrix m(pick.size(), dim);
  for (std::size_t r = 0; r < pick.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = gens[pick[r]].v.coords[c];
  return m;
}

void require_embedded(const DistributiveLattice& L, std::span<const int> D) {
  if (!is_embedded_sublattice(L, D)) throw Error(Errc::NotEmbedded, "D is not an embedded sublattice");
}

using CoverSet = std::set<std::pair<int, int>>;

CoverSet cover_set(std::span<const Generator> gens) {
  CoverSet s;
  for (const auto& g : gens) {
    if (g.kind == Generator::Kind::Cover) s.emplace(g.upper, g.lower);
  }
  return s;
}

}  // namespace

std::string_view to_string(SmoothStatus s) { return s == SmoothStatus::Smooth ? "Smooth" : "Singular"; }

std::string_view to_string(SmoothnessVerdict::Evidence e) {
  switch (e) {
    case SmoothnessVerdict::Evidence::Independent: return "independent";
    case SmoothnessVerdict::Evidence::Dependency: return "dependency";
    case SmoothnessVerdict::Evidence::Nonunimodular: return "nonunimodular";
  }
  return "independent";
}

std::vector<int> irredundant_generators(std::span<const std::vector<int>> vectors) {
  const std::size_t dim = vectors.empty() ? 0 : vectors.front().size();
  if (vectors.size() > kMaxLpVectors || dim > kMaxLpVectors) {
    throw Error(Errc::SizeLimitExceeded, "irredundant_generators accepts at most 64 vectors of dimension 64");
  }
  std::vector<int> kept(vectors.size());
  for (std::size_t k = 0; k < kept.size(); ++k) kept[k] = static_cast<int>(k);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    std::vector<std::vector<int>> others;
    for (int idx : kept) {
      if (idx != static_cast<int>(k)) others.push_back(vectors[idx]);
    }
    if (in_rational_cone(others, vectors[k])) {
      kept.erase(std::find(kept.begin(), kept.end(), static_cast<int>(k)));
    }
  }
  return kept;
}

SmoothnessVerdict is_smooth_face(const DistributiveLattice& L, std::span<const int> D) {
  SmoothnessVerdict v;
  v.generators = face_generators(L, D);
  const std::size_t dim = L.rank_of_torus();
  const std::size_t m = v.generators.size();

  std::vector<int> all(m);
  for (std::size_t k = 0; k < m; ++k) all[k] = static_cast<int>(k);
  IntMatrix full = rows_matrix(v.generators, all, dim);

  // Pruning cannot remove anything from an independent set.
  if (rank(full) == m) {
    v.kept = all;
  } else {
    v.kept = irredundant_generators(generator_rows(v.generators));
  }
  for (int k : all) {
    if (!std::binary_search(v.kept.begin(), v.kept.end(), k)) v.pruned.push_back(k);
  }

  IntMatrix kept_rows = rows_matrix(v.generators, v.kept, dim);
  v.rank = rank(kept_rows);
  v.invariant_factors = smith_normal_form(kept_rows);

  if (v.rank < v.kept.size()) {
    v.status = SmoothStatus::Singular;
    v.evidence = SmoothnessVerdict::Evidence::Dependency;
    auto dep = minimal_row_dependency(kept_rows);
    v.dependency.assign(m, BigInt(0));
    for (std::size_t r = 0; r < v.kept.size(); ++r) v.dependency[v.kept[r]] = (*dep)[r];
  } else if (std::any_of(v.invariant_factors.begin(), v.invariant_factors.end(),
                         [](const BigInt& f) { return f != 1; })) {
    v.status = SmoothStatus::Singular;
    v.evidence = SmoothnessVerdict::Evidence::Nonunimodular;
  } else {
    v.status = SmoothStatus::Smooth;
    v.evidence = SmoothnessVerdict::Evidence::Independent;
  }
  return v;
}

bool replay_evidence(const SmoothnessVerdict& v) {
  const std::size_t dim = v.generators.empty() ? 0 : v.generators.front().v.coords.size();
  IntMatrix kept_rows = rows_matrix(v.generators, v.kept, dim);
  switch (v.evidence) {
    case SmoothnessVerdict::Evidence::Dependency: {
      if (v.dependency.size() != v.generators.size()) return false;
      bool nonzero = false;
      for (std::size_t c = 0; c < dim; ++c) {
        BigInt s = 0;
        for (std::size_t r = 0; r < v.generators.size(); ++r) s += v.dependency[r] * v.generators[r].v.coords[c];
        if (s != 0) return false;
      }
      for (const auto& c : v.dependency) nonzero = nonzero || c != 0;
      return nonzero && v.status == SmoothStatus::Singular;
    }
    case SmoothnessVerdict::Evidence::Nonunimodular:
    case SmoothnessVerdict::Evidence::Independent: {
      // SNF of the transposed matrix must agree: a second elimination order.
      auto again = smith_normal_form(kept_rows.transposed());
      return again == v.invariant_factors && rank(kept_rows) == v.kept.size();
    }
  }
  return false;
}

bool gl_criterion(const DistributiveLattice& L, std::span<const int> D) {
  require_embedded(L, D);
  const auto& jm = L.irreducibles().join_meet;
  for (std::size_t a = 0; a < jm.size(); ++a) {
    for (std::size_t b = a + 1; b < jm.size(); ++b) {
      const int theta = jm[a], delta = jm[b];
      if (L.poset().comparable(theta, delta)) continue;
      const int lo = L.meet(theta, delta), hi = L.join(theta, delta);
      bool hit = std::any_of(D.begin(), D.end(), [&](int g) { return L.leq(lo, g) && L.leq(g, hi); });
      if (!hit) return false;
    }
  }
  return true;
}

std::vector<Generator> window_diamond_generators(const GrassmannLattice& G, const SingularWindow& w) {
  const auto& L = G.lattice();
  const int mu = L.j_position(G.index(w.mu));
  const int a = L.j_position(G.index(w.A));
  const int b = L.j_position(G.index(w.B));
  const int c = L.j_position(G.index(w.C));
  const std::set<std::pair<int, int>> want{{a, mu}, {b, mu}, {c, a}, {c, b}};
  std::vector<Generator> out;
  for (auto& g : cone_generators(L)) {
    if (g.kind == Generator::Kind::Cover && want.count({g.upper, g.lower})) out.push_back(std::move(g));
  }
  return out;
}

bool SingularLocusReport::windows_ok() const {
  return std::all_of(windows.begin(), windows.end(), [](const WindowReport& w) {
    return w.matches_diamond && w.geometry.face_dim == 3 && w.geometry.dims_add_up() &&
           !w.verdict.smooth() && w.multiplicity == 2;
  });
}

FaceScan scan_idn_faces(const GrassmannLattice& G, int workers) {
  const auto& L = G.lattice();
  if (L.size() > kMaxBitmaskElements) {
    throw Error(Errc::SizeLimitExceeded, "exhaustive face scan is limited to 24 elements");
  }
  const auto windows = all_windows(G);
  std::vector<std::uint32_t> window_masks;
  std::vector<CoverSet> window_covers;
  for (const auto& w : windows) {
    window_masks.push_back(set_to_mask(w.Lij));
    window_covers.push_back(cover_set(window_diamond_generators(G, w)));
  }

  struct Partial {
    FaceScan scan;
    std::vector<std::uint32_t> singular;
    std::vector<std::uint32_t> disagreeing;
  };
  const int shards = std::max(1, std::min(64, workers * 4));
  std::vector<Partial> parts(shards);

  parallel_for(shards, workers, [&](int shard) {
    Partial& p = parts[shard];
    for_each_embedded_sublattice(
        L,
        [&](std::uint32_t mask) {
          const ElementSet D = mask_to_set(mask);
          const auto verdict = is_smooth_face(L, D);
          const bool smooth = verdict.smooth();
          const bool free_of_windows = std::none_of(window_masks.begin(), window_masks.end(),
                                                    [&](std::uint32_t w) { return (mask & ~w) == 0; });
          const bool gl = gl_criterion(L, D);
          FaceScan& s = p.scan;
          ++s.faces;
          ++(smooth ? s.smooth : s.singular);
          ++s.counts[smooth][free_of_windows][gl];
          if (smooth != free_of_windows || smooth != gl) {
            ++s.disagreements;
            p.disagreeing.push_back(mask);
          }
          if (verdict.pruning_fired()) ++s.pruning_fired;
          if (!replay_evidence(verdict)) s.evidence_replays = false;
          if (verdict.evidence == SmoothnessVerdict::Evidence::Dependency) {
            CoverSet support;
            for (std::size_t k = 0; k < verdict.generators.size(); ++k) {
              const auto& g = verdict.generators[k];
              if (verdict.dependency[k] != 0 && g.kind == Generator::Kind::Cover) support.emplace(g.upper, g.lower);
            }
            const bool has_diamond = std::any_of(window_covers.begin(), window_covers.end(), [&](const CoverSet& wc) {
              return std::includes(support.begin(), support.end(), wc.begin(), wc.end());
            });
            if (!has_diamond) s.dependencies_contain_window_diamond = false;
          }
          if (!smooth) p.singular.push_back(mask);
        },
        shard, shards);
  });

  FaceScan out;
  std::vector<std::uint32_t> singular, disagreeing;
  for (auto& p : parts) {
    const FaceScan& s = p.scan;
    out.faces += s.faces;
    out.smooth += s.smooth;
    out.singular += s.singular;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) out.counts[a][b][c] += s.counts[a][b][c];
    out.disagreements += s.disagreements;
    out.pruning_fired += s.pruning_fired;
    out.dependencies_contain_window_diamond &= s.dependencies_contain_window_diamond;
    out.evidence_replays &= s.evidence_replays;
    singular.insert(singular.end(), p.singular.begin(), p.singular.end());
    disagreeing.insert(disagreeing.end(), p.disagreeing.begin(), p.disagreeing.end());
  }
  std::sort(singular.begin(), singular.end());
  std::sort(disagreeing.begin(), disagreeing.end());
  for (std::size_t k = 0; k < std::min(kMaxDisagreementExamples, disagreeing.size()); ++k) {
    out.disagreement_examples.push_back(mask_to_set(disagreeing[k]));
  }

  std::vector<std::uint32_t> maximal;
  for (std::uint32_t s : singular) {
    bool dominated = std::any_of(singular.begin(), singular.end(),
                                 [&](std::uint32_t t) { return t != s && (s & ~t) == 0; });
    if (!dominated) maximal.push_back(s);
  }
  std::vector<std::uint32_t> expected = window_masks;
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  out.maximal_singular_are_windows = maximal == expected;
  for (std::uint32_t s : maximal) {
    const ElementSet D = mask_to_set(s);
    const auto geo = face_geometry(L, D);
    if (geo.face_dim != 3) out.maximal_singular_dim3 = false;
    if (!geo.dims_add_up()) out.dims_add_up = false;
    out.maximal_singular.push_back(D);
  }
  return out;
}

SingularLocusReport singular_locus_idn(int d, int n, bool exhaustive, int workers) {
  GrassmannLattice G(d, n);
  const auto& L = G.lattice();
  SingularLocusReport r;
  r.d = d;
  r.n = n;
  for (const auto& w : all_windows(G)) {
    WindowReport wr;
    wr.window = w;
    wr.generators = face_generators(L, w.Lij);
    wr.matches_diamond = wr.generators == window_diamond_generators(G, w);
    wr.geometry = face_geometry(L, w.Lij);
    wr.verdict = is_smooth_face(L, w.Lij);
    wr.multiplicity = face_mult(WindowFace{d, n, w.i, w.j});
    r.windows.push_back(std::move(wr));
  }
  if (exhaustive) r.scan = scan_idn_faces(G, workers);
  return r;
}

}  // namespace hibi
