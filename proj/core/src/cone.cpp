#include "hibi/cone.hpp"

#include "hibi/error.hpp"
#include "hibi/int_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace hibi {

namespace {

void require_embedded(const DistributiveLattice& L, std::span<const int> D) {
  for (int x : D) {
    if (x < 0 || x >= static_cast<int>(L.size())) {
      throw Error(Errc::UnknownElement, "element index " + std::to_string(x));
    }
  }
  if (!is_embedded_sublattice(L, D)) {
    throw Error(Errc::NotEmbedded, "subset of size " + std::to_string(D.size()) +
                                       " is not an embedded sublattice");
  }
}

bool killed_by_all(const DistributiveLattice& L, std::span<const int> D, const NVector& v) {
  return std::all_of(D.begin(), D.end(), [&](int a) { return functional_eval(L, a, v) == 0; });
}

}  // namespace

NVector basis_vector(std::size_t dim, int y) {
  NVector v{std::vector<int>(dim, 0)};
  v.coords[y] = 1;
  return v;
}

std::vector<Generator> cone_generators(const DistributiveLattice& L) {
  const auto& JP = L.j_poset();
  const std::size_t dim = L.rank_of_torus();
  std::vector<Generator> out;
  // J positions already follow the lattice's linear extension.
  for (int lower = 0; lower < static_cast<int>(dim); ++lower) {
    for (int upper : JP.upper_covers(lower)) {
      NVector v{std::vector<int>(dim, 0)};
      v.coords[lower] = 1;
      v.coords[upper] = -1;
      out.push_back({Generator::Kind::Cover, upper, lower, std::move(v)});
    }
  }
  for (int z : JP.maximal_elements()) {
    out.push_back({Generator::Kind::Maximal, z, z, basis_vector(dim, z)});
  }
  return out;
}

std::int64_t functional_eval(const DistributiveLattice& L, int alpha, const NVector& v) {
  const auto& ideal = L.ideal(alpha);
  if (v.coords.size() != ideal.size()) throw Error(Errc::BadParameters, "vector dimension mismatch");
  std::int64_t s = 0;
  for (auto k = ideal.find_first(); k != Bits::npos; k = ideal.find_next(k)) s += v.coords[k];
  return s;
}

std::vector<Generator> face_generators(const DistributiveLattice& L, std::span<const int> D) {
  require_embedded(L, D);
  std::vector<Generator> out;
  for (auto& g : cone_generators(L)) {
    if (killed_by_all(L, D, g.v)) out.push_back(std::move(g));
  }
  return out;
}

ElementSet face_support(const DistributiveLattice& L, std::span<const NVector> vectors) {
  auto all = cone_generators(L);
  for (const auto& v : vectors) {
    bool known = std::any_of(all.begin(), all.end(), [&](const Generator& g) { return g.v == v; });
    if (!known) throw Error(Errc::NotGenerators, "vector is not a generator of the cone");
  }
  ElementSet D;
  for (int a = 0; a < static_cast<int>(L.size()); ++a) {
    bool zero = std::all_of(vectors.begin(), vectors.end(),
                            [&](const NVector& v) { return functional_eval(L, a, v) == 0; });
    if (zero) D.push_back(a);
  }
  return D;
}

std::vector<Rational> distinguished_point(const DistributiveLattice& L, std::span<const int> D) {
  require_embedded(L, D);
  return characteristic_point(L, D);
}

HPoset h_poset(const DistributiveLattice& L, std::span<const int> D) {
  HPoset h;
  const int dim = static_cast<int>(L.rank_of_torus());
  std::vector<int> parent(dim);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> present(dim, 0);
  for (const auto& g : face_generators(L, D)) {
    if (g.kind == Generator::Kind::Maximal) {
      h.marked.push_back(g.upper);
      present[g.upper] = 1;
    } else {
      h.edges.emplace_back(g.upper, g.lower);
      present[g.upper] = present[g.lower] = 1;
      parent[find(g.upper)] = find(g.lower);
    }
  }
  std::sort(h.edges.begin(), h.edges.end());
  std::sort(h.marked.begin(), h.marked.end());
  std::map<int, std::vector<int>> comps;
  for (int y = 0; y < dim; ++y) {
    if (!present[y]) continue;
    h.vertices.push_back(y);
    comps[find(y)].push_back(y);
  }
  for (auto& [root, members] : comps) h.components.push_back(std::move(members));
  std::sort(h.components.begin(), h.components.end());
  return h;
}

FaceGeometry face_geometry(const DistributiveLattice& L, std::span<const int> D) {
  auto W = face_generators(L, D);
  FaceGeometry g;
  g.ambient_dim = static_cast<int>(L.rank_of_torus());
  g.face_dim = W.empty() ? 0
                         : static_cast<int>(rank(IntMatrix::from_rows(
                               generator_rows(W), static_cast<std::size_t>(g.ambient_dim))));
  if (D.empty()) {
    g.orbit_dim = 0;
    return g;
  }
  Poset sub = L.poset().induced(D);
  Grading gr = grading(sub);
  if (!gr.graded) throw Error(Errc::GradingMismatch, gr.reason);
  g.orbit_dim = gr.rank + 1;
  return g;
}

Face make_face(const DistributiveLattice& L, std::span<const int> D) {
  Face f;
  f.D = normalized(ElementSet(D.begin(), D.end()));
  f.W = face_generators(L, f.D);
  f.H = h_poset(L, f.D);
  f.geometry = face_geometry(L, f.D);
  return f;
}

std::vector<std::vector<int>> generator_rows(std::span<const Generator> gens) {
  std::vector<std::vector<int>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(g.v.coords);
  return rows;
}

}  // namespace hibi
