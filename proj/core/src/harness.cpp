#include "hibi/harness.hpp"

#include "hibi/error.hpp"
#include "hibi/multiplicity.hpp"
#include "hibi/smoothness.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hibi {

namespace {

constexpr std::size_t kMaxHarnessElements = 16;
constexpr std::size_t kMaxIsoVertices = 24;

struct Shape {
  int n = 0;
  std::vector<std::vector<char>> adj;  // adj[u][l]: edge upper u -> lower l
  std::vector<char> marked;
  std::vector<std::tuple<int, int, int>> signature;  // (up degree, down degree, mark)
};

Shape shape_of(const HPoset& h) {
  Shape s;
  s.n = static_cast<int>(h.vertices.size());
  std::map<int, int> local;
  for (int k = 0; k < s.n; ++k) local[h.vertices[k]] = k;
  s.adj.assign(s.n, std::vector<char>(s.n, 0));
  s.marked.assign(s.n, 0);
  for (auto [u, l] : h.edges) s.adj[local[u]][local[l]] = 1;
  for (int z : h.marked) s.marked[local[z]] = 1;
  for (int v = 0; v < s.n; ++v) {
    int up = 0, down = 0;
    for (int w = 0; w < s.n; ++w) {
      up += s.adj[w][v];
      down += s.adj[v][w];
    }
    s.signature.emplace_back(up, down, s.marked[v]);
  }
  return s;
}

}  // namespace

bool h_isomorphic(const HPoset& a, const HPoset& b) {
  if (a.vertices.size() > kMaxIsoVertices || b.vertices.size() > kMaxIsoVertices) {
    throw Error(Errc::SizeLimitExceeded, "H-poset isomorphism is limited to 24 vertices");
  }
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.marked.size() != b.marked.size()) {
    return false;
  }
  const Shape sa = shape_of(a), sb = shape_of(b);
  auto ka = sa.signature, kb = sb.signature;
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return false;

  std::vector<int> map(sa.n, -1);
  std::vector<char> used(sb.n, 0);
  std::function<bool(int)> extend = [&](int v) {
    if (v == sa.n) return true;
    for (int w = 0; w < sb.n; ++w) {
      if (used[w] || sa.signature[v] != sb.signature[w]) continue;
      bool fits = true;
      for (int p = 0; p < v && fits; ++p) {
        fits = sa.adj[v][p] == sb.adj[w][map[p]] && sa.adj[p][v] == sb.adj[map[p]][w];
      }
      if (!fits) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      used[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return extend(0);
}

HarnessReport conjecture_harness(const DistributiveLattice& L, const GrassmannLattice* G) {
  if (L.size() > kMaxHarnessElements) {
    throw Error(Errc::SizeLimitExceeded, "conjecture_harness is limited to 16 elements");
  }
  HarnessReport r;
  for (const auto& D : enumerate_embedded_sublattices(L)) {
    HarnessFace f;
    f.D = D;
    f.smooth = is_smooth_face(L, D).smooth();
    f.gl = gl_criterion(L, D);
    if (f.smooth && f.gl) ++r.both_smooth;
    else if (!f.smooth && !f.gl) ++r.both_singular;
    else if (f.gl) ++r.gl_true_singular;
    else ++r.gl_false_smooth;

    if (f.smooth) {
      f.multiplicity = BigInt(1);
      f.family = "smooth";
    } else if (D.empty()) {
      f.multiplicity = fixed_point_mult(L);
      f.family = "fixed-point";
    } else if (G != nullptr) {
      try {
        FaceSpec spec = identify_face_family(*G, D);
        f.multiplicity = face_mult(spec);
        f.family = describe(spec);
      } catch (const Error& e) {
        if (e.code() != Errc::UnsupportedFace) throw;
        f.family = "unsupported";
      }
    } else {
      f.family = "unsupported";
    }
    if (f.multiplicity) ++r.known_multiplicities;

    HPoset h = h_poset(L, D);
    int cls = -1;
    for (std::size_t c = 0; c < r.classes.size() && cls < 0; ++c) {
      if (h_isomorphic(r.classes[c].representative, h)) cls = static_cast<int>(c);
    }
    if (cls < 0) {
      cls = static_cast<int>(r.classes.size());
      r.classes.push_back(HClass{std::move(h), {}, {}});
    }
    f.h_class = cls;
    auto& C = r.classes[cls];
    C.faces.push_back(r.faces.size());
    if (f.multiplicity && std::find(C.multiplicities.begin(), C.multiplicities.end(), *f.multiplicity) ==
                              C.multiplicities.end()) {
      C.multiplicities.push_back(*f.multiplicity);
      std::sort(C.multiplicities.begin(), C.multiplicities.end());
    }
    r.faces.push_back(std::move(f));
  }
  for (const auto& C : r.classes) {
    if (!C.consistent()) ++r.inconsistent_classes;
  }
  return r;
}

}  // namespace hibi
