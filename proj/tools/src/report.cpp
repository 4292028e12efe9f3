#include "hibi/report.hpp"

#include "hibi/multiplicity.hpp"

#include <sstream>

namespace hibi::report {

namespace {

std::string jlabel(const DistributiveLattice& L, int jpos) {
  return L.poset().label(L.join_irreducibles()[jpos]).str();
}

std::string bigint(const BigInt& v) { return v.str(); }

Json bigints(const std::vector<BigInt>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(bigint(v));
  return a;
}

bool is_flat_object(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items()) {
    if (v.is_structured() && !(v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) {
                                 return e.is_primitive();
                               }))) {
      return false;
    }
  }
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s;
    for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + scalar(j[k]);
    return "[" + s + "]";
  }
  return j.dump();
}

void render(const Json& j, int depth, const std::string& title, std::ostringstream& out) {
  const std::string hashes(std::min(depth + 1, 6), '#');
  if (j.is_object()) {
    if (!title.empty()) out << hashes << ' ' << title << "\n\n";
    bool wrote_bullets = false;
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) {
                                 return e.is_primitive();
                               }))) {
        out << "- **" << k << "**: " << scalar(v) << "\n";
        wrote_bullets = true;
      }
    }
    if (wrote_bullets) out << "\n";
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) {
                                 return e.is_primitive();
                               }))) {
        continue;
      }
      render(v, depth + 1, k, out);
    }
    return;
  }
  if (j.is_array()) {
    if (!title.empty()) out << hashes << ' ' << title << "\n\n";
    const bool table = !j.empty() && std::all_of(j.begin(), j.end(), is_flat_object);
    if (table) {
      std::vector<std::string> cols;
      for (const auto& row : j)
        for (const auto& [k, v] : row.items())
          if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
      out << "|";
      for (const auto& c : cols) out << ' ' << c << " |";
      out << "\n|";
      for (std::size_t c = 0; c < cols.size(); ++c) out << " --- |";
      out << "\n";
      for (const auto& row : j) {
        out << "|";
        for (const auto& c : cols) out << ' ' << (row.contains(c) ? scalar(row[c]) : "") << " |";
        out << "\n";
      }
      out << "\n";
      return;
    }
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (j[k].is_primitive()) {
        out << "- " << scalar(j[k]) << "\n";
      } else {
        render(j[k], depth + 1, title + " " + std::to_string(k + 1), out);
      }
    }
    out << "\n";
    return;
  }
  if (!title.empty()) out << "- **" << title << "**: ";
  out << scalar(j) << "\n";
}

}  // namespace

std::string generator_string(const DistributiveLattice& L, const Generator& g) {
  if (g.kind == Generator::Kind::Maximal) return "e_" + jlabel(L, g.upper);
  return "e_" + jlabel(L, g.lower) + " - e_" + jlabel(L, g.upper);
}

Json generators_json(const DistributiveLattice& L, std::span<const Generator> gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(generator_string(L, g));
  return a;
}

Json verdict_json(const DistributiveLattice& L, const SmoothnessVerdict& v) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  j["evidence"] = std::string(to_string(v.evidence));
  j["generators"] = generators_json(L, v.generators);
  Json pruned = Json::array();
  for (int k : v.pruned) pruned.push_back(generator_string(L, v.generators[k]));
  j["pruned"] = std::move(pruned);
  j["rank"] = v.rank;
  j["invariant_factors"] = bigints(v.invariant_factors);
  if (!v.dependency.empty()) {
    Json dep = Json::array();
    for (std::size_t k = 0; k < v.dependency.size(); ++k) {
      if (v.dependency[k] != 0) dep.push_back(bigint(v.dependency[k]) + " * (" + generator_string(L, v.generators[k]) + ")");
    }
    j["dependency"] = std::move(dep);
  }
  return j;
}

Json geometry_json(const FaceGeometry& g) {
  return Json{{"face_dim", g.face_dim},
              {"orbit_dim", g.orbit_dim},
              {"ambient_dim", g.ambient_dim},
              {"dims_add_up", g.dims_add_up()}};
}

Json h_poset_json(const DistributiveLattice& L, const HPoset& h) {
  Json j;
  Json verts = Json::array(), edges = Json::array(), marked = Json::array();
  for (int v : h.vertices) verts.push_back(jlabel(L, v));
  for (auto [u, l] : h.edges) edges.push_back(jlabel(L, u) + " > " + jlabel(L, l));
  for (int z : h.marked) marked.push_back(jlabel(L, z));
  j["vertices"] = std::move(verts);
  j["edges"] = std::move(edges);
  j["marked"] = std::move(marked);
  j["components"] = h.components.size();
  return j;
}

Json face_json(const DistributiveLattice& L, std::span<const int> D) {
  Json j;
  j["D"] = io::elements_json(L, D);
  j["geometry"] = geometry_json(face_geometry(L, D));
  j["gl_criterion"] = gl_criterion(L, D);
  j["verdict"] = verdict_json(L, is_smooth_face(L, D));
  j["H"] = h_poset_json(L, h_poset(L, D));
  return j;
}

Json lattice_summary_json(const DistributiveLattice& L) {
  Json j;
  j["size"] = L.size();
  j["bottom"] = L.poset().label(L.bottom()).str();
  j["top"] = L.poset().label(L.top()).str();
  const auto& irr = L.irreducibles();
  j["join_irreducibles"] = io::elements_json(L, irr.join);
  j["meet_irreducibles"] = io::elements_json(L, irr.meet);
  j["join_meet_irreducibles"] = io::elements_json(L, irr.join_meet);
  j["rank_of_torus"] = L.rank_of_torus();
  const Grading g = grading(L.poset());
  j["graded"] = g.graded;
  j["rank"] = g.rank;
  j["maximal_chains"] = bigint(fixed_point_mult(L));
  j["incomparable_pairs"] = L.diamonds().size();
  if (L.size() <= kMaxBitmaskElements) {
    j["embedded_sublattices"] = enumerate_embedded_sublattices(L).size();
  }
  return j;
}

Json singular_locus_json(const GrassmannLattice& G, const SingularLocusReport& r) {
  const auto& L = G.lattice();
  Json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["window_count"] = r.windows.size();
  Json ws = Json::array();
  for (const auto& w : r.windows) {
    Json e;
    e["window"] = "sigma_" + std::to_string(w.window.i) + "," + std::to_string(w.window.j);
    e["mu"] = w.window.mu.str();
    e["lambda"] = w.window.lambda.str();
    e["A"] = w.window.A.str();
    e["B"] = w.window.B.str();
    e["C"] = w.window.C.str();
    e["generators"] = generators_json(L, w.generators);
    e["matches_diamond"] = w.matches_diamond;
    e["face_dim"] = w.geometry.face_dim;
    e["orbit_dim"] = w.geometry.orbit_dim;
    e["orbit_codim"] = w.geometry.ambient_dim - w.geometry.orbit_dim;
    e["verdict"] = std::string(to_string(w.verdict.status));
    e["multiplicity"] = bigint(w.multiplicity);
    ws.push_back(std::move(e));
  }
  j["windows"] = std::move(ws);
  j["windows_ok"] = r.windows_ok();
  if (r.scan) {
    const auto& s = *r.scan;
    Json sc;
    sc["faces"] = s.faces;
    sc["smooth"] = s.smooth;
    sc["singular"] = s.singular;
    sc["disagreements"] = s.disagreements;
    Json matrix = Json::array();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          if (s.counts[a][b][c] == 0) continue;
          matrix.push_back(Json{{"smooth", a == 1}, {"window_free", b == 1}, {"gl_criterion", c == 1},
                                {"faces", s.counts[a][b][c]}});
        }
    sc["agreement_matrix"] = std::move(matrix);
    Json ex = Json::array();
    for (const auto& D : s.disagreement_examples) ex.push_back(io::elements_json(L, D));
    sc["disagreement_examples"] = std::move(ex);
    sc["pruning_fired"] = s.pruning_fired;
    sc["dependencies_contain_window_diamond"] = s.dependencies_contain_window_diamond;
    sc["evidence_replays"] = s.evidence_replays;
    sc["purity"] = Json{{"minimal_singular_faces", s.maximal_singular.size()},
                        {"are_windows", s.maximal_singular_are_windows},
                        {"all_face_dim_3", s.maximal_singular_dim3},
                        {"dims_add_up", s.dims_add_up}};
    sc["ok"] = s.ok();
    j["exhaustive"] = std::move(sc);
  }
  j["ok"] = r.ok();
  return j;
}

Json hilbert_json(const HilbertData& h, unsigned m_max) {
  Json j;
  j["krull_dim"] = h.krull_dim;
  j["degree"] = bigint(h.degree);
  j["face_counts"] = bigints(h.faces);
  j["numerator"] = bigints(h.numerator);
  j["denominator"] = "(1-t)^" + std::to_string(h.krull_dim);
  Json phi = Json::array();
  for (unsigned m = 0; m <= m_max; ++m) {
    phi.push_back(Json{{"m", m}, {"phi", bigint(h.phi(m))}, {"series", bigint(h.series_coefficient(m))}});
  }
  j["phi"] = std::move(phi);
  return j;
}

Json crosscheck_json(const std::vector<CrosscheckRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    a.push_back(Json{{"m", r.m},
                     {"multichains", bigint(r.multichains)},
                     {"stanley_reisner_phi", bigint(r.phi)},
                     {"semigroup", bigint(r.semigroup)},
                     {"equal", r.equal()}});
  }
  return a;
}

Json harness_json(const DistributiveLattice& L, const HarnessReport& r) {
  Json j;
  j["faces"] = r.faces.size();
  j["h_classes"] = r.classes.size();
  j["both_smooth"] = r.both_smooth;
  j["both_singular"] = r.both_singular;
  j["criterion_true_but_singular"] = r.gl_true_singular;
  j["criterion_false_but_smooth"] = r.gl_false_smooth;
  j["known_multiplicities"] = r.known_multiplicities;
  j["inconsistent_classes"] = r.inconsistent_classes;
  Json dis = Json::array();
  for (const auto& f : r.faces) {
    if (f.smooth == f.gl) continue;
    dis.push_back(Json{{"D", io::elements_json(L, f.D)},
                       {"smooth", f.smooth},
                       {"gl_criterion", f.gl},
                       {"h_class", f.h_class}});
  }
  j["disagreements"] = std::move(dis);
  Json classes = Json::array();
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    const auto& C = r.classes[c];
    Json mults = Json::array();
    for (const auto& m : C.multiplicities) mults.push_back(bigint(m));
    classes.push_back(Json{{"class", c},
                           {"faces", C.faces.size()},
                           {"vertices", C.representative.vertices.size()},
                           {"edges", C.representative.edges.size()},
                           {"components", C.representative.components.size()},
                           {"known_multiplicities", std::move(mults)},
                           {"consistent", C.consistent()}});
  }
  j["classes"] = std::move(classes);
  return j;
}

std::string render_markdown(const Json& j) {
  std::ostringstream out;
  std::string title = "hibi report";
  if (j.is_object() && j.contains("command")) title = "hibi " + j["command"].get<std::string>();
  render(j, 0, title, out);
  return out.str();
}

}  // namespace hibi::report
