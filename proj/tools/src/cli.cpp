#include "hibi/cli.hpp"

#include "hibi/error.hpp"
#include "hibi/harness.hpp"
#include "hibi/hilbert.hpp"
#include "hibi/int_matrix.hpp"
#include "hibi/multiplicity.hpp"
#include "hibi/parallel.hpp"
#include "hibi/report.hpp"
#include "hibi/smoothness.hpp"
#include "hibi/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hibi::cli {

namespace {

using io::Json;

constexpr int kSchema = 1;
constexpr std::size_t kHarnessLimit = 16;
constexpr std::size_t kCrosscheckLimit = 12;
constexpr unsigned kCrosscheckDegree = 3;

Json source_json(const RunConfig& cfg) {
  if (cfg.idn) return Json{{"type", "idn"}, {"d", cfg.idn->d}, {"n", cfg.idn->n}};
  if (cfg.lattice_file) return Json{{"lattice_file", *cfg.lattice_file}};
  if (cfg.ideal_file) return Json{{"ideal_file", *cfg.ideal_file}};
  if (cfg.window) {
    return Json{{"type", "window"}, {"d", cfg.window->d}, {"n", cfg.window->n}, {"i", cfg.window->i}, {"j", cfg.window->j}};
  }
  if (cfg.jblock) {
    Json blocks = Json::array({Json::array({cfg.jblock->i, cfg.jblock->k})});
    for (const auto& b : cfg.jblock->extra) blocks.push_back(Json::array({b.i, b.k}));
    return Json{{"type", "jblock"}, {"n", cfg.jblock->n}, {"blocks", std::move(blocks)}};
  }
  return Json{{"type", "builtin"}};
}

DistributiveLattice load_lattice(const RunConfig& cfg) {
  if (cfg.idn) return idn(cfg.idn->d, cfg.idn->n);
  if (cfg.lattice_file) return io::lattice_from_json(io::read_json_file(*cfg.lattice_file));
  throw UsageError("a lattice source is required (--idn d n or --lattice FILE)");
}

void guard(std::size_t size, std::size_t limit, const std::string& what) {
  if (size > limit) {
    throw Error(Errc::SizeLimitExceeded, what + ": lattice has " + std::to_string(size) +
                                             " elements, guard --max-size is " + std::to_string(limit));
  }
}

Json lattice_report(const RunConfig& cfg) {
  const auto L = load_lattice(cfg);
  Json j;
  j["lattice"] = io::lattice_json(L);
  j["summary"] = report::lattice_summary_json(L);
  return j;
}

Json faces_report(const RunConfig& cfg) {
  const auto L = load_lattice(cfg);
  guard(L.size(), std::min(cfg.max_size, kMaxBitmaskElements), "faces");
  Json faces = Json::array();
  for (const auto& D : enumerate_embedded_sublattices(L, cfg.workers)) faces.push_back(report::face_json(L, D));
  Json j;
  j["face_count"] = faces.size();
  j["faces"] = std::move(faces);
  return j;
}

Json sing_report(const RunConfig& cfg, bool& failed) {
  if (!cfg.idn) throw UsageError("sing needs --idn d n");
  GrassmannLattice G(cfg.idn->d, cfg.idn->n);
  if (cfg.exhaustive) guard(G.lattice().size(), std::min(cfg.max_size, kMaxBitmaskElements), "sing --exhaustive");
  const auto r = singular_locus_idn(cfg.idn->d, cfg.idn->n, cfg.exhaustive, cfg.workers);
  Json j = report::singular_locus_json(G, r);
  bool dim3 = true, codim3 = true;
  for (const auto& w : r.windows) {
    dim3 = dim3 && w.geometry.face_dim == 3;
    codim3 = codim3 && w.geometry.ambient_dim - w.geometry.orbit_dim == 3;
  }
  Json purity{{"windows_face_dim_3", dim3}, {"orbit_codim_3", codim3}};
  if (r.scan) purity["minimal_singular_faces_are_windows"] = r.scan->maximal_singular_are_windows;
  purity["pass"] = dim3 && codim3 && (!r.scan || (r.scan->maximal_singular_are_windows && r.scan->maximal_singular_dim3));
  j["purity"] = std::move(purity);
  Json gl = Json::array();
  for (const auto& w : r.windows) gl.push_back(gl_criterion(G.lattice(), w.window.Lij));
  j["window_gl_criterion"] = std::move(gl);
  failed = !r.ok() || !j["purity"]["pass"].get<bool>();
  return j;
}

Json mult_report(const RunConfig& cfg, bool& failed) {
  Json j;
  if (cfg.window) {
    const auto& w = *cfg.window;
    const FaceSpec spec = WindowFace{w.d, w.n, w.i, w.j};
    j["face"] = describe(spec);
    j["multiplicity"] = face_mult(spec).str();
    GrassmannLattice G(w.d, w.n);
    const auto win = singular_window(G, w.i, w.j);
    j["D"] = io::elements_json(G.lattice(), win.Lij);
    j["verdict"] = std::string(to_string(is_smooth_face(G.lattice(), win.Lij).status));
    return j;
  }
  if (cfg.jblock) {
    const auto& b = *cfg.jblock;
    std::vector<JBlock> blocks{JBlock{b.i, b.k}};
    blocks.insert(blocks.end(), b.extra.begin(), b.extra.end());
    const FaceSpec spec = blocks.size() == 1 ? FaceSpec{JBlockFace{b.n, b.i, b.k}} : FaceSpec{JBlockUnionFace{b.n, blocks}};
    const BigInt m = face_mult(spec);
    GrassmannLattice G(2, b.n);
    const ElementSet D = jblock_union_face(G, blocks);
    const FaceSpec back = identify_face_family(G, D);
    const HPoset H = h_poset(G.lattice(), D);
    j["face"] = describe(spec);
    j["multiplicity"] = m.str();
    j["D"] = io::elements_json(G.lattice(), D);
    j["generators"] = report::generators_json(G.lattice(), face_generators(G.lattice(), D));
    j["H_components"] = H.components.size();
    j["identified_as"] = describe(back);
    j["identified_multiplicity"] = face_mult(back).str();
    failed = face_mult(back) != m;
    return j;
  }
  const auto L = load_lattice(cfg);
  const BigInt chains = fixed_point_mult(L);
  j["fixed_point_mult"] = chains.str();
  if (cfg.idn) {
    const BigInt hook = hook_mult(cfg.idn->d, cfg.idn->n);
    j["hook_mult"] = hook.str();
    bool ok = hook == chains;
    if (cfg.idn->d == 2) {
      const BigInt cat = catalan(static_cast<unsigned>(cfg.idn->n - 2));
      j["catalan"] = cat.str();
      ok = ok && cat == chains;
    }
    j["agree"] = ok;
    failed = !ok;
  }
  return j;
}

Json hilbert_report(const RunConfig& cfg, bool& failed) {
  Json j;
  if (cfg.ideal_file) {
    const SqFreeIdeal I = io::ideal_from_json(io::read_json_file(*cfg.ideal_file));
    Json gens = Json::array();
    for (const auto& g : I.generators()) gens.push_back(g);
    j["ideal"] = Json{{"n_vars", I.n_vars()}, {"generators", std::move(gens)}};
    j["hilbert"] = report::hilbert_json(sqfree_hilbert(I), cfg.m_max);
    return j;
  }
  const auto L = load_lattice(cfg);
  const HilbertData h = sqfree_hilbert(stanley_reisner_ideal(L));
  j["hilbert"] = report::hilbert_json(h, cfg.m_max);
  j["maximal_chains"] = fixed_point_mult(L).str();
  bool ok = h.degree == fixed_point_mult(L) && h.krull_dim == static_cast<int>(L.rank_of_torus());
  if (L.size() <= kCrosscheckLimit) {
    const auto rows = lattice_hilbert_crosscheck(L, kCrosscheckDegree);
    j["crosscheck"] = report::crosscheck_json(rows);
    for (const auto& r : rows) ok = ok && r.equal();
  }
  j["consistent"] = ok;
  failed = !ok;
  return j;
}

Json counterexample_report(bool& failed) {
  const auto L = counterexample_lattice();
  const int x = L.poset().index_of(Label(std::vector<int>{1, 5, 6}));
  const std::vector<int> D{x};
  Json j;
  j["lattice"] = "interval [(1,3,4), (2,5,6)] of I_{3,6}";
  j["summary"] = report::lattice_summary_json(L);
  j["face"] = report::face_json(L, D);
  std::vector<Generator> covers;
  for (const auto& g : face_generators(L, D))
    if (g.kind == Generator::Kind::Cover) covers.push_back(g);
  j["cover_generators"] = report::generators_json(L, covers);
  j["cover_generators_rank"] = rank(IntMatrix::from_rows(generator_rows(covers), L.rank_of_torus()));
  const bool gl = gl_criterion(L, D);
  const bool smooth = is_smooth_face(L, D).smooth();
  j["criterion_predicts_smooth"] = gl;
  j["verdict_smooth"] = smooth;
  j["disagreement"] = gl && !smooth;
  j["harness"] = report::harness_json(L, conjecture_harness(L));
  failed = false;
  return j;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Lattice: return "lattice";
    case Command::Faces: return "faces";
    case Command::Sing: return "sing";
    case Command::Mult: return "mult";
    case Command::Hilbert: return "hilbert";
    case Command::Verify: return "verify";
    case Command::Counterexample: return "counterexample";
  }
  return "lattice";
}

std::optional<RunConfig> parse_args(int argc, char** argv, std::ostream& out) {
  CLI::App app{"hibi: Hibi toric varieties of distributive lattices", "hibi"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.workers = default_workers();
  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--output,-o", output, "Write the report to this file instead of stdout");
  app.add_option("--workers", cfg.workers, "Worker threads for exhaustive scans (default $HIBI_WORKERS)")
      ->check(CLI::PositiveNumber);

  std::vector<int> idn_args, window_args, jblock_args;
  std::vector<std::vector<int>> union_args;
  std::string lattice_file, ideal_file;

  auto add_idn = [&](CLI::App* sub) {
    return sub->add_option("--idn", idn_args, "Use I_{d,n}")->expected(2);
  };
  auto add_lattice = [&](CLI::App* sub) {
    return sub->add_option("--lattice", lattice_file, "Lattice JSON file")->check(CLI::ExistingFile);
  };

  auto* lattice = app.add_subcommand("lattice", "Build a lattice and summarise it");
  auto* l_idn = add_idn(lattice);
  l_idn->excludes(add_lattice(lattice));

  auto* faces = app.add_subcommand("faces", "Report every face (embedded sublattice)");
  add_idn(faces)->excludes(add_lattice(faces));
  faces->add_option("--max-size", cfg.max_size, "Element guard for the face scan");

  auto* sing = app.add_subcommand("sing", "Singular locus of X_{d,n}");
  add_idn(sing)->required();
  sing->add_flag("--exhaustive", cfg.exhaustive, "Check every face");
  sing->add_option("--max-size", cfg.max_size, "Element guard for --exhaustive");

  auto* mult = app.add_subcommand("mult", "Multiplicities");
  auto* m_idn = add_idn(mult);
  auto* m_window = mult->add_option("--window", window_args, "Window face d n i j")->expected(4);
  auto* m_jblock = mult->add_option("--jblock", jblock_args, "J-block face n i k")->expected(3);
  mult->add_option("--union", union_args, "Further J-block i k (repeatable)")->expected(2)->needs(m_jblock);
  auto* m_lattice = add_lattice(mult);
  m_idn->excludes(m_window)->excludes(m_jblock)->excludes(m_lattice);
  m_window->excludes(m_jblock)->excludes(m_lattice);
  m_jblock->excludes(m_lattice);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a Stanley-Reisner or square-free ideal");
  auto* h_idn = add_idn(hilbert);
  auto* h_lattice = add_lattice(hilbert);
  auto* h_ideal = hilbert->add_option("--ideal", ideal_file, "Square-free ideal JSON file")->check(CLI::ExistingFile);
  h_idn->excludes(h_lattice)->excludes(h_ideal);
  h_lattice->excludes(h_ideal);
  hilbert->add_option("--m-max", cfg.m_max, "Largest degree listed")->check(CLI::Range(0u, 64u));

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  std::vector<std::string> suite_choices = verify_suite_names();
  suite_choices.insert(suite_choices.begin(), "all");
  verify->add_option("--suite", cfg.suite, "Suite name")->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-size", cfg.max_size, "Element guard for exhaustive suites");

  app.add_subcommand("counterexample", "The 12-element interval where the irreducible-pair criterion fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  auto* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  static const std::map<std::string, Command> commands{
      {"lattice", Command::Lattice}, {"faces", Command::Faces},   {"sing", Command::Sing},
      {"mult", Command::Mult},       {"hilbert", Command::Hilbert}, {"verify", Command::Verify},
      {"counterexample", Command::Counterexample}};
  cfg.command = commands.at(name);
  cfg.format = format == "md" ? Format::Markdown : Format::Json;
  if (!output.empty()) cfg.output = output;
  if (!idn_args.empty()) cfg.idn = IdnSource{idn_args[0], idn_args[1]};
  if (!lattice_file.empty()) cfg.lattice_file = lattice_file;
  if (!ideal_file.empty()) cfg.ideal_file = ideal_file;
  if (!window_args.empty()) cfg.window = WindowArgs{window_args[0], window_args[1], window_args[2], window_args[3]};
  if (!jblock_args.empty()) {
    JBlockArgs b{jblock_args[0], jblock_args[1], jblock_args[2], {}};
    for (const auto& u : union_args) b.extra.push_back(JBlock{u[0], u[1]});
    cfg.jblock = b;
  }

  const bool has_source = cfg.idn || cfg.lattice_file || cfg.ideal_file || cfg.window || cfg.jblock;
  const bool needs_source = cfg.command == Command::Lattice || cfg.command == Command::Faces ||
                            cfg.command == Command::Mult || cfg.command == Command::Hilbert;
  if (needs_source && !has_source) throw UsageError(name + ": a source option is required (see --help)");
  return cfg;
}

io::Json build_report(const RunConfig& cfg, bool& failed) {
  failed = false;
  Json j;
  j["schema"] = kSchema;
  j["command"] = std::string(to_string(cfg.command));
  j["source"] = source_json(cfg);
  Json body;
  switch (cfg.command) {
    case Command::Lattice: body = lattice_report(cfg); break;
    case Command::Faces: body = faces_report(cfg); break;
    case Command::Sing: body = sing_report(cfg, failed); break;
    case Command::Mult: body = mult_report(cfg, failed); break;
    case Command::Hilbert: body = hilbert_report(cfg, failed); break;
    case Command::Verify: {
      body = verify_json(run_verify(cfg.suite, cfg.max_size, cfg.workers));
      failed = !body["passed"].get<bool>();
      break;
    }
    case Command::Counterexample: body = counterexample_report(failed); break;
  }
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool failed = false;
  Json j;
  try {
    j = build_report(cfg, failed);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = cfg.format == Format::Json ? j.dump(2) + "\n" : report::render_markdown(j);
  if (cfg.output) {
    std::ofstream f(*cfg.output);
    if (!f) {
      err << "error: cannot write " << *cfg.output << "\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  return failed ? 1 : 0;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  try {
    auto cfg = parse_args(argc, argv, out);
    if (!cfg) return 0;
    return run(*cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hibi::cli
