#include "hibi/cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace hibi;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hibi");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

io::Json parsed(const Outcome& o) { return io::Json::parse(o.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sing --idn 2 5") {
  const auto o = invoke({"sing", "--idn", "2", "5"});
  REQUIRE(o.code == 0);
  const auto j = parsed(o);
  CHECK(j["schema"] == 1);
  CHECK(j["purity"]["pass"] == true);
  CHECK(o.out.find("sigma_1,1") != std::string::npos);
  CHECK(o.out.find("sigma_2,1") != std::string::npos);
}

TEST_CASE("verify --suite all --max-size 12") {
  const auto o = invoke({"verify", "--suite", "all", "--max-size", "12"});
  CHECK(o.code == 0);
  CHECK(o.out.find("\"passed\": false") == std::string::npos);
}

TEST_CASE("counterexample") {
  const auto o = invoke({"counterexample"});
  REQUIRE(o.code == 0);
  const auto j = parsed(o);
  CHECK(j["criterion_predicts_smooth"] == true);
  CHECK(j["verdict_smooth"] == false);
  CHECK(j["cover_generators"].size() == 5);
  CHECK(j["cover_generators_rank"] == 4);
}

TEST_CASE("mult and hilbert") {
  const auto m = invoke({"mult", "--idn", "3", "6"});
  REQUIRE(m.code == 0);
  CHECK(parsed(m)["hook_mult"] == "42");
  const auto u = invoke({"mult", "--jblock", "9", "1", "1", "--union", "5", "0"});
  REQUIRE(u.code == 0);
  CHECK(parsed(u)["multiplicity"] == "10");
  CHECK(parsed(u)["H_components"] == 2);
  const auto h = invoke({"hilbert", "--idn", "2", "4", "--m-max", "3"});
  REQUIRE(h.code == 0);
  CHECK(parsed(h)["consistent"] == true);
}

TEST_CASE("output is byte-identical across runs and worker counts") {
  const auto a = invoke({"faces", "--idn", "2", "5", "--workers", "1"});
  const auto b = invoke({"faces", "--idn", "2", "5", "--workers", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = invoke({"sing", "--idn", "2", "5", "--format", "md"});
  const auto d = invoke({"sing", "--idn", "2", "5", "--format", "md"});
  CHECK(c.out == d.out);
  CHECK(c.out.find("sigma_1,1") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"sing"}).code == 2);
  CHECK(invoke({"mult", "--window", "2", "4", "2", "1"}).code == 2);
  CHECK(invoke({"faces", "--idn", "3", "7"}).code == 2);
  CHECK(invoke({"lattice", "--lattice", "/nonexistent.json"}).code == 2);
  const auto h = invoke({"--help"});
  CHECK(h.code == 0);
}

TEST_CASE("lattice files") {
  const std::string path = "cli_test_lattice.json";
  {
    std::ofstream f(path);
    f << R"({"elements": ["0", "a", "b", "1"], "covers": [["a", "0"], ["b", "0"], ["1", "a"], ["1", "b"]]})";
  }
  const auto o = invoke({"mult", "--lattice", path});
  REQUIRE(o.code == 0);
  CHECK(parsed(o)["fixed_point_mult"] == "2");
  {
    std::ofstream f(path);
    f << R"({"elements": ["0", "a", "b", "c", "1"], "covers": [["a", "0"], ["b", "0"], ["c", "b"], ["1", "a"], ["1", "c"]]})";
  }
  CHECK(invoke({"lattice", "--lattice", path}).code == 2);
  std::remove(path.c_str());
}

}
