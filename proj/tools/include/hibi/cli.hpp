#pragma once

#include "hibi/grassmann.hpp"
#include "hibi/io.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hibi::cli {

enum class Command { Lattice, Faces, Sing, Mult, Hilbert, Verify, Counterexample };
enum class Format { Json, Markdown };

std::string_view to_string(Command c);

struct IdnSource {
  int d = 0;
  int n = 0;
};

struct WindowArgs {
  int d = 0, n = 0, i = 0, j = 0;
};

struct JBlockArgs {
  int n = 0, i = 0, k = 0;
  std::vector<JBlock> extra;  // further blocks from --union
};

struct RunConfig {
  Command command = Command::Lattice;
  // Exactly one source, where the command takes one.
  std::optional<IdnSource> idn;
  std::optional<std::string> lattice_file;
  std::optional<std::string> ideal_file;
  std::optional<WindowArgs> window;
  std::optional<JBlockArgs> jblock;
  bool exhaustive = false;
  std::string suite = "all";
  std::size_t max_size = 24;  // element guard for exhaustive scans
  unsigned m_max = 6;         // Hilbert function terms
  int workers = 1;
  Format format = Format::Json;
  std::optional<std::string> output;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws UsageError. Returns nullopt when help was printed.
std::optional<RunConfig> parse_args(int argc, char** argv, std::ostream& out);

/// Builds the report JSON. `verification_failed` is set when a verify suite
/// or an internal consistency check reports a failure.
io::Json build_report(const RunConfig& cfg, bool& verification_failed);

/// 0 success, 1 verification failure, 2 usage error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map errors to exit codes.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hibi::cli
