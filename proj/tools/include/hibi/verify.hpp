#pragma once

#include "hibi/io.hpp"

#include <string>
#include <vector>

namespace hibi {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Suite names, in execution order.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite by name, or all of them for "all". Exhaustive parts are
/// limited to lattices with at most `max_size` elements. Throws
/// BadParameters for an unknown suite.
std::vector<SuiteResult> run_verify(const std::string& suite, std::size_t max_size, int workers);

io::Json verify_json(const std::vector<SuiteResult>& results);

}  // namespace hibi
