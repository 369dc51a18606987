// Named verification suites run by `cdloops verify`.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cdloops {

enum class Provenance { kPaper, kDerived };
std::string to_string(Provenance p);

struct Check {
  std::string name;
  bool passed = false;
  Provenance provenance = Provenance::kDerived;
  // A reproducible witness on failure, or a short summary on success.
  std::string detail;
};

struct SuiteResult {
  std::string name;
  int level = 0;
  std::vector<Check> checks;

  bool passed() const;
};

// core, oracle, lemmas, hamiltonian, norton.
const std::vector<std::string>& suite_names();

// Highest level each suite accepts.
int suite_max_level(std::string_view name);

// Runs one suite, or every suite for "all". Throws std::invalid_argument for
// an unknown name or a level outside the suite's range.
std::vector<SuiteResult> run_suites(std::string_view name, int level);

}  // namespace cdloops
