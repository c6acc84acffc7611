#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbdom/engine.hpp"

namespace mbdom::verify {

struct CheckResult {
  std::string name;
  long instances = 0;
  bool passed = true;
  std::string detail;  // counterexample edge list and a short note on failure
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

struct Options {
  int max_n = 0;  // 0 = suite default
  std::uint64_t seed = 1;
  SolveOptions solve;
};

// Suites: bounds, trees, cycles, residual, union, lemmas.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, const Options& options = {});

}  // namespace mbdom::verify
