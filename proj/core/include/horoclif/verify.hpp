#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace horoclif {

struct VerifyConfig {
  int n = 2;
  std::uint64_t seed = 1;
  int samples = 100;
  // When > 0, replaces the default pass threshold of residual-based suites.
  double tol = 0.0;
};

struct SuiteResult {
  std::string module;
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;  // failure note, empty when passing
};

// Runs every property suite in a fixed order. Each suite draws from its own
// split of the seed, so results are byte-for-byte reproducible for a fixed
// (n, seed, samples) and independent of which other suites run.
std::vector<SuiteResult> run_verify(const VerifyConfig& cfg);

// Names of the registered suites as "module/name", in execution order.
std::vector<std::string> verify_suite_names();

}  // namespace horoclif
