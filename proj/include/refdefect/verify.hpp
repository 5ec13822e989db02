#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace refdefect {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> failures;  // counterexample dumps (capped)
  std::string note;                   // extra statistics, e.g. primal convergence rate

  bool ok() const { return passed == total; }
};

std::vector<std::string> verify_suite_names();

/// Runs one named invariant suite; throws std::invalid_argument for unknown
/// names. Deterministic given the seed.
SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteResult> run_verify(std::uint64_t seed);

}  // namespace refdefect
