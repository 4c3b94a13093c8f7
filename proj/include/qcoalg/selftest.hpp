#pragma once

// Randomized invariant checks behind the `selftest` subcommand. These use
// the library's own operations against each other (round trips, axioms);
// the test suite additionally checks them against independent oracles.

#include <cstdint>
#include <string>
#include <vector>

namespace qcoalg {

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when none
};

// `trials` instances per suite.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::size_t trials);

}  // namespace qcoalg
