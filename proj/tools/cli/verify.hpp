#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "model_file.hpp"

namespace mcc::cli {

struct CheckOutcome {
  std::string name;
  bool ok = true;
  std::size_t instances = 0;
  /// Description of the first failing instance.
  std::string counterexample;
};

/// Suites: algebra, lambda, motives, hirzebruch, pontrjagin, all.
std::vector<std::string> suite_names();

/// Runs the named suite; throws InputError for an unknown suite.
std::vector<CheckOutcome> run_suite(const std::string& suite, std::size_t order, std::uint64_t seed);

}  // namespace mcc::cli
