#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "iq/decision.hpp"

// Command implementations behind the CLI. Kept in the library so tests can
// drive the exact code path the binary uses and pin its structured output.
namespace iq {

struct RunConfig {
  std::string command;              // check | conserved | oracle | classify | maximal
  std::vector<std::string> inputs;  // file paths
  int base_point = 0;
  int max_sites = 3;
  std::uint64_t degree_cap = 1'000'000;  // brute-force caps (enumeration and spaces)
  std::uint64_t work_limit = 100'000;    // Groebner S-pair reductions per basis
  std::string format = "text";           // text | json
  std::uint64_t seed = 0;
  int jobs = 1;
};

// Exit codes: 0 success (check: irreducibly quantified; oracle: nothing found),
// 1 negative result, 2 input error, 3 resource limit exceeded.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResources = 3;

nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json counterexample_to_json(const Counterexample& c);

/// Executes the configured command, writing reports to `out` and diagnostics
/// to `err`; returns the process exit code.
int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace iq
