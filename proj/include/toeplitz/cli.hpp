#ifndef TOEPLITZ_CLI_HPP
#define TOEPLITZ_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toeplitz {

inline const std::vector<std::string> kCommands = {"psd", "pair", "factorize", "caratheodory", "separate", "equiv-check",
                                                    "counterexample", "xi", "choi-demo", "hardy", "fourier0"};

struct RunConfig {
  std::string command;
  std::string subcommand;  // counterexample: "minmax"
  std::optional<double> tol;
  int grid = 0;  // 0 = command default
  std::uint64_t seed = 0;
  std::string json_path;
  double eps = 1e-3;
  int n = 0;        // xi order / equiv-check instance count
  int samples = 0;  // 0 = command default
  std::vector<int> sizes;
  bool csv = false;
  long p = 0;
  int m = -1;
};

struct RunResult {
  /// 0 positive verdict or success, 1 established negative verdict,
  /// 2 error or inconclusive.
  int exit_code = 2;
  std::string report;      // JSON (or CSV for hardy --csv), newline-terminated
  std::string diagnostic;  // human-readable error text, empty on success
};

RunResult run(const RunConfig& config);

}  // namespace toeplitz

#endif  // TOEPLITZ_CLI_HPP
