#ifndef SPECFACT_CLI_HPP
#define SPECFACT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specfact/ahiezer.hpp"
#include "specfact/factor_cepstral.hpp"
#include "specfact/serialize.hpp"

namespace specfact {

/// One invocation of the command-line tool.
struct RunConfig {
  /// factor, mahler, lift, ahiezer, verify or compare.
  std::string command;
  /// verify only: "outer" or "fixtures".
  std::string target;
  std::string method = "roots";
  /// compare only.
  std::vector<std::string> methods{"roots", "cepstral", "levinson"};
  /// 0 picks the method default: 1024 on the circle, 256 per torus axis, 4096 for levinson.
  std::size_t grid = 0;
  /// Levinson section order; 0 picks 4 * degree (64 under compare).
  int order = 0;
  Ladder ladder{};
  std::optional<double> alpha;
  /// Overrides of the named tolerances; see default_tolerances().
  std::map<std::string, double> tolerances;
  std::optional<Box> box;
  std::string input;
  /// Report path; empty writes to the stream passed to run().
  std::string output;
  std::string csv;
  std::size_t samples = 256;
  /// verify fixtures only.
  int count = 20;
  std::uint64_t seed = 1;
};

/// Tolerance names accepted by --tol with their defaults.
const std::map<std::string, double>& default_tolerances();

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Executes the command and writes the report. Library errors are caught and
/// turned into a report with the "error" field set; the return value is the
/// process exit code.
int run(const RunConfig& config, std::ostream& out);

/// Seed for verify fixtures: SPECFACT_SEED if set and numeric, else 1.
std::uint64_t seed_from_env();

}  // namespace specfact

#endif  // SPECFACT_CLI_HPP
