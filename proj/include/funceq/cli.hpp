#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace funceq {

enum class Command { Analyze, Spectrum, KFuncs, Exact, Compare };

std::optional<Command> parse_command(const std::string& name);

struct RunConfig {
  std::filesystem::path spec_path;
  Command command = Command::Analyze;
  /// Line shift; nullopt scans the default candidates.
  std::optional<double> y = 2.0;
  std::size_t grid_N = 4096;
  int modes_M = 10;
  int terms_R = 3;
  std::size_t n_max = 10000;
  /// Samples per period for `kfuncs`.
  std::size_t samples = 512;
  /// Empty writes to the output stream.
  std::filesystem::path out_path;
};

enum ExitCode : int { kSuccess = 0, kValidationFailure = 2, kNumericalFailure = 3 };

/// Runs one command end to end. Tables go to config.out_path (or `out` when
/// no path is given); progress and errors go to `log`.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace funceq
