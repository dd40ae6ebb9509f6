#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rlcband/error.hpp"
#include "rlcband/rlc_model.hpp"
#include "rlcband/trace.hpp"

namespace rlcband::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kConfigError = 3,
  kNotUnderdamped = 4,
  kDomainError = 5,
  kEnclosureFailure = 6,
};

/// Maps a library failure to the exit code the command returns for it.
ExitCode exit_code_for(const Error& error) noexcept;

struct RunConfig {
  std::filesystem::path circuit;
  std::optional<std::filesystem::path> trace;
  /// Output directory; simulate defaults to the working directory.
  std::optional<std::filesystem::path> out_dir;
  std::size_t grid_points = kDefaultGridPoints;
  double t_end_multiplier = kDefaultTEndMultiplier;
  int precision = 4;

  /// Throws Config when a referenced path is missing or the grid is too small.
  void validate() const;
};

/// Tables-style report: nominal / trace / interval columns for the transient
/// specifications and the dynamic parameters, as `key = value` lines.
void write_metrics_report(std::ostream& out, const CircuitSpec& spec,
                          const std::optional<Trace>& normalized_trace, std::size_t grid_points,
                          double t_end_multiplier, int precision);

void write_dependency_demo(std::ostream& out);

/// Entry point; `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlcband::cli
