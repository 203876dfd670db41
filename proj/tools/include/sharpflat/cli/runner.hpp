#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "sharpflat/cli/artifacts.hpp"
#include "sharpflat/cli/config.hpp"

namespace sharpflat::cli {

inline constexpr const char* kOutputEnvironmentVariable = "SHARPFLAT_OUT";

enum class ExitStatus : int {
  Pass = 0,
  ChecksFailed = 1,
  SchemaViolation = 2,
  NumericalRejection = 3,
  IoFailure = 4,
};

struct Invocation {
  std::optional<Command> command;  ///< subcommand; must agree with the config's command when both are given
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_directory;
  int threads = 1;
  bool check_only = false;
};

/// --out, then $SHARPFLAT_OUT, then the config's output_path, then ".".
std::filesystem::path resolve_output_directory(const std::optional<std::string>& flag, const RunConfig& config);

/// Applies subcommand and seed overrides to a raw config before validation.
nlohmann::json apply_overrides(nlohmann::json config, const Invocation& invocation);

nlohmann::json summary_json(const RunConfig& config, const RunResult& result);

/// Validates, runs, and writes <out>/<command>.csv and <out>/<command>.json.
ExitStatus run(const nlohmann::json& config, const Invocation& invocation, std::ostream& out, std::ostream& err);

}  // namespace sharpflat::cli
