#include "sharpflat/cli/runner.hpp"

#include <cstdlib>
#include <ostream>

#include "sharpflat/cli/commands.hpp"
#include "sharpflat/errors.hpp"

namespace sharpflat::cli {

std::filesystem::path resolve_output_directory(const std::optional<std::string>& flag, const RunConfig& config) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kOutputEnvironmentVariable); env != nullptr && *env != '\0') return env;
  if (!config.output_path.empty()) return config.output_path;
  return ".";
}

nlohmann::json apply_overrides(nlohmann::json config, const Invocation& invocation) {
  if (config.is_null()) config = nlohmann::json::object();
  if (!config.is_object()) return config;
  if (invocation.command && !config.contains("command")) config["command"] = to_string(*invocation.command);
  if (invocation.seed) config["seed"] = *invocation.seed;
  return config;
}

nlohmann::json summary_json(const RunConfig& config, const RunResult& result) {
  nlohmann::json j;
  j["version"] = kSchemaVersion;
  j["command"] = to_string(config.command);
  j["config"] = config.to_json();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : result.checks) j["checks"].push_back(to_json(c));
  j["fits"] = nlohmann::json::array();
  for (const auto& f : result.fits) j["fits"].push_back(to_json(f));
  j["details"] = result.extra;
  j["rows"] = result.table.size();
  j["pass"] = result.pass();
  return j;
}

ExitStatus run(const nlohmann::json& raw, const Invocation& invocation, std::ostream& out, std::ostream& err) {
  const auto config_json = apply_overrides(raw, invocation);
  auto diagnostics = validate(config_json);
  if (invocation.command && config_json.is_object() && config_json.contains("command") &&
      config_json["command"].is_string() && config_json["command"].get<std::string>() != to_string(*invocation.command)) {
    diagnostics.push_back({"command", "config is for '" + config_json["command"].get<std::string>() +
                                          "' but the subcommand is '" + to_string(*invocation.command) + "'"});
  }
  if (invocation.threads < 1) diagnostics.push_back({"--threads", "must be at least 1"});
  if (!diagnostics.empty()) {
    for (const auto& d : diagnostics) err << "schema: " << d.to_string() << '\n';
    return ExitStatus::SchemaViolation;
  }
  const RunConfig config = parse_config(config_json);
  if (invocation.check_only) {
    out << "config ok: " << to_string(config.command) << '\n';
    return ExitStatus::Pass;
  }

  RunResult result;
  try {
    result = execute(config, ExecutionOptions{invocation.threads});
  } catch (const NumericalRejection& e) {
    err << "numerical rejection: " << e.what() << '\n';
    return ExitStatus::NumericalRejection;
  } catch (const SchemaError& e) {
    for (const auto& d : e.diagnostics()) err << "schema: " << d.to_string() << '\n';
    return ExitStatus::SchemaViolation;
  } catch (const DomainError& e) {
    err << "schema: " << e.what() << '\n';
    return ExitStatus::SchemaViolation;
  }

  const auto dir = resolve_output_directory(invocation.output_directory, config);
  const std::string stem = to_string(config.command);
  try {
    std::filesystem::create_directories(dir);
    write_file_atomic(dir / (stem + ".csv"), result.table.render());
    write_file_atomic(dir / (stem + ".json"), summary_json(config, result).dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "output: " << e.what() << '\n';
    return ExitStatus::IoFailure;
  }

  for (const auto& c : result.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " = " << format_number(c.value) << '\n';
  }
  for (const auto& f : result.fits) {
    const bool ok = std::abs(f.fit.slope - f.target) <= f.tolerance;
    out << (f.asserted ? (ok ? "PASS " : "FAIL ") : "INFO ") << f.name << " slope = " << format_number(f.fit.slope)
        << " target = " << format_number(f.target) << '\n';
  }
  out << "wrote " << (dir / (stem + ".csv")).string() << " and " << (dir / (stem + ".json")).string() << '\n';
  return result.pass() ? ExitStatus::Pass : ExitStatus::ChecksFailed;
}

}  // namespace sharpflat::cli
