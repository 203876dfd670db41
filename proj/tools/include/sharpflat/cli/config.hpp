#pragma once

// Run configuration: {"command", "seed", "output_path", "parameters"}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace sharpflat::cli {

inline constexpr int kSchemaVersion = 1;

enum class Command { Jacobi, KernelNorms, Opnorm, Fourier, Dimension, Shell, Sharpness, Exponents };

std::string to_string(Command command);
std::optional<Command> command_from_string(std::string_view name);
const std::vector<Command>& all_commands();
/// Commands whose computation draws random numbers and therefore needs a seed.
bool uses_randomness(Command command);

struct Diagnostic {
  std::string field;  ///< dotted path, e.g. "parameters.p"
  std::string message;

  std::string to_string() const;
};

class SchemaError : public std::invalid_argument {
 public:
  explicit SchemaError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct RunConfig {
  Command command = Command::Jacobi;
  std::optional<std::uint64_t> seed;
  std::string output_path;
  nlohmann::json parameters = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// Empty iff `config` is a schema-valid run configuration.
std::vector<Diagnostic> validate(const nlohmann::json& config);

/// Throws SchemaError carrying every diagnostic.
RunConfig parse_config(const nlohmann::json& config);

/// Reads and parses a JSON file; parse failures become a SchemaError.
nlohmann::json load_json_file(const std::string& path);

/// Walks a JSON object, pulling typed fields and recording one diagnostic per
/// problem instead of stopping at the first.
class FieldReader {
 public:
  FieldReader(const nlohmann::json& object, std::string path, std::vector<Diagnostic>& diagnostics);

  bool has(const std::string& key) const;
  double number(const std::string& key, std::optional<double> fallback);
  /// Accepts a number or the string "inf".
  double extended_number(const std::string& key, std::optional<double> fallback);
  std::int64_t integer(const std::string& key, std::optional<std::int64_t> fallback);
  bool boolean(const std::string& key, bool fallback);
  std::string string(const std::string& key, std::optional<std::string> fallback);
  std::vector<std::int64_t> integer_list(const std::string& key, std::optional<std::vector<std::int64_t>> fallback);
  std::vector<double> number_list(const std::string& key, std::optional<std::vector<double>> fallback);
  /// Sub-object reader; an absent key yields a reader over an empty object.
  FieldReader object(const std::string& key);
  const nlohmann::json* raw(const std::string& key);

  void fail(const std::string& key, const std::string& message);
  /// Reports every key that no accessor asked for.
  void reject_unknown();
  const std::string& path() const { return path_; }
  std::string field(const std::string& key) const;

 private:
  nlohmann::json object_;
  std::string path_;
  std::vector<Diagnostic>* diagnostics_;
  std::vector<std::string> seen_;
};

}  // namespace sharpflat::cli
