#include "sharpflat/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "sharpflat/cli/commands.hpp"

namespace sharpflat::cli {

namespace {

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  for (std::size_t i = 0; i < diagnostics.size(); ++i) {
    if (i > 0) out << "; ";
    out << diagnostics[i].to_string();
  }
  return out.str();
}

const char* type_name(const nlohmann::json& value) { return value.type_name(); }

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::Jacobi: return "jacobi";
    case Command::KernelNorms: return "kernel-norms";
    case Command::Opnorm: return "opnorm";
    case Command::Fourier: return "fourier";
    case Command::Dimension: return "dimension";
    case Command::Shell: return "shell";
    case Command::Sharpness: return "sharpness";
    case Command::Exponents: return "exponents";
  }
  return "unknown";
}

const std::vector<Command>& all_commands() {
  static const std::vector<Command> commands = {Command::Jacobi,    Command::KernelNorms, Command::Opnorm,
                                                Command::Fourier,   Command::Dimension,   Command::Shell,
                                                Command::Sharpness, Command::Exponents};
  return commands;
}

std::optional<Command> command_from_string(std::string_view name) {
  for (Command c : all_commands()) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

bool uses_randomness(Command command) { return command == Command::Opnorm; }

std::string Diagnostic::to_string() const { return field.empty() ? message : field + ": " + message; }

SchemaError::SchemaError(std::vector<Diagnostic> diagnostics)
    : std::invalid_argument(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["command"] = to_string(command);
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["output_path"] = output_path;
  j["parameters"] = parameters;
  return j;
}

FieldReader::FieldReader(const nlohmann::json& object, std::string path, std::vector<Diagnostic>& diagnostics)
    : object_(object), path_(std::move(path)), diagnostics_(&diagnostics) {
  if (!object_.is_object()) {
    fail("", std::string("expected an object, got ") + type_name(object_));
    object_ = nlohmann::json::object();
  }
}

std::string FieldReader::field(const std::string& key) const {
  if (key.empty()) return path_;
  return path_.empty() ? key : path_ + "." + key;
}

void FieldReader::fail(const std::string& key, const std::string& message) {
  diagnostics_->push_back({field(key), message});
}

bool FieldReader::has(const std::string& key) const { return object_.contains(key); }

const nlohmann::json* FieldReader::raw(const std::string& key) {
  seen_.push_back(key);
  auto it = object_.find(key);
  return it == object_.end() ? nullptr : &*it;
}

double FieldReader::number(const std::string& key, std::optional<double> fallback) {
  const auto* v = raw(key);
  if (v == nullptr) {
    if (!fallback) fail(key, "required field is missing");
    return fallback.value_or(0.0);
  }
  if (!v->is_number()) {
    fail(key, std::string("expected a number, got ") + type_name(*v));
    return fallback.value_or(0.0);
  }
  return v->get<double>();
}

double FieldReader::extended_number(const std::string& key, std::optional<double> fallback) {
  const auto* v = raw(key);
  if (v != nullptr && v->is_string()) {
    if (v->get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    fail(key, "expected a number or \"inf\"");
    return fallback.value_or(0.0);
  }
  if (v == nullptr) {
    if (!fallback) fail(key, "required field is missing");
    return fallback.value_or(0.0);
  }
  if (!v->is_number()) {
    fail(key, std::string("expected a number or \"inf\", got ") + type_name(*v));
    return fallback.value_or(0.0);
  }
  return v->get<double>();
}

std::int64_t FieldReader::integer(const std::string& key, std::optional<std::int64_t> fallback) {
  const auto* v = raw(key);
  if (v == nullptr) {
    if (!fallback) fail(key, "required field is missing");
    return fallback.value_or(0);
  }
  if (!v->is_number_integer()) {
    fail(key, std::string("expected an integer, got ") + type_name(*v));
    return fallback.value_or(0);
  }
  return v->get<std::int64_t>();
}

bool FieldReader::boolean(const std::string& key, bool fallback) {
  const auto* v = raw(key);
  if (v == nullptr) return fallback;
  if (!v->is_boolean()) {
    fail(key, std::string("expected a boolean, got ") + type_name(*v));
    return fallback;
  }
  return v->get<bool>();
}

std::string FieldReader::string(const std::string& key, std::optional<std::string> fallback) {
  const auto* v = raw(key);
  if (v == nullptr) {
    if (!fallback) fail(key, "required field is missing");
    return fallback.value_or("");
  }
  if (!v->is_string()) {
    fail(key, std::string("expected a string, got ") + type_name(*v));
    return fallback.value_or("");
  }
  return v->get<std::string>();
}

std::vector<std::int64_t> FieldReader::integer_list(const std::string& key,
                                                    std::optional<std::vector<std::int64_t>> fallback) {
  const auto* v = raw(key);
  if (v == nullptr) {
    if (!fallback) fail(key, "required field is missing");
    return fallback.value_or(std::vector<std::int64_t>{});
  }
  std::vector<std::int64_t> out;
  if (!v->is_array()) {
    fail(key, std::string("expected an array of integers, got ") + type_name(*v));
    return out;
  }
  for (const auto& x : *v) {
    if (!x.is_number_integer()) {
      fail(key, "expected an array of integers");
      return {};
    }
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::vector<double> FieldReader::number_list(const std::string& key, std::optional<std::vector<double>> fallback) {
  const auto* v = raw(key);
  if (v == nullptr) {
    if (!fallback) fail(key, "required field is missing");
    return fallback.value_or(std::vector<double>{});
  }
  std::vector<double> out;
  if (!v->is_array()) {
    fail(key, std::string("expected an array of numbers, got ") + type_name(*v));
    return out;
  }
  for (const auto& x : *v) {
    if (x.is_string() && x.get<std::string>() == "inf") {
      out.push_back(std::numeric_limits<double>::infinity());
    } else if (x.is_number()) {
      out.push_back(x.get<double>());
    } else {
      fail(key, "expected an array of numbers");
      return {};
    }
  }
  return out;
}

FieldReader FieldReader::object(const std::string& key) {
  const auto* v = raw(key);
  if (v == nullptr) return FieldReader(nlohmann::json::object(), field(key), *diagnostics_);
  return FieldReader(*v, field(key), *diagnostics_);
}

void FieldReader::reject_unknown() {
  for (const auto& [key, value] : object_.items()) {
    if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) fail(key, "unknown field");
  }
}

std::vector<Diagnostic> validate(const nlohmann::json& config) {
  std::vector<Diagnostic> diagnostics;
  FieldReader top(config, "", diagnostics);
  if (!config.is_object()) return diagnostics;

  const std::string name = top.string("command", std::nullopt);
  const auto command = command_from_string(name);
  if (!name.empty() && !command) {
    std::string known;
    for (Command c : all_commands()) known += (known.empty() ? "" : ", ") + to_string(c);
    top.fail("command", "unknown command '" + name + "' (expected one of " + known + ")");
  }

  if (const auto* seed = top.raw("seed"); seed != nullptr && !seed->is_null()) {
    const bool nonnegative = seed->is_number_unsigned() || (seed->is_number_integer() && seed->get<std::int64_t>() >= 0);
    if (!nonnegative) top.fail("seed", "expected a nonnegative integer");
  } else if (command && uses_randomness(*command)) {
    top.fail("seed", "required field is missing (" + to_string(*command) + " uses randomized search)");
  }
  top.string("output_path", std::string("."));
  auto params = top.object("parameters");
  if (command) check_parameters(*command, params);
  top.reject_unknown();
  return diagnostics;
}

RunConfig parse_config(const nlohmann::json& config) {
  auto diagnostics = validate(config);
  if (!diagnostics.empty()) throw SchemaError(std::move(diagnostics));
  RunConfig rc;
  rc.command = *command_from_string(config.at("command").get<std::string>());
  if (config.contains("seed") && !config.at("seed").is_null()) rc.seed = config.at("seed").get<std::uint64_t>();
  rc.output_path = config.value("output_path", std::string("."));
  rc.parameters = config.value("parameters", nlohmann::json::object());
  return rc;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError({{"--config", "cannot open '" + path + "'"}});
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError({{"--config", std::string("invalid JSON: ") + e.what()}});
  }
}

}  // namespace sharpflat::cli
