#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sharpflat/cli/runner.hpp"

int main(int argc, char** argv) {
  using namespace sharpflat::cli;
  CLI::App app{"Numerical checks for Jacobi kernels and restriction of product eigenfunctions"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir;
  int threads = 1;
  bool check_only = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--seed", seed, "random seed (overrides the config)");
    sub->add_option("--out", out_dir, "output directory (overrides $SHARPFLAT_OUT and the config)");
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--check", check_only, "validate the configuration and exit");
  };

  std::optional<Command> chosen;
  auto* generic = app.add_subcommand("run", "run the command named in the config");
  add_common(generic);
  generic->callback([&] { chosen.reset(); });
  for (Command c : all_commands()) {
    auto* sub = app.add_subcommand(to_string(c), "run the " + to_string(c) + " checks");
    add_common(sub);
    sub->callback([&chosen, c] { chosen = c; });
  }

  CLI11_PARSE(app, argc, argv);

  const CLI::App* active = app.get_subcommands().front();
  if (active->get_name() == "run" && config_path.empty()) {
    std::cerr << "schema: --config: required by 'run'\n";
    return static_cast<int>(ExitStatus::SchemaViolation);
  }

  nlohmann::json config = nlohmann::json::object();
  if (!config_path.empty()) {
    try {
      config = load_json_file(config_path);
    } catch (const SchemaError& e) {
      for (const auto& d : e.diagnostics()) std::cerr << "schema: " << d.to_string() << '\n';
      return static_cast<int>(ExitStatus::SchemaViolation);
    }
  }

  Invocation invocation;
  invocation.command = chosen;
  if (active->count("--seed") > 0) invocation.seed = seed;
  if (!out_dir.empty()) invocation.output_directory = out_dir;
  invocation.threads = threads;
  invocation.check_only = check_only;
  return static_cast<int>(run(config, invocation, std::cout, std::cerr));
}
