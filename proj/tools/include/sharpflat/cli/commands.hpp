#pragma once

// Per-command parameter schemas and computations. Every tolerance has a
// default equal to the corresponding acceptance threshold.

#include "sharpflat/cli/artifacts.hpp"
#include "sharpflat/cli/config.hpp"

namespace sharpflat::cli {

struct ExecutionOptions {
  int threads = 1;
};

/// Reads the parameters of `command`, recording schema problems in the reader.
void check_parameters(Command command, FieldReader& parameters);

/// Runs a validated configuration. Numerical rejections propagate as
/// sharpflat::NumericalRejection.
RunResult execute(const RunConfig& config, const ExecutionOptions& options);

RunResult run_jacobi(const nlohmann::json& parameters);
RunResult run_kernel_norms(const nlohmann::json& parameters);
RunResult run_opnorm(const nlohmann::json& parameters, std::uint64_t seed);
RunResult run_fourier(const nlohmann::json& parameters);
RunResult run_dimension(const nlohmann::json& parameters);
RunResult run_shell(const nlohmann::json& parameters);
RunResult run_sharpness(const nlohmann::json& parameters, int threads);
RunResult run_exponents(const nlohmann::json& parameters);

}  // namespace sharpflat::cli
