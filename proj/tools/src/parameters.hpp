#pragma once

// Typed parameter records shared by validation and execution.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sharpflat/cli/config.hpp"
#include "sharpflat/cross_geometry.hpp"
#include "sharpflat/product_eigenfunctions.hpp"

namespace sharpflat::cli::params {

std::vector<std::int64_t> dyadic(std::int64_t lo, std::int64_t hi);

struct Jacobi {
  enum class Mode { Identities, Edge, Interior };
  Mode mode = Mode::Identities;
  special::JacobiParams family{};
  int n_max = 2048;
  int grid_size = 8192;
  int reflection_n_max = 512;
  int reflection_samples = 512;
  std::vector<std::int64_t> degrees;
  double scaled_angle = 1.0;
  double interior_margin = 10.0;
  double tol_closed_form = 1e-9;
  double tol_reflection = 1e-10;
  double tol_edge = 0.02;
  std::int64_t edge_reference_degree = 1000;
  double tol_interior_slope = 0.1;
};

struct KernelNorms {
  special::JacobiParams family{};
  double q = 2.0;
  std::vector<std::int64_t> degrees;
  std::optional<int> grid_size;
  double tol_slope = 0.05;
  double ratio_min = 0.5;
  double ratio_max = 4.0;
};

struct Opnorm {
  special::JacobiParams family{};
  double p = 2.0;
  std::vector<std::int64_t> degrees;
  std::optional<int> grid_size;
  int power_steps = 200;
  int refined_candidates = 3;
  int random_candidates = 4;
  double tol_slope = 0.05;
  double tol_closed_form = 1e-10;
  double max_log_drift = 0.05;
};

struct Fourier {
  cross::CrossSpace space = cross::CrossSpace::sphere(3);
  int n_max = 400;
  double tol_negativity = 1e-9;
  double tol_sum = 1e-8;
};

struct Dimension {
  cross::CrossSpace space = cross::CrossSpace::sphere(3);
  int n_max = 512;
  std::vector<std::int64_t> fit_degrees;
  std::vector<std::int64_t> derivative_degrees;
  int orthonormality_n_max = 64;
  double tol_closed_form = 1e-6;
  double tol_slope = 0.02;
  double tol_orthonormality = 1e-8;
  double tol_derivative_slope = 0.02;
};

struct Shell {
  std::vector<cross::CrossSpace> factors;
  std::int64_t level = 0;
  bool ordered = true;
};

struct Sweep {
  double min_n = 50.0;
  double max_n = 100.0;
  int count = 16;
};

struct Sharpness {
  std::vector<cross::CrossSpace> factors;
  int submanifold_dimension = 1;
  std::vector<double> matrix;  // row-major r x k
  std::vector<double> offset;
  std::vector<std::pair<double, double>> box;
  std::vector<double> exponents{2.0, 6.0};
  std::vector<std::int64_t> levels;  // explicit levels; empty means use sweep
  Sweep sweep;
  std::optional<Sweep> diagnostic_sweep;
  double epsilon = 0.05;
  product::Resolution resolution;
  std::int64_t count_max_level = 10000;
  double tol_slope = 0.25;
  double count_slope_min = 2.7;
  double lower_min = 0.5;
};

struct Exponents {
  std::vector<int> dimensions{3, 3, 3, 3, 3};
  int k = 1;
  double p = 2.0;
};

Jacobi read_jacobi(FieldReader& r);
KernelNorms read_kernel_norms(FieldReader& r);
Opnorm read_opnorm(FieldReader& r);
Fourier read_fourier(FieldReader& r);
Dimension read_dimension(FieldReader& r);
Shell read_shell(FieldReader& r);
Sharpness read_sharpness(FieldReader& r);
Exponents read_exponents(FieldReader& r);

/// Reads a parameter object and throws SchemaError if anything is wrong.
template <class Reader>
auto read_strict(const nlohmann::json& parameters, Reader reader) {
  std::vector<Diagnostic> diagnostics;
  FieldReader r(parameters, "parameters", diagnostics);
  auto out = reader(r);
  r.reject_unknown();
  if (!diagnostics.empty()) throw SchemaError(std::move(diagnostics));
  return out;
}

}  // namespace sharpflat::cli::params
