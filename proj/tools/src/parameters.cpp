#include "parameters.hpp"

#include <cmath>

#include "sharpflat/errors.hpp"

namespace sharpflat::cli::params {

namespace {

special::JacobiParams read_family(FieldReader& r, double default_alpha) {
  const double alpha = r.number("alpha", default_alpha);
  const double beta = r.number("beta", alpha);
  try {
    const auto family = special::JacobiParams::from_double(alpha, beta);
    if (alpha < -0.5 || beta < -0.5) r.fail("alpha", "alpha and beta must be >= -1/2");
    return family;
  } catch (const DomainError& e) {
    r.fail("alpha", std::string("alpha and beta must be half-integers: ") + e.what());
    return special::JacobiParams::from_double(0.5, 0.5);
  }
}

cross::CrossSpace read_space(FieldReader& r, const std::string& key, const nlohmann::json& fallback) {
  const auto* raw = r.raw(key);
  const nlohmann::json& j = raw != nullptr ? *raw : fallback;
  auto space = cross::CrossSpace::sphere(3);
  if (j.is_null()) {
    r.fail(key, "required field is missing");
    return space;
  }
  try {
    from_json(j, space);
  } catch (const DomainError& e) {
    r.fail(key, e.what());
  }
  return space;
}

cross::CrossSpace space_at(FieldReader& r, const std::string& where, const nlohmann::json& j) {
  auto space = cross::CrossSpace::sphere(3);
  try {
    from_json(j, space);
  } catch (const DomainError& e) {
    r.fail(where, e.what());
  }
  return space;
}

std::vector<cross::CrossSpace> read_factors(FieldReader& r, bool required) {
  const auto* raw = r.raw("factors");
  std::vector<cross::CrossSpace> out;
  if (raw == nullptr) {
    if (required) r.fail("factors", "required field is missing");
    return std::vector<cross::CrossSpace>(5, cross::CrossSpace::sphere(3));
  }
  if (!raw->is_array()) {
    r.fail("factors", "expected an array of spaces");
    return std::vector<cross::CrossSpace>(2, cross::CrossSpace::sphere(3));
  }
  for (std::size_t i = 0; i < raw->size(); ++i) {
    out.push_back(space_at(r, "factors[" + std::to_string(i) + "]", (*raw)[i]));
  }
  if (out.size() < 2) {
    r.fail("factors", "a product needs at least two factors");
    out.assign(2, cross::CrossSpace::sphere(3));
  }
  return out;
}

int positive_int(FieldReader& r, const std::string& key, std::int64_t fallback, std::int64_t lo,
                 std::int64_t hi = 1'000'000'000) {
  const auto v = r.integer(key, fallback);
  if (v < lo || v > hi) {
    r.fail(key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(fallback);
  }
  return static_cast<int>(v);
}

double positive_number(FieldReader& r, const std::string& key, double fallback) {
  const double v = r.number(key, fallback);
  if (!(v > 0.0) || !std::isfinite(v)) {
    r.fail(key, "must be a positive finite number");
    return fallback;
  }
  return v;
}

std::vector<std::int64_t> degree_list(FieldReader& r, const std::string& key, std::vector<std::int64_t> fallback,
                                      std::int64_t min_degree, std::size_t min_count) {
  auto v = r.integer_list(key, std::move(fallback));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < min_degree) {
      r.fail(key, "degrees must be >= " + std::to_string(min_degree));
      break;
    }
    if (i > 0 && v[i] <= v[i - 1]) {
      r.fail(key, "degrees must be strictly increasing");
      break;
    }
  }
  if (v.size() < min_count) r.fail(key, "needs at least " + std::to_string(min_count) + " degrees");
  return v;
}

Sweep read_sweep(FieldReader r) {
  Sweep s;
  s.min_n = positive_number(r, "min_N", s.min_n);
  s.max_n = positive_number(r, "max_N", s.max_n);
  s.count = positive_int(r, "count", s.count, 3, 10000);
  if (!(s.min_n < s.max_n)) r.fail("max_N", "must exceed min_N");
  r.reject_unknown();
  return s;
}

}  // namespace

std::vector<std::int64_t> dyadic(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; n *= 2) out.push_back(n);
  return out;
}

Jacobi read_jacobi(FieldReader& r) {
  Jacobi p;
  const auto mode = r.string("mode", std::string("identities"));
  if (mode == "identities") {
    p.mode = Jacobi::Mode::Identities;
  } else if (mode == "edge") {
    p.mode = Jacobi::Mode::Edge;
  } else if (mode == "interior") {
    p.mode = Jacobi::Mode::Interior;
  } else {
    r.fail("mode", "expected one of identities, edge, interior");
  }
  p.family = read_family(r, p.mode == Jacobi::Mode::Edge ? 1.0 : 0.5);
  if (p.mode == Jacobi::Mode::Edge && !r.has("beta")) {
    p.family = special::JacobiParams{p.family.alpha, HalfInteger::from_int(0)};
  }
  p.n_max = positive_int(r, "n_max", p.n_max, 0, 1 << 20);
  p.grid_size = positive_int(r, "grid_size", p.grid_size, 2, 1 << 24);
  p.reflection_n_max = positive_int(r, "reflection_n_max", p.reflection_n_max, 0, 1 << 20);
  p.reflection_samples = positive_int(r, "reflection_samples", p.reflection_samples, 2, 1 << 24);
  const auto fallback = p.mode == Jacobi::Mode::Edge ? std::vector<std::int64_t>{250, 500, 1000, 2000}
                                                     : dyadic(256, 4096);
  p.degrees = degree_list(r, "degrees", fallback, 1, p.mode == Jacobi::Mode::Identities ? 0 : 3);
  p.scaled_angle = positive_number(r, "scaled_angle", p.scaled_angle);
  p.interior_margin = positive_number(r, "interior_margin", p.interior_margin);
  p.edge_reference_degree = r.integer("edge_reference_degree", p.edge_reference_degree);
  auto t = r.object("tolerances");
  p.tol_closed_form = positive_number(t, "closed_form", p.tol_closed_form);
  p.tol_reflection = positive_number(t, "reflection", p.tol_reflection);
  p.tol_edge = positive_number(t, "edge", p.tol_edge);
  p.tol_interior_slope = positive_number(t, "interior_slope", p.tol_interior_slope);
  t.reject_unknown();
  if (p.mode == Jacobi::Mode::Interior) {
    for (auto n : p.degrees) {
      if (2.0 * p.interior_margin / static_cast<double>(n) >= std::acos(-1.0)) {
        r.fail("degrees", "interior window [margin/n, pi - margin/n] is empty for n = " + std::to_string(n));
        break;
      }
    }
  }
  return p;
}

KernelNorms read_kernel_norms(FieldReader& r) {
  KernelNorms p;
  p.family = read_family(r, 0.5);
  p.q = r.extended_number("q", p.q);
  if (!(p.q > 0.0)) r.fail("q", "must be positive");
  p.degrees = degree_list(r, "degrees", dyadic(64, 4096), 1, 3);
  if (r.has("grid_size")) p.grid_size = positive_int(r, "grid_size", 8192, 8, 1 << 26);
  auto t = r.object("tolerances");
  p.tol_slope = positive_number(t, "slope", p.tol_slope);
  p.ratio_min = positive_number(t, "ratio_min", p.ratio_min);
  p.ratio_max = positive_number(t, "ratio_max", p.ratio_max);
  if (!(p.ratio_min < p.ratio_max)) t.fail("ratio_max", "must exceed ratio_min");
  t.reject_unknown();
  return p;
}

Opnorm read_opnorm(FieldReader& r) {
  Opnorm p;
  p.family = read_family(r, 0.5);
  p.p = r.number("p", std::nullopt);
  if (!(p.p >= 2.0) || !std::isfinite(p.p)) {
    r.fail("p", "the operator norm bracket is defined for finite p >= 2 (the L^{p'} -> L^p estimate holds for all p >= 2)");
    p.p = 2.0;
  }
  p.degrees = degree_list(r, "degrees", dyadic(64, 4096), 1, 3);
  if (r.has("grid_size")) p.grid_size = positive_int(r, "grid_size", 8192, 8, 1 << 26);
  p.power_steps = positive_int(r, "power_steps", p.power_steps, 0, 100000);
  p.refined_candidates = positive_int(r, "refined_candidates", p.refined_candidates, 0, 1000);
  p.random_candidates = positive_int(r, "random_candidates", p.random_candidates, 0, 1000);
  auto t = r.object("tolerances");
  p.tol_slope = positive_number(t, "slope", p.p == 2.0 ? 0.03 : 0.05);
  p.tol_closed_form = positive_number(t, "closed_form", p.tol_closed_form);
  p.max_log_drift = positive_number(t, "log_drift", p.max_log_drift);
  t.reject_unknown();
  return p;
}

Fourier read_fourier(FieldReader& r) {
  Fourier p;
  p.space = read_space(r, "space", nlohmann::json(nullptr));
  p.n_max = positive_int(r, "n_max", p.n_max, 0, 100000);
  auto t = r.object("tolerances");
  p.tol_negativity = positive_number(t, "negativity", p.tol_negativity);
  p.tol_sum = positive_number(t, "sum", p.tol_sum);
  t.reject_unknown();
  return p;
}

Dimension read_dimension(FieldReader& r) {
  Dimension p;
  p.space = read_space(r, "space", nlohmann::json(nullptr));
  p.n_max = positive_int(r, "n_max", p.n_max, 0, 100000);
  std::vector<std::int64_t> fit_default;
  for (auto n : dyadic(16, 512)) {
    if (n <= p.n_max && p.space.admits_degree(static_cast<int>(n))) fit_default.push_back(n);
  }
  if (fit_default.size() < 3) fit_default.clear();
  p.fit_degrees = degree_list(r, "fit_degrees", fit_default, 1, 0);
  for (auto n : p.fit_degrees) {
    if (n > p.n_max || !p.space.admits_degree(static_cast<int>(n))) {
      r.fail("fit_degrees", "degree " + std::to_string(n) + " is outside n_max or not admitted by the space");
      break;
    }
  }
  if (!p.fit_degrees.empty() && p.fit_degrees.size() < 3) r.fail("fit_degrees", "needs at least 3 degrees");
  p.derivative_degrees = degree_list(r, "derivative_degrees", {}, 1, 0);
  if (!p.derivative_degrees.empty() && p.derivative_degrees.size() < 3) {
    r.fail("derivative_degrees", "needs at least 3 degrees");
  }
  p.orthonormality_n_max = positive_int(r, "orthonormality_n_max", p.orthonormality_n_max, 0, 4096);
  auto t = r.object("tolerances");
  p.tol_closed_form = positive_number(t, "closed_form", p.tol_closed_form);
  p.tol_slope = positive_number(t, "slope", p.tol_slope);
  p.tol_orthonormality = positive_number(t, "orthonormality", p.tol_orthonormality);
  p.tol_derivative_slope = positive_number(t, "derivative_slope", p.tol_derivative_slope);
  t.reject_unknown();
  return p;
}

Shell read_shell(FieldReader& r) {
  Shell p;
  p.factors = read_factors(r, true);
  p.level = r.integer("level", std::nullopt);
  if (p.level < 0) r.fail("level", "must be nonnegative");
  if (p.level > 100'000'000) r.fail("level", "must be at most 1e8");
  p.ordered = r.boolean("ordered", true);
  return p;
}

Sharpness read_sharpness(FieldReader& r) {
  Sharpness p;
  p.factors = read_factors(r, false);
  const int rank = static_cast<int>(p.factors.size());
  auto s = r.object("submanifold");
  const auto* matrix = s.raw("matrix");
  if (matrix == nullptr) {
    s.fail("matrix", "required field is missing");
  } else if (!matrix->is_array() || static_cast<int>(matrix->size()) != rank) {
    s.fail("matrix", "expected " + std::to_string(rank) + " rows, one per factor");
  } else {
    int cols = -1;
    for (const auto& row : *matrix) {
      if (!row.is_array() || (cols >= 0 && static_cast<int>(row.size()) != cols)) {
        s.fail("matrix", "rows must be arrays of equal length");
        cols = -1;
        break;
      }
      cols = static_cast<int>(row.size());
      for (const auto& x : row) {
        if (!x.is_number()) {
          s.fail("matrix", "entries must be numbers");
          break;
        }
        p.matrix.push_back(x.get<double>());
      }
    }
    if (cols > rank) s.fail("matrix", "more columns than factors");
    p.submanifold_dimension = std::max(cols, 0);
  }
  const int k = p.submanifold_dimension;
  p.offset = s.number_list("offset", std::vector<double>(rank, 0.0));
  if (static_cast<int>(p.offset.size()) != rank) s.fail("offset", "needs one entry per factor");
  const auto* box = s.raw("box");
  if (box == nullptr) {
    p.box.assign(k, {-0.5, 0.5});
  } else if (!box->is_array() || static_cast<int>(box->size()) != k) {
    s.fail("box", "needs one [lo, hi] interval per column");
  } else {
    for (const auto& iv : *box) {
      if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number() ||
          !(iv[0].get<double>() < iv[1].get<double>())) {
        s.fail("box", "intervals must be [lo, hi] with lo < hi");
        break;
      }
      p.box.emplace_back(iv[0].get<double>(), iv[1].get<double>());
    }
  }
  s.reject_unknown();
  if (static_cast<int>(p.matrix.size()) == rank * k && static_cast<int>(p.offset.size()) == rank &&
      static_cast<int>(p.box.size()) == k) {
    try {
      product::FlatSubmanifold(rank, k, p.matrix, p.offset, p.box);
    } catch (const DomainError& e) {
      s.fail("matrix", e.what());
    }
  }

  p.exponents = r.number_list("exponents", p.exponents);
  if (p.exponents.empty()) r.fail("exponents", "needs at least one exponent");
  for (double e : p.exponents) {
    if (!(e >= 2.0)) {
      r.fail("exponents", "restriction norms are measured for p >= 2 or p = inf");
      break;
    }
  }
  p.levels = r.integer_list("levels", std::vector<std::int64_t>{});
  for (auto l : p.levels) {
    if (l < 2 || l > 100'000'000) {
      r.fail("levels", "levels must lie in [2, 1e8]");
      break;
    }
  }
  p.sweep = read_sweep(r.object("sweep"));
  if (r.has("diagnostic_sweep")) p.diagnostic_sweep = read_sweep(r.object("diagnostic_sweep"));
  p.epsilon = positive_number(r, "epsilon", p.epsilon);
  auto res = r.object("resolution");
  p.resolution.points_per_wavelength = positive_number(res, "points_per_wavelength", 8.0);
  p.resolution.min_nodes_per_axis = positive_int(res, "min_nodes_per_axis", 16, 1, 1 << 20);
  res.reject_unknown();
  p.count_max_level = r.integer("count_max_level", p.count_max_level);
  if (p.count_max_level < 2 || p.count_max_level > 10'000'000) {
    r.fail("count_max_level", "must lie in [2, 1e7]");
  }
  auto t = r.object("tolerances");
  p.tol_slope = positive_number(t, "slope", p.tol_slope);
  p.count_slope_min = positive_number(t, "count_slope_min", p.count_slope_min);
  p.lower_min = positive_number(t, "lower_min", p.lower_min);
  t.reject_unknown();
  return p;
}

Exponents read_exponents(FieldReader& r) {
  Exponents p;
  const auto dims = r.integer_list("dimensions", std::vector<std::int64_t>{3, 3, 3, 3, 3});
  p.dimensions.clear();
  for (auto d : dims) {
    if (d < 2 || d > 1000) {
      r.fail("dimensions", "factor dimensions must lie in [2, 1000]");
      break;
    }
    p.dimensions.push_back(static_cast<int>(d));
  }
  if (dims.size() < 2) r.fail("dimensions", "a product needs at least two factors");
  p.k = positive_int(r, "k", 1, 0, static_cast<std::int64_t>(std::max<std::size_t>(dims.size(), 0)));
  p.p = r.extended_number("p", 2.0);
  if (!(p.p >= 2.0)) r.fail("p", "exponents are tabulated for p >= 2");
  return p;
}

}  // namespace sharpflat::cli::params
