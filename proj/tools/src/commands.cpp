#include "sharpflat/cli/commands.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/binomial.hpp>

#include "parameters.hpp"
#include "sharpflat/cross_geometry.hpp"
#include "sharpflat/errors.hpp"
#include "sharpflat/exponent_fit.hpp"
#include "sharpflat/exponent_table.hpp"
#include "sharpflat/extended_precision.hpp"
#include "sharpflat/product_eigenfunctions.hpp"
#include "sharpflat/special_functions.hpp"
#include "sharpflat/torus_analysis.hpp"

namespace sharpflat::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double relative_deviation(double value, double reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

std::string family_label(const special::JacobiParams& p) {
  return "(" + to_string(p.alpha) + "," + to_string(p.beta) + ")";
}

torus::ExponentFit fit(const std::vector<torus::FitPoint>& points) { return torus::fit_exponent(points); }

// P_n^{(alpha,beta)}(cos theta) on the Jacobi-side angle grid for all n <= n_max,
// compared against the explicit half-integer formula.
void jacobi_identities(const params::Jacobi& p, RunResult& result) {
  const bool closed_form = p.family.alpha == HalfInteger::from_twice(1) &&
                           p.family.beta == HalfInteger::from_twice(1);
  const int n_rows = std::max(p.n_max, p.reflection_n_max);
  std::vector<double> closed(n_rows + 1, kNaN);
  std::vector<double> reflection(n_rows + 1, kNaN);
  const double a = p.family.a();
  const double b = p.family.b();

  if (closed_form) {
    std::fill(closed.begin(), closed.begin() + p.n_max + 1, 0.0);
    std::vector<double> seq(p.n_max + 1);
    for (int j = 0; j < p.grid_size; ++j) {
      const double theta = kPi * j / (p.grid_size - 1);
      special::jacobi_sequence<double>(a, b, p.n_max, std::cos(theta), seq);
      for (int n = 0; n <= p.n_max; ++n) {
        closed[n] = std::max(closed[n], relative_deviation(seq[n], special::chebyshev_half_case(n, theta)));
      }
    }
  }
  {
    std::fill(reflection.begin(), reflection.begin() + p.reflection_n_max + 1, 0.0);
    const int m = p.reflection_n_max;
    std::vector<double> left(m + 1);
    std::vector<double> right(m + 1);
    for (int j = 0; j < p.reflection_samples; ++j) {
      const double x = std::cos(kPi * j / (p.reflection_samples - 1));
      special::jacobi_sequence<double>(a, b, m, -x, left);
      special::jacobi_sequence<double>(b, a, m, x, right);
      for (int n = 0; n <= m; ++n) {
        const double expected = (n % 2 == 0 ? 1.0 : -1.0) * right[n];
        reflection[n] = std::max(reflection[n], relative_deviation(left[n], expected));
      }
    }
  }

  result.table = CsvTable({"n", "closed_form_deviation", "reflection_deviation"});
  double worst_closed = 0.0;
  double worst_reflection = 0.0;
  for (int n = 0; n <= n_rows; ++n) {
    CsvTable::Row row;
    row.add(n).add(closed[n]).add(reflection[n]);
    result.table.push(std::move(row));
    if (!std::isnan(closed[n])) worst_closed = std::max(worst_closed, closed[n]);
    if (!std::isnan(reflection[n])) worst_reflection = std::max(worst_reflection, reflection[n]);
  }
  if (closed_form) {
    result.checks.push_back(check_at_most("closed_form_max_deviation", worst_closed, p.tol_closed_form,
                                          "relative deviation |a-b|/max(1,|b|) over the angle grid"));
  }
  result.checks.push_back(check_at_most("reflection_max_deviation", worst_reflection, p.tol_reflection,
                                        "P_n^(a,b)(-x) against (-1)^n P_n^(b,a)(x)"));
}

void jacobi_edge(const params::Jacobi& p, RunResult& result) {
  using special::HighPrecision;
  result.table = CsvTable({"n", "n_tilde", "theta", "direct", "main_term", "relative_error",
                           "relative_error_double"});
  std::vector<double> errors;
  double reference_error = kNaN;
  for (auto degree : p.degrees) {
    const int n = static_cast<int>(degree);
    const auto frame = special::make_frame(p.family, n);
    const HighPrecision theta = HighPrecision(p.scaled_angle) / HighPrecision(frame.n_tilde);
    const HighPrecision direct = special::jacobi_cos_extended<HighPrecision>(p.family, n, theta);
    const HighPrecision main = special::edge_main_term_extended<HighPrecision>(p.family, n, theta);
    const double err = static_cast<double>(abs((main - direct) / direct));
    const double theta_d = static_cast<double>(theta);
    double err_double = kNaN;
    if (special::in_edge_window(n, theta_d, special::EdgeSide::Origin)) {
      const double d = special::jacobi_eval(p.family, n, std::cos(theta_d));
      err_double = std::abs(special::edge_main_term(p.family, frame, theta_d) - d) / std::abs(d);
    }
    CsvTable::Row row;
    row.add(n).add(frame.n_tilde).add(theta_d).add(static_cast<double>(direct)).add(static_cast<double>(main))
        .add(err).add(err_double);
    result.table.push(std::move(row));
    errors.push_back(err);
    if (degree == p.edge_reference_degree) reference_error = err;
  }
  if (std::isnan(reference_error)) reference_error = errors.back();
  int increases = 0;
  for (std::size_t i = 1; i < errors.size(); ++i) increases += errors[i] >= errors[i - 1] ? 1 : 0;
  result.checks.push_back(check_at_most("edge_relative_error_at_reference", reference_error, p.tol_edge,
                                        "evaluated in 50-digit arithmetic"));
  result.checks.push_back(check_at_most("edge_error_increases", increases, 0,
                                        "number of consecutive degrees where the error does not decrease"));
}

void jacobi_interior(const params::Jacobi& p, RunResult& result) {
  result.table = CsvTable({"n", "sup_scaled_residual", "grid_points"});
  std::vector<torus::FitPoint> points;
  const double a = p.family.a();
  const double b = p.family.b();
  for (auto degree : p.degrees) {
    const int n = static_cast<int>(degree);
    const auto frame = special::make_frame(p.family, n);
    const double lo = p.interior_margin / n;
    const double hi = kPi - p.interior_margin / n;
    const int samples = std::max(4096, 8 * n);
    double sup = 0.0;
    for (int j = 0; j < samples; ++j) {
      const double theta = lo + (hi - lo) * j / (samples - 1);
      const double residual = special::jacobi_eval(p.family, n, std::cos(theta)) -
                              special::interior_main_term(p.family, frame, theta);
      const double scale = n * std::sin(theta) * std::pow(std::sin(theta / 2), a + 0.5) *
                           std::pow(std::cos(theta / 2), b + 0.5) * std::sqrt(n * kPi);
      sup = std::max(sup, std::abs(residual) * scale);
    }
    CsvTable::Row row;
    row.add(n).add(sup).add(samples);
    result.table.push(std::move(row));
    points.push_back({static_cast<double>(n), sup});
  }
  result.fits.push_back({"sup_scaled_residual_vs_n", fit(points), 0.0, p.tol_interior_slope, true});
}

}  // namespace

RunResult run_jacobi(const nlohmann::json& parameters) {
  const auto p = params::read_strict(parameters, params::read_jacobi);
  RunResult result;
  result.extra["family"] = family_label(p.family);
  switch (p.mode) {
    case params::Jacobi::Mode::Identities: jacobi_identities(p, result); break;
    case params::Jacobi::Mode::Edge: jacobi_edge(p, result); break;
    case params::Jacobi::Mode::Interior: jacobi_interior(p, result); break;
  }
  return result;
}

RunResult run_kernel_norms(const nlohmann::json& parameters) {
  const auto p = params::read_strict(parameters, params::read_kernel_norms);
  RunResult result;
  result.table = CsvTable({"n", "grid_size", "norm", "envelope_tilde", "ratio"});
  const double delta = p.family.a();
  std::vector<torus::FitPoint> points;
  double ratio_lo = std::numeric_limits<double>::infinity();
  double ratio_hi = 0.0;
  for (auto degree : p.degrees) {
    const int n = static_cast<int>(degree);
    const auto grid = p.grid_size ? torus::PeriodicGrid(*p.grid_size) : torus::PeriodicGrid::for_degree(n);
    const double norm = torus::kernel_lp_norm(p.family, n, p.q, grid);
    const double env = torus::envelope_A_tilde(delta, p.q, n);
    const double ratio = norm / env;
    ratio_lo = std::min(ratio_lo, ratio);
    ratio_hi = std::max(ratio_hi, ratio);
    CsvTable::Row row;
    row.add(n).add(grid.size()).add(norm).add(env).add(ratio);
    result.table.push(std::move(row));
    points.push_back({static_cast<double>(n), norm});
  }
  result.fits.push_back({"norm_vs_n", fit(points), torus::envelope_exponent(delta, p.q), p.tol_slope, true});
  result.checks.push_back(check_at_least("ratio_to_envelope_min", ratio_lo, p.ratio_min));
  result.checks.push_back(check_at_most("ratio_to_envelope_max", ratio_hi, p.ratio_max));
  result.extra["family"] = family_label(p.family);
  result.extra["kink"] = torus::is_kink(delta, p.q);
  return result;
}

RunResult run_opnorm(const nlohmann::json& parameters, std::uint64_t seed) {
  const auto p = params::read_strict(parameters, params::read_opnorm);
  RunResult result;
  result.table = CsvTable({"n", "grid_size", "lower", "upper", "young_upper", "upper_method", "lower_witness",
                           "search_diverged"});
  const double delta = p.family.a();
  const double target = torus::envelope_exponent(delta, p.p / 2.0);
  torus::BracketOptions options;
  options.power_steps = p.power_steps;
  options.refined_candidates = p.refined_candidates;
  options.random_candidates = p.random_candidates;
  const bool dirichlet = p.p == 2.0 && p.family.alpha == HalfInteger::from_twice(1) &&
                         p.family.beta == HalfInteger::from_twice(1);
  std::vector<torus::FitPoint> upper_points;
  std::vector<torus::FitPoint> young_points;
  std::vector<torus::FitPoint> lower_points;
  int violations = 0;
  double closed_form_worst = 0.0;
  std::vector<double> drift_x;
  std::vector<double> drift_y;
  for (auto degree : p.degrees) {
    const int n = static_cast<int>(degree);
    const auto grid = p.grid_size ? torus::PeriodicGrid(*p.grid_size) : torus::PeriodicGrid::for_degree(n);
    // Each degree gets its own stream so results do not depend on the degree list.
    const auto bracket = torus::opnorm_bracket(p.family, n, p.p, grid, seed + static_cast<std::uint64_t>(n), options);
    if (!(bracket.lower <= bracket.upper * (1.0 + 1e-12))) ++violations;
    CsvTable::Row row;
    row.add(n).add(grid.size()).add(bracket.lower).add(bracket.upper).add(bracket.young_upper)
        .add(torus::to_string(bracket.upper_method)).add(bracket.lower_witness).add(bracket.search_diverged);
    result.table.push(std::move(row));
    upper_points.push_back({static_cast<double>(n), bracket.upper});
    young_points.push_back({static_cast<double>(n), bracket.young_upper});
    lower_points.push_back({static_cast<double>(n), bracket.lower});
    if (dirichlet) {
      const double exact = 2.0 * kPi * special::jacobi_binomial(0.5, n) / (n + 1.0);
      closed_form_worst = std::max(closed_form_worst, std::abs(bracket.upper - exact) / exact);
      drift_x.push_back(std::log(std::log(n + 2.0)));
      drift_y.push_back(std::log(bracket.upper * std::sqrt(n + 1.0)));
    }
  }
  result.checks.push_back(check_at_most("lower_above_upper_cells", violations, 0));
  result.fits.push_back({"upper_vs_n", fit(upper_points), target, p.tol_slope, true});
  if (p.p != 2.0) {
    result.fits.push_back({"young_upper_vs_n", fit(young_points), target, p.tol_slope, true});
  }
  result.fits.push_back({"lower_vs_n", fit(lower_points), target, p.tol_slope, false});
  if (dirichlet) {
    result.checks.push_back(check_at_most("dirichlet_closed_form_deviation", closed_form_worst, p.tol_closed_form,
                                          "against 2 pi binom(n+1/2, n)/(n+1)"));
    result.checks.push_back(check_at_most("log_drift_slope", torus::linear_slope(drift_x, drift_y),
                                          p.max_log_drift,
                                          "slope of log(upper (n+1)^(1/2)) against log log(n+2)"));
  }
  result.extra["family"] = family_label(p.family);
  result.extra["seed"] = seed;
  return result;
}

RunResult run_fourier(const nlohmann::json& parameters) {
  const auto p = params::read_strict(parameters, params::read_fourier);
  RunResult result;
  result.table = CsvTable({"n", "grid_size", "terms", "min_coefficient", "max_coefficient", "coefficient_sum"});
  double worst_negative = 0.0;
  double worst_sum = 0.0;
  for (int n = 0; n <= p.n_max; ++n) {
    if (!p.space.admits_degree(n)) continue;
    const int grid = static_cast<int>(std::bit_ceil(static_cast<unsigned>(std::max(8, 2 * n + 2))));
    const auto e = cross::fourier_expansion(p.space, n, grid);
    CsvTable::Row row;
    row.add(n).add(grid).add(e.terms.size()).add(e.most_negative).add(e.largest).add(e.raw_sum);
    result.table.push(std::move(row));
    worst_negative = std::max(worst_negative, -e.most_negative / e.largest);
    worst_sum = std::max(worst_sum, std::abs(e.raw_sum - 1.0));
  }
  result.checks.push_back(check_at_most("negativity_relative_to_max", worst_negative, p.tol_negativity,
                                        "max over n of -min(c)/max(c)"));
  result.checks.push_back(check_at_most("coefficient_sum_deviation", worst_sum, p.tol_sum));
  result.extra["space"] = p.space.name();
  return result;
}

RunResult run_dimension(const nlohmann::json& parameters) {
  const auto p = params::read_strict(parameters, params::read_dimension);
  RunResult result;
  const auto& space = p.space;
  const auto k = cross::rep_dimensions(space, p.n_max);
  const bool sphere = space.kind() == cross::CrossKind::Sphere;
  const int d = space.dimension();
  std::vector<double> derivative(p.n_max + 1, kNaN);
  std::vector<torus::FitPoint> derivative_points;
  for (auto degree : p.derivative_degrees) {
    const int n = static_cast<int>(degree);
    const double ratio = cross::derivative_bound_ratio(space, n, std::max(8192, 64 * (n + 1)));
    if (n <= p.n_max) derivative[n] = ratio;
    derivative_points.push_back({static_cast<double>(n), ratio});
  }

  result.table = CsvTable({"n", "k", "closed_form", "laplace_eigenvalue", "derivative_ratio"});
  double worst = 0.0;
  for (int n = 0; n <= p.n_max; ++n) {
    if (!space.admits_degree(n)) continue;
    double closed = kNaN;
    if (sphere) {
      // Harmonic polynomials of degree n in d + 1 variables.
      closed = boost::math::binomial_coefficient<double>(n + d, d);
      if (n >= 2) closed -= boost::math::binomial_coefficient<double>(n + d - 2, d);
      worst = std::max(worst, std::abs(k[n] - closed) / closed);
    }
    CsvTable::Row row;
    row.add(n).add(k[n]).add(closed).add(cross::laplace_eigenvalue_exact(space, n));
    if (std::isnan(derivative[n])) {
      row.add("");
    } else {
      row.add(derivative[n]);
    }
    result.table.push(std::move(row));
  }
  if (sphere) {
    result.checks.push_back(check_at_most("closed_form_relative_deviation", worst, p.tol_closed_form,
                                          "harmonic polynomial count"));
  }

  if (!p.fit_degrees.empty()) {
    const double half_shift = 0.5 * space.eigenvalue_shift();
    std::vector<torus::FitPoint> shifted;
    std::vector<torus::FitPoint> plain;
    for (auto n : p.fit_degrees) {
      shifted.push_back({static_cast<double>(n) + half_shift, k[n]});
      plain.push_back({static_cast<double>(n) + 1.0, k[n]});
    }
    result.fits.push_back({"k_vs_n_plus_half_shift", fit(shifted), d - 1.0, p.tol_slope, true});
    result.fits.push_back({"k_vs_n_plus_one", fit(plain), d - 1.0, p.tol_slope, false});
  }

  {
    const int m = std::min(p.orthonormality_n_max, p.n_max);
    const auto rule = special::gauss_jacobi_rule(space.params(), m + 1);
    double worst_orth = 0.0;
    for (int n = 0; n <= m; ++n) {
      if (!space.admits_degree(n)) continue;
      const double kn = cross::rep_dimension_closed_form(space, n);
      for (int j = 0; j <= m; ++j) {
        if (!space.admits_degree(j)) continue;
        const double kj = cross::rep_dimension_closed_form(space, j);
        const double inner = cross::spherical_inner_product(space, n, j, rule);
        const double expected = n == j ? 1.0 / kn : 0.0;
        worst_orth = std::max(worst_orth, std::abs(inner - expected) * std::sqrt(kn * kj));
      }
    }
    result.checks.push_back(check_at_most("orthonormality_deviation", worst_orth, p.tol_orthonormality,
                                          "|<Phi_n, Phi_m> - delta/k(n)| sqrt(k(n) k(m)), closed-form k"));
  }
  if (!derivative_points.empty()) {
    result.fits.push_back({"derivative_ratio_vs_n", fit(derivative_points), 0.0, p.tol_derivative_slope, true});
  }
  result.extra["space"] = space.name();
  return result;
}

RunResult run_shell(const nlohmann::json& parameters) {
  const auto p = params::read_strict(parameters, params::read_shell);
  const product::ProductManifold manifold(p.factors);
  const auto shell = product::enumerate_shell(manifold, p.level, p.ordered);
  RunResult result;
  result.table = CsvTable({"index", "members", "eigenvalue_sum"});
  int violations = 0;
  for (std::size_t i = 0; i < shell.members.size(); ++i) {
    const auto& t = shell.members[i];
    std::int64_t sum = 0;
    for (int f = 0; f < manifold.rank(); ++f) sum += cross::laplace_eigenvalue_exact(manifold.factor(f), t[f]);
    if (!product::in_shell(manifold, t, p.level, p.ordered)) ++violations;
    CsvTable::Row row;
    row.add(i).add(format_tuple(t)).add(sum);
    result.table.push(std::move(row));
  }
  result.checks.push_back(check_at_most("membership_violations", violations, 0));
  result.extra["level"] = p.level;
  result.extra["spectral_parameter"] = shell.spectral_parameter();
  result.extra["size"] = shell.size();
  result.extra["ordered"] = p.ordered;
  return result;
}

namespace {

// Nearest nonempty ordered level at or below round(N^2) for N geometric in [min_N, max_N].
std::vector<std::int64_t> sweep_levels(const product::ProductManifold& manifold, const params::Sweep& sweep) {
  std::vector<std::int64_t> levels;
  for (int i = 0; i < sweep.count; ++i) {
    const double big_n = sweep.min_n * std::pow(sweep.max_n / sweep.min_n, static_cast<double>(i) / (sweep.count - 1));
    for (auto level = std::llround(big_n * big_n); level >= 2; --level) {
      if (!product::enumerate_shell(manifold, level, true).empty()) {
        if (levels.empty() || levels.back() != level) levels.push_back(level);
        break;
      }
    }
  }
  return levels;
}

}  // namespace

RunResult run_sharpness(const nlohmann::json& parameters, int threads) {
  const auto p = params::read_strict(parameters, params::read_sharpness);
  const product::ProductManifold manifold(p.factors);
  const int rank = manifold.rank();
  const product::FlatSubmanifold submanifold(rank, p.submanifold_dimension, p.matrix, p.offset, p.box);
  product::SharpnessOptions options;
  options.resolution = p.resolution;
  options.epsilon = p.epsilon;
  options.threads = threads;

  const auto levels = p.levels.empty() ? sweep_levels(manifold, p.sweep) : p.levels;
  const auto report = product::sharpness_report(manifold, submanifold, p.exponents, levels, options);

  RunResult result;
  result.table = CsvTable({"level", "N", "shell_size", "p", "restriction_norm", "l2_norm", "ratio", "envelope",
                           "lower_check"});
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& r : report.rows) {
    CsvTable::Row row;
    row.add(r.level).add(r.spectral_parameter).add(r.shell_size).add(r.p).add(r.restriction_norm).add(r.l2_norm)
        .add(r.ratio).add(r.envelope).add(r.lower_check);
    result.table.push(std::move(row));
    lowest = std::min(lowest, r.lower_check);
  }
  const int k = p.submanifold_dimension;
  const double joint_base = 0.5 * (manifold.dimension() - rank);
  for (std::size_t e = 0; e < report.exponents.size(); ++e) {
    const std::string label = "p=" + format_number(report.exponents[e]);
    if (e < report.fits.size()) {
      result.fits.push_back({"ratio_vs_N " + label, report.fits[e], report.target_slopes[e], p.tol_slope, true});
    }
    std::vector<torus::FitPoint> reduced;
    for (const auto& r : report.rows) {
      if (r.p == report.exponents[e]) {
        reduced.push_back({r.spectral_parameter, r.ratio / std::sqrt(static_cast<double>(r.shell_size))});
      }
    }
    if (reduced.size() >= 3) {
      const double inv_p = std::isfinite(report.exponents[e]) ? 1.0 / report.exponents[e] : 0.0;
      result.fits.push_back({"ratio_over_sqrt_shell_vs_N " + label, fit(reduced), joint_base - k * inv_p,
                             p.tol_slope, false});
    }
  }
  if (report.fits.empty()) {
    result.checks.push_back(check_at_least("swept_levels", static_cast<double>(levels.size()), 3.0,
                                           "slope fits need three nonempty levels"));
  }
  result.checks.push_back(check_at_least("pointwise_lower_min", lowest, p.lower_min,
                                         "inf over the polydisc |theta_i| <= epsilon/N of |f|/f(0)"));
  const auto count = product::count_growth(manifold, p.count_max_level);
  result.checks.push_back(check_at_least("unconstrained_count_slope", count.slope, p.count_slope_min,
                                         "fit over all nonempty levels 2..count_max_level"));
  result.fits.push_back({"unconstrained_count_vs_N", count, rank - 2.0, 0.0, false});

  if (p.diagnostic_sweep) {
    const auto diag_levels = sweep_levels(manifold, *p.diagnostic_sweep);
    const auto diag = product::sharpness_report(manifold, submanifold, p.exponents, diag_levels, options);
    for (std::size_t e = 0; e < diag.fits.size(); ++e) {
      result.fits.push_back({"diagnostic_ratio_vs_N p=" + format_number(diag.exponents[e]), diag.fits[e],
                             diag.target_slopes[e], p.tol_slope, false});
    }
  }
  nlohmann::json lv = nlohmann::json::array();
  for (const auto& r : report.rows) {
    if (lv.empty() || lv.back() != r.level) lv.push_back(r.level);
  }
  result.extra["levels"] = lv;
  result.extra["submanifold_dimension"] = k;
  result.extra["area_density"] = submanifold.area_density();
  return result;
}

RunResult run_exponents(const nlohmann::json& parameters) {
  const auto p = params::read_strict(parameters, params::read_exponents);
  using exponents::to_string;
  const auto lp = exponents::LebesgueExponent::from_double(p.p);
  const auto rec = exponents::exponent_table(p.dimensions, p.k, lp);
  RunResult result;
  result.table = CsvTable({"factor", "dimension", "tau", "tau_value"});
  for (int i = 0; i < rec.rank(); ++i) {
    CsvTable::Row row;
    row.add(i + 1).add(rec.dimensions[i]).add(to_string(rec.tau[i])).add(exponents::to_double(rec.tau[i]));
    result.table.push(std::move(row));
  }
  auto entry = [](const std::optional<exponents::Rational>& q) {
    if (!q) return nlohmann::json("n/a");
    return nlohmann::json{{"exact", to_string(*q)}, {"value", exponents::to_double(*q)}};
  };
  result.extra["p"] = lp.to_string();
  result.extra["k"] = rec.k;
  result.extra["total_dimension"] = rec.total_dimension();
  result.extra["product_exponent"] = entry(rec.product_exponent);
  result.extra["joint_exponent"] = entry(rec.joint_exponent);
  result.extra["no_loss_exponent"] = entry(rec.no_loss_exponent);
  result.extra["baseline_exponent"] = entry(rec.baseline);
  result.extra["improvement_over_baseline"] = entry(rec.improvement());
  result.extra["sharpness_expected"] = rec.sharpness_expected;
  if (rec.dimensions.front() >= 3) {
    const bool equal = rec.product_exponent == rec.no_loss_exponent;
    result.checks.push_back(check_at_most("product_minus_no_loss",
                                          std::abs(exponents::to_double(rec.product_exponent - rec.no_loss_exponent)),
                                          0.0, equal ? "exact rational equality" : "rational values differ"));
  }
  return result;
}

void check_parameters(Command command, FieldReader& r) {
  switch (command) {
    case Command::Jacobi: params::read_jacobi(r); break;
    case Command::KernelNorms: params::read_kernel_norms(r); break;
    case Command::Opnorm: params::read_opnorm(r); break;
    case Command::Fourier: params::read_fourier(r); break;
    case Command::Dimension: params::read_dimension(r); break;
    case Command::Shell: params::read_shell(r); break;
    case Command::Sharpness: params::read_sharpness(r); break;
    case Command::Exponents: params::read_exponents(r); break;
  }
  r.reject_unknown();
}

RunResult execute(const RunConfig& config, const ExecutionOptions& options) {
  switch (config.command) {
    case Command::Jacobi: return run_jacobi(config.parameters);
    case Command::KernelNorms: return run_kernel_norms(config.parameters);
    case Command::Opnorm: return run_opnorm(config.parameters, config.seed.value_or(0));
    case Command::Fourier: return run_fourier(config.parameters);
    case Command::Dimension: return run_dimension(config.parameters);
    case Command::Shell: return run_shell(config.parameters);
    case Command::Sharpness: return run_sharpness(config.parameters, options.threads);
    case Command::Exponents: return run_exponents(config.parameters);
  }
  throw std::logic_error("unhandled command");
}

}  // namespace sharpflat::cli
