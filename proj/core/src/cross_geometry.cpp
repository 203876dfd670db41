#include "sharpflat/cross_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <nlohmann/json.hpp>

#include "sharpflat/detail/fft.hpp"

namespace sharpflat::cross {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPruneRelative = 1e-13;

void check_degree(const CrossSpace& space, int n) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (!space.admits_degree(n)) {
    throw DomainError(space.name() + " carries spherical functions of even degree only");
  }
}

}  // namespace

std::string to_string(CrossKind kind) {
  switch (kind) {
    case CrossKind::Sphere: return "sphere";
    case CrossKind::ComplexProjective: return "complex_projective";
    case CrossKind::QuaternionicProjective: return "quaternionic_projective";
    case CrossKind::OctonionicPlane: return "octonionic_plane";
  }
  return "unknown";
}

CrossKind cross_kind_from_string(const std::string& name) {
  if (name == "sphere") return CrossKind::Sphere;
  if (name == "complex_projective") return CrossKind::ComplexProjective;
  if (name == "quaternionic_projective") return CrossKind::QuaternionicProjective;
  if (name == "octonionic_plane") return CrossKind::OctonionicPlane;
  throw DomainError("unknown CROSS kind '" + name + "'");
}

CrossSpace::CrossSpace(CrossKind kind, int d, JacobiParams params, bool even_only)
    : kind_(kind), dimension_(d), params_(params), even_only_(even_only) {
  const HalfInteger shift = params.alpha + params.beta + HalfInteger::from_int(1);
  shift_ = shift.twice() / 2;
}

CrossSpace CrossSpace::sphere(int d) {
  if (d < 2) throw DomainError("sphere dimension must be at least 2");
  const HalfInteger alpha = HalfInteger::from_twice(d - 2);
  return CrossSpace(CrossKind::Sphere, d, {alpha, alpha}, false);
}

CrossSpace CrossSpace::real_projective(int d) {
  CrossSpace s = sphere(d);
  s.even_only_ = true;
  return s;
}

CrossSpace CrossSpace::complex_projective(int d) {
  if (d < 4 || d % 2 != 0) throw DomainError("CP^{d/2} needs even d >= 4");
  return CrossSpace(CrossKind::ComplexProjective, d,
                    {HalfInteger::from_twice(d - 2), HalfInteger::from_int(0)}, false);
}

CrossSpace CrossSpace::quaternionic_projective(int d) {
  if (d < 8 || d % 4 != 0) throw DomainError("HP^{d/4} needs d divisible by 4 and d >= 8");
  return CrossSpace(CrossKind::QuaternionicProjective, d,
                    {HalfInteger::from_twice(d - 2), HalfInteger::from_int(1)}, false);
}

CrossSpace CrossSpace::octonionic_plane() {
  return CrossSpace(CrossKind::OctonionicPlane, 16,
                    {HalfInteger::from_int(7), HalfInteger::from_int(3)}, false);
}

CrossSpace CrossSpace::make(CrossKind kind, int d) {
  switch (kind) {
    case CrossKind::Sphere: return sphere(d);
    case CrossKind::ComplexProjective: return complex_projective(d);
    case CrossKind::QuaternionicProjective: return quaternionic_projective(d);
    case CrossKind::OctonionicPlane:
      if (d != 16) throw DomainError("the octonionic plane has dimension 16");
      return octonionic_plane();
  }
  throw DomainError("unknown CROSS kind");
}

std::string CrossSpace::name() const {
  switch (kind_) {
    case CrossKind::Sphere: return (even_only_ ? "RP^" : "S^") + std::to_string(dimension_);
    case CrossKind::ComplexProjective: return "CP^" + std::to_string(dimension_ / 2);
    case CrossKind::QuaternionicProjective: return "HP^" + std::to_string(dimension_ / 4);
    case CrossKind::OctonionicPlane: return "OP^2";
  }
  return "?";
}

void to_json(nlohmann::json& j, const CrossSpace& space) {
  j = nlohmann::json{{"kind", to_string(space.kind())},
                     {"d", space.dimension()},
                     {"alpha", space.params().a()},
                     {"beta", space.params().b()},
                     {"a", space.eigenvalue_shift()}};
  if (space.even_degrees_only()) j["even_degrees_only"] = true;
}

void from_json(const nlohmann::json& j, CrossSpace& space) {
  if (!j.is_object()) throw DomainError("space must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw DomainError("space.kind: missing or not a string");
  }
  const CrossKind kind = cross_kind_from_string(j.at("kind").get<std::string>());
  int d = 16;
  if (j.contains("d")) {
    if (!j.at("d").is_number_integer()) throw DomainError("space.d: must be an integer");
    d = j.at("d").get<int>();
  } else if (kind != CrossKind::OctonionicPlane) {
    throw DomainError("space.d: missing");
  }
  const bool even_only = j.value("even_degrees_only", false);
  if (even_only && kind != CrossKind::Sphere) {
    throw DomainError("space.even_degrees_only applies to spheres only");
  }
  CrossSpace s = even_only ? CrossSpace::real_projective(d) : CrossSpace::make(kind, d);
  auto expect = [&](const char* key, double value) {
    if (j.contains(key)) {
      if (!j.at(key).is_number() || j.at(key).get<double>() != value) {
        throw DomainError(std::string("space.") + key + ": does not match the catalog value " +
                          std::to_string(value) + " for " + s.name());
      }
    }
  };
  expect("alpha", s.params().a());
  expect("beta", s.params().b());
  expect("a", s.eigenvalue_shift());
  space = s;
}

double FourierExpansion::coefficient_sum() const {
  double total = 0.0;
  for (const auto& t : terms) total += t.coefficient;
  return total;
}

double FourierExpansion::synthesize(double theta) const {
  // Coefficients are symmetric in the frequency, so the sum is real.
  double total = 0.0;
  for (const auto& t : terms) total += t.coefficient * std::cos(t.frequency * theta);
  return total;
}

double spherical_eval(const CrossSpace& space, int n, double theta) {
  check_degree(space, n);
  const double x = std::cos(theta);
  if (n == 0 || x == 1.0) return 1.0;
  const auto& p = space.params();
  return special::jacobi_value<double>(p.a(), p.b(), n, x) / special::jacobi_binomial(p.a(), n);
}

std::vector<double> spherical_sequence(const CrossSpace& space, int n_max, double theta) {
  if (n_max < 0) throw DomainError("degree must be nonnegative");
  const auto& p = space.params();
  std::vector<double> out(n_max + 1);
  const double x = std::cos(theta);
  special::jacobi_sequence<double>(p.a(), p.b(), n_max, x, out);
  for (int n = 0; n <= n_max; ++n) {
    out[n] = x == 1.0 ? 1.0 : out[n] / special::jacobi_binomial(p.a(), n);
  }
  return out;
}

FourierExpansion fourier_expansion(const CrossSpace& space, int n, int grid_size) {
  check_degree(space, n);
  if (grid_size <= 2 * n) {
    throw AliasingError("grid of " + std::to_string(grid_size) +
                        " points cannot resolve frequencies up to " + std::to_string(n) +
                        " (need more than " + std::to_string(2 * n) + ")");
  }
  std::vector<double> samples(grid_size);
  for (int j = 0; j < grid_size; ++j) {
    samples[j] = spherical_eval(space, n, 2.0 * kPi * j / grid_size);
  }
  const auto spectrum = detail::real_dft(samples);

  std::vector<double> raw(n + 1);
  for (int m = 0; m <= n; ++m) raw[m] = spectrum[m].real() / grid_size;

  FourierExpansion e;
  e.largest = *std::max_element(raw.begin(), raw.end());
  e.most_negative = *std::min_element(raw.begin(), raw.end());
  e.raw_sum = raw[0];
  for (int m = 1; m <= n; ++m) e.raw_sum += 2.0 * raw[m];
  const double cutoff = kPruneRelative * e.largest;
  for (int m = -n; m <= n; ++m) {
    const double c = raw[std::abs(m)];
    if (std::abs(c) > cutoff) e.terms.push_back({m, c});
  }
  return e;
}

double rep_dimension(const CrossSpace& space, int n, const special::GaussJacobiRule& rule) {
  return 1.0 / spherical_inner_product(space, n, n, rule);
}

double rep_dimension(const CrossSpace& space, int n) {
  check_degree(space, n);
  return rep_dimension(space, n, special::gauss_jacobi_rule(space.params(), n + 1));
}

double rep_dimension_closed_form(const CrossSpace& space, int n) {
  check_degree(space, n);
  const double a = space.params().a();
  const double b = space.params().b();
  using boost::math::lgamma;
  const double log_h0 = lgamma(a + 1) + lgamma(b + 1) - lgamma(a + b + 2);
  const double log_hn = lgamma(n + a + 1) + lgamma(n + b + 1) - std::log(2.0 * n + a + b + 1) -
                        lgamma(n + a + b + 1) - lgamma(n + 1.0);
  const double log_c = lgamma(n + a + 1) - lgamma(n + 1.0) - lgamma(a + 1);
  return std::exp(2 * log_c + log_h0 - log_hn);
}

std::vector<double> rep_dimensions(const CrossSpace& space, int n_max) {
  if (n_max < 0) throw DomainError("degree must be nonnegative");
  const auto& p = space.params();
  const auto rule = special::gauss_jacobi_rule(p, n_max + 1);
  std::vector<double> acc(n_max + 1, 0.0);
  std::vector<double> seq(n_max + 1);
  for (int i = 0; i < rule.order(); ++i) {
    special::jacobi_sequence<double>(p.a(), p.b(), n_max, std::cos(rule.theta[i]), seq);
    for (int n = 0; n <= n_max; ++n) acc[n] += rule.weight[i] * seq[n] * seq[n];
  }
  std::vector<double> k(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double c = special::jacobi_binomial(p.a(), n);
    k[n] = c * c / acc[n];
  }
  return k;
}

double spherical_inner_product(const CrossSpace& space, int n, int m,
                               const special::GaussJacobiRule& rule) {
  check_degree(space, n);
  check_degree(space, m);
  const auto& p = space.params();
  if (rule.alpha != p.a() || rule.beta != p.b()) {
    throw DomainError("quadrature rule built for different Jacobi parameters");
  }
  if (rule.exactness_degree() < n + m) {
    throw ResolutionError("Gauss-Jacobi order " + std::to_string(rule.order()) +
                          " integrates degree <= " + std::to_string(rule.exactness_degree()) +
                          " but the integrand has degree " + std::to_string(n + m));
  }
  double total = 0.0;
  for (int i = 0; i < rule.order(); ++i) {
    total += rule.weight[i] * spherical_eval(space, n, rule.theta[i]) *
             spherical_eval(space, m, rule.theta[i]);
  }
  return total;
}

double laplace_eigenvalue(const CrossSpace& space, int n) {
  return static_cast<double>(laplace_eigenvalue_exact(space, n));
}

std::int64_t laplace_eigenvalue_exact(const CrossSpace& space, int n) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  const std::int64_t nn = n;
  return nn * nn + space.eigenvalue_shift() * nn;
}

double derivative_bound_ratio(const CrossSpace& space, int n, int grid_size) {
  check_degree(space, n);
  if (n < 1) throw DomainError("derivative bound needs n >= 1");
  if (grid_size < 8) throw DomainError("grid must have at least 8 points");
  const auto& p = space.params();
  const double inv_binom = 1.0 / special::jacobi_binomial(p.a(), n);
  const double scale = (n + 1.0) * (n + 1.0);
  double sup = 0.0;
  // |Phi_n'| / |sin| is even about 0 and pi; the half period covers the circle.
  for (int j = 1; 2 * j < grid_size; ++j) {
    const double theta = 2.0 * kPi * j / grid_size;
    const double deriv = special::jacobi_theta_derivative(p, n, theta) * inv_binom;
    sup = std::max(sup, std::abs(deriv) / (scale * std::abs(std::sin(theta))));
  }
  return sup;
}

double small_angle_closeness(const CrossSpace& space, int n, double epsilon, int samples) {
  check_degree(space, n);
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  if (samples < 2) throw DomainError("need at least two samples");
  const double radius = epsilon / (n + 1.0);
  double sup = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double theta = radius * j / (samples - 1);
    sup = std::max(sup, std::abs(spherical_eval(space, n, theta) - 1.0));
  }
  return sup;
}

}  // namespace sharpflat::cross
