#pragma once

// Compact rank-one symmetric spaces, their zonal spherical functions
// restricted to a maximal torus, and the associated representation data.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sharpflat/gauss_jacobi.hpp"
#include "sharpflat/special_functions.hpp"

namespace sharpflat::cross {

using special::JacobiParams;

enum class CrossKind { Sphere, ComplexProjective, QuaternionicProjective, OctonionicPlane };

std::string to_string(CrossKind kind);
CrossKind cross_kind_from_string(const std::string& name);

/// A catalogued CROSS. Invariants: alpha = (d-2)/2, 0 <= beta <= alpha and
/// eigenvalue shift a = alpha + beta + 1 is a positive integer.
class CrossSpace {
 public:
  static CrossSpace sphere(int d);
  /// CP^{d/2}; d even, d >= 4.
  static CrossSpace complex_projective(int d);
  /// HP^{d/4}; d divisible by 4, d >= 8.
  static CrossSpace quaternionic_projective(int d);
  /// The Cayley plane, d = 16.
  static CrossSpace octonionic_plane();
  /// RP^d, carried by the sphere's parameters restricted to even degrees.
  static CrossSpace real_projective(int d);

  static CrossSpace make(CrossKind kind, int d);

  CrossKind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  const JacobiParams& params() const { return params_; }
  int eigenvalue_shift() const { return shift_; }
  bool even_degrees_only() const { return even_only_; }
  bool admits_degree(int n) const { return n >= 0 && (!even_only_ || n % 2 == 0); }

  /// "S^3", "CP^2", "HP^2", "OP^2", "RP^3".
  std::string name() const;

  bool operator==(const CrossSpace&) const = default;

 private:
  CrossSpace(CrossKind kind, int d, JacobiParams params, bool even_only);

  CrossKind kind_ = CrossKind::Sphere;
  int dimension_ = 2;
  JacobiParams params_{};
  int shift_ = 1;
  bool even_only_ = false;
};

void to_json(nlohmann::json& j, const CrossSpace& space);
/// Accepts {"kind", "d"} with optional "alpha", "beta", "a" and
/// "even_degrees_only"; optional fields must agree with the catalog.
void from_json(const nlohmann::json& j, CrossSpace& space);

/// Positive expansion Phi_n(theta) = sum_j c_j exp(i m_j theta).
struct FourierTerm {
  int frequency = 0;
  double coefficient = 0.0;
};

struct FourierExpansion {
  std::vector<FourierTerm> terms;  ///< ascending frequency; roundoff-level coefficients pruned
  double most_negative = 0.0;      ///< min over all raw coefficients before pruning
  double largest = 0.0;            ///< max raw coefficient
  double raw_sum = 0.0;            ///< sum of all raw coefficients

  double coefficient_sum() const;
  /// Evaluates the expansion at theta.
  double synthesize(double theta) const;
};

/// Phi_n(theta) = binom(n + alpha, n)^{-1} P_n(cos theta); Phi_n(0) = 1 exactly.
double spherical_eval(const CrossSpace& space, int n, double theta);

/// Phi_0(theta) .. Phi_{n_max}(theta).
std::vector<double> spherical_sequence(const CrossSpace& space, int n_max, double theta);

/// Coefficients of Phi_n on a grid of grid_size equispaced points. Throws
/// AliasingError unless grid_size > 2n.
FourierExpansion fourier_expansion(const CrossSpace& space, int n, int grid_size);

/// k(n) = 1 / integral of Phi_n^2 against the normalized radial measure.
/// Throws ResolutionError when rule.order() < n + 1 (the integrand has degree
/// 2n in cos theta).
double rep_dimension(const CrossSpace& space, int n, const special::GaussJacobiRule& rule);
double rep_dimension(const CrossSpace& space, int n);

/// k(n) = binom(n + alpha, n)^2 h_0 / h_n from the closed-form Jacobi norms h_n.
double rep_dimension_closed_form(const CrossSpace& space, int n);

/// k(0) .. k(n_max) from a single quadrature rule.
std::vector<double> rep_dimensions(const CrossSpace& space, int n_max);

/// Integral of Phi_n Phi_m against the normalized radial measure.
double spherical_inner_product(const CrossSpace& space, int n, int m,
                               const special::GaussJacobiRule& rule);

/// Laplace eigenvalue magnitude n^2 + a n.
double laplace_eigenvalue(const CrossSpace& space, int n);
std::int64_t laplace_eigenvalue_exact(const CrossSpace& space, int n);

/// sup over interior grid points theta_j = 2 pi j / grid_size (j not a
/// multiple of grid_size / 2) of |Phi_n'(theta)| / ((n+1)^2 |sin theta|).
double derivative_bound_ratio(const CrossSpace& space, int n, int grid_size);

/// sup of |Phi_n(theta) - 1| over |theta| <= epsilon / (n + 1), sampled at
/// `samples` equispaced points of [0, epsilon/(n+1)] (Phi_n is even).
double small_angle_closeness(const CrossSpace& space, int n, double epsilon, int samples = 257);

}  // namespace sharpflat::cross
