#pragma once

// Jacobi polynomials P_n^{(alpha,beta)} in Szego's normalization
// P_n(1) = binom(n + alpha, n), their angular derivatives, and the two
// classical asymptotic main terms (interior oscillatory regime and the
// Bessel regime near the endpoints).

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "sharpflat/errors.hpp"
#include "sharpflat/half_integer.hpp"

namespace sharpflat::special {

/// The (alpha, beta) pair of a Jacobi family. Catalog instances are
/// half-integers with alpha >= beta >= 0.
struct JacobiParams {
  HalfInteger alpha;
  HalfInteger beta;

  static JacobiParams from_double(double alpha, double beta) {
    return {HalfInteger::from_double(alpha), HalfInteger::from_double(beta)};
  }

  double a() const { return alpha.value(); }
  double b() const { return beta.value(); }

  /// (alpha + shift, beta + shift); the derivative family uses shift = 1.
  JacobiParams shifted(int shift) const {
    return {alpha + HalfInteger::from_int(shift), beta + HalfInteger::from_int(shift)};
  }
  JacobiParams swapped() const { return {beta, alpha}; }

  auto operator<=>(const JacobiParams&) const = default;
};

/// n~ = n + (alpha + beta + 1)/2 and gamma = -(alpha + 1/2) pi / 2.
struct AsymptoticFrame {
  int n = 0;
  double n_tilde = 0.0;
  double gamma_phase = 0.0;
};

AsymptoticFrame make_frame(const JacobiParams& params, int n);

/// Regime-split constant c in the windows c/(n+1) <= theta <= pi - c/(n+1).
inline constexpr double kWindowConstant = 1.0;

// ---------------------------------------------------------------------------
// Generic recurrence kernels. Real may be double, long double or a Boost
// multiprecision float; only + - * / are required.

/// Fills out[0..n_max] with P_0(x) .. P_{n_max}(x) by the forward three-term
/// recurrence. out.size() must be at least n_max + 1.
template <class Real>
void jacobi_sequence(const Real& alpha, const Real& beta, int n_max, const Real& x,
                     std::span<Real> out) {
  if (n_max < 0) return;
  out[0] = Real(1);
  if (n_max == 0) return;
  const Real ab = alpha + beta;
  out[1] = ((ab + Real(2)) * x + (alpha - beta)) / Real(2);
  const Real a2b2 = alpha * alpha - beta * beta;
  for (int k = 2; k <= n_max; ++k) {
    const Real kk(k);
    const Real s = Real(2) * kk + ab;  // 2k + alpha + beta
    const Real denom = Real(2) * kk * (kk + ab) * (s - Real(2));
    const Real c1 = (s - Real(1)) * (s * (s - Real(2)) * x + a2b2);
    const Real c2 = Real(2) * (kk + alpha - Real(1)) * (kk + beta - Real(1)) * s;
    out[k] = (c1 * out[k - 1] - c2 * out[k - 2]) / denom;
  }
}

/// Single value P_n(x) by the same recurrence, O(1) memory.
template <class Real>
Real jacobi_value(const Real& alpha, const Real& beta, int n, const Real& x) {
  if (n == 0) return Real(1);
  const Real ab = alpha + beta;
  Real prev(1);
  Real cur = ((ab + Real(2)) * x + (alpha - beta)) / Real(2);
  const Real a2b2 = alpha * alpha - beta * beta;
  for (int k = 2; k <= n; ++k) {
    const Real kk(k);
    const Real s = Real(2) * kk + ab;
    const Real denom = Real(2) * kk * (kk + ab) * (s - Real(2));
    const Real c1 = (s - Real(1)) * (s * (s - Real(2)) * x + a2b2);
    const Real c2 = Real(2) * (kk + alpha - Real(1)) * (kk + beta - Real(1)) * s;
    const Real next = (c1 * cur - c2 * prev) / denom;
    prev = cur;
    cur = next;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Double-precision API with domain checks.

/// P_n^{(alpha,beta)}(x). Throws DomainError for |x| > 1, n < 0 or a
/// parameter <= -1.
double jacobi_eval(double alpha, double beta, int n, double x);
double jacobi_eval(const JacobiParams& params, int n, double x);

/// P_0(x) .. P_{n_max}(x) in one recurrence pass.
std::vector<double> jacobi_eval_all(const JacobiParams& params, int n_max, double x);
void jacobi_eval_all(double alpha, double beta, int n_max, double x, std::span<double> out);

/// d/dtheta P_n(cos theta) = -(sin theta / 2)(n + alpha + beta + 1) P_{n-1}^{(alpha+1,beta+1)}(cos theta).
double jacobi_theta_derivative(const JacobiParams& params, int n, double theta);

/// binom(n + 1/2, n) sin((n+1) theta) / ((n+1) sin theta), continuous at the
/// zeros of sin theta.
double chebyshev_half_case(int n, double theta);

/// binom(n + alpha, n) = Gamma(n+alpha+1) / (Gamma(n+1) Gamma(alpha+1)), via lgamma.
double jacobi_binomial(double alpha, int n);

/// Large-n main term n^alpha / Gamma(alpha + 1) of jacobi_binomial.
double jacobi_binomial_asymptotic(double alpha, int n);

/// J_order(x) for order >= 0 and x >= 0.
double bessel_j(double order, double x);

/// Leading amplitude pi^{-1/2} n^{-1/2} (sin theta/2)^{-alpha-1/2} (cos theta/2)^{-beta-1/2}
/// of the interior asymptotic expansion.
double interior_envelope(const JacobiParams& params, const AsymptoticFrame& frame, double theta);

/// interior_envelope * cos(n~ theta + gamma). Valid on
/// c/(n+1) <= theta <= pi - c/(n+1); throws DomainError elsewhere or for n = 0.
double interior_main_term(const JacobiParams& params, const AsymptoticFrame& frame, double theta);

enum class EdgeSide {
  Origin,  ///< 0 <= theta <= c/(n+1)
  Antipode ///< pi - c/(n+1) <= theta <= pi, via the reflection P_n(-x) = (-1)^n P_n^{(beta,alpha)}(x)
};

/// Bessel-regime main term
///   (sin theta/2)^{-alpha} (cos theta/2)^{-beta} n~^{-alpha} Gamma(n+alpha+1)/n!
///   (theta / sin theta)^{1/2} J_alpha(n~ theta)
/// and its mirrored form near theta = pi. The endpoint itself returns the
/// limit value (+-)binom(n + alpha, n).
double edge_main_term(const JacobiParams& params, const AsymptoticFrame& frame, double theta,
                      EdgeSide side = EdgeSide::Origin);

bool in_interior_window(int n, double theta);
bool in_edge_window(int n, double theta, EdgeSide side);

}  // namespace sharpflat::special
