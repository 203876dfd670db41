#include "sharpflat/special_functions.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

namespace sharpflat::special {

namespace {

constexpr double kPi = std::numbers::pi;
// Slack on window boundaries so that theta = c/(n+1) computed in floating
// point is accepted by both sides of the split.
constexpr double kWindowSlack = 1e-12;

void check_params(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("Jacobi parameters must exceed -1 (got alpha=" + std::to_string(alpha) +
                      ", beta=" + std::to_string(beta) + ")");
  }
}

void check_degree(int n) {
  if (n < 0) throw DomainError("degree must be nonnegative (got " + std::to_string(n) + ")");
}

void check_argument(double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError("Jacobi argument must lie in [-1, 1] (got " + std::to_string(x) + ")");
  }
}

double log_gamma_ratio(double alpha, int n) {
  // log(Gamma(n + alpha + 1) / n!)
  return boost::math::lgamma(n + alpha + 1.0) - boost::math::lgamma(n + 1.0);
}

}  // namespace

AsymptoticFrame make_frame(const JacobiParams& params, int n) {
  check_degree(n);
  AsymptoticFrame f;
  f.n = n;
  f.n_tilde = n + (params.a() + params.b() + 1.0) / 2.0;
  f.gamma_phase = -(params.a() + 0.5) * kPi / 2.0;
  return f;
}

double jacobi_eval(double alpha, double beta, int n, double x) {
  check_params(alpha, beta);
  check_degree(n);
  check_argument(x);
  return jacobi_value<double>(alpha, beta, n, x);
}

double jacobi_eval(const JacobiParams& params, int n, double x) {
  return jacobi_eval(params.a(), params.b(), n, x);
}

void jacobi_eval_all(double alpha, double beta, int n_max, double x, std::span<double> out) {
  check_params(alpha, beta);
  check_degree(n_max);
  check_argument(x);
  if (out.size() < static_cast<std::size_t>(n_max) + 1) {
    throw DomainError("output span too short for requested degree");
  }
  jacobi_sequence<double>(alpha, beta, n_max, x, out);
}

std::vector<double> jacobi_eval_all(const JacobiParams& params, int n_max, double x) {
  std::vector<double> out(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  jacobi_eval_all(params.a(), params.b(), n_max, x, out);
  return out;
}

double jacobi_theta_derivative(const JacobiParams& params, int n, double theta) {
  check_degree(n);
  if (n == 0) return 0.0;
  const double a = params.a();
  const double b = params.b();
  check_params(a, b);
  const double s = std::sin(theta);
  if (s == 0.0) return 0.0;
  const double shifted = jacobi_value<double>(a + 1.0, b + 1.0, n - 1, std::cos(theta));
  return -0.5 * s * (n + a + b + 1.0) * shifted;
}

double chebyshev_half_case(int n, double theta) {
  check_degree(n);
  if (!std::isfinite(theta)) throw DomainError("theta must be finite");
  const double scale = jacobi_binomial(0.5, n);
  // Distance to the nearest multiple of pi decides whether the quotient
  // sin((n+1)t)/((n+1) sin t) is evaluated directly or by its Taylor limit.
  const double k = std::nearbyint(theta / kPi);
  const double h = theta - k * kPi;
  const double m = n + 1.0;
  const double sign_at_node = (std::fmod(std::abs(k) * n, 2.0) == 0.0) ? 1.0 : -1.0;
  if (std::abs(h) * m < 1e-4) {
    // sin(m(k pi + h)) / (m sin(k pi + h)) = (-1)^{kn} (1 - (m^2 - 1) h^2 / 6 + O(h^4 m^4))
    return scale * sign_at_node * (1.0 - (m * m - 1.0) * h * h / 6.0);
  }
  return scale * std::sin(m * theta) / (m * std::sin(theta));
}

double jacobi_binomial(double alpha, int n) {
  check_degree(n);
  if (!(alpha > -1.0)) throw DomainError("alpha must exceed -1");
  if (alpha == 0.0) return 1.0;
  return std::exp(log_gamma_ratio(alpha, n) - boost::math::lgamma(alpha + 1.0));
}

double jacobi_binomial_asymptotic(double alpha, int n) {
  check_degree(n);
  if (!(alpha > -1.0)) throw DomainError("alpha must exceed -1");
  return std::pow(static_cast<double>(n), alpha) / boost::math::tgamma(alpha + 1.0);
}

double bessel_j(double order, double x) {
  if (!(x >= 0.0)) throw DomainError("bessel_j requires x >= 0");
  if (!(order >= 0.0)) throw DomainError("bessel_j requires order >= 0");
  return std::cyl_bessel_j(order, x);
}

bool in_interior_window(int n, double theta) {
  const double edge = kWindowConstant / (n + 1.0);
  return theta >= edge * (1.0 - kWindowSlack) && theta <= kPi - edge * (1.0 - kWindowSlack);
}

bool in_edge_window(int n, double theta, EdgeSide side) {
  const double edge = kWindowConstant / (n + 1.0) * (1.0 + kWindowSlack);
  if (side == EdgeSide::Origin) return theta >= 0.0 && theta <= edge;
  return theta <= kPi && kPi - theta <= edge;
}

double interior_envelope(const JacobiParams& params, const AsymptoticFrame& frame, double theta) {
  if (frame.n < 1) throw DomainError("interior asymptotics need n >= 1");
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  return std::pow(s, -params.a() - 0.5) * std::pow(c, -params.b() - 0.5) /
         std::sqrt(kPi * frame.n);
}

double interior_main_term(const JacobiParams& params, const AsymptoticFrame& frame, double theta) {
  if (frame.n < 1) throw DomainError("interior asymptotics need n >= 1");
  if (!in_interior_window(frame.n, theta)) {
    throw DomainError("theta=" + std::to_string(theta) + " outside the interior window for n=" +
                      std::to_string(frame.n));
  }
  return interior_envelope(params, frame, theta) *
         std::cos(frame.n_tilde * theta + frame.gamma_phase);
}

double edge_main_term(const JacobiParams& params, const AsymptoticFrame& frame, double theta,
                      EdgeSide side) {
  const int n = frame.n;
  if (!in_edge_window(n, theta, side)) {
    throw DomainError("theta=" + std::to_string(theta) + " outside the edge window for n=" +
                      std::to_string(n));
  }
  const double a = params.a();
  const double b = params.b();
  // phi is the distance to the endpoint being approximated; near the
  // antipode the roles of (alpha, sin) and (beta, cos) are exchanged.
  const double phi = side == EdgeSide::Origin ? theta : kPi - theta;
  const double order = side == EdgeSide::Origin ? a : b;
  const double parity = (side == EdgeSide::Antipode && n % 2 != 0) ? -1.0 : 1.0;
  if (phi == 0.0) return parity * jacobi_binomial(order, n);

  const double near = std::sin(phi / 2.0);  // sin(theta/2) at the origin, cos(theta/2) at the antipode
  const double far = std::cos(phi / 2.0);
  const double own = std::pow(near, -order);
  const double other = std::pow(far, side == EdgeSide::Origin ? -b : -a);
  const double gamma_ratio = std::exp(log_gamma_ratio(order, n));
  const double shape = std::sqrt(phi / std::sin(phi));
  return parity * own * other * std::pow(frame.n_tilde, -order) * gamma_ratio * shape *
         bessel_j(order, frame.n_tilde * phi);
}

}  // namespace sharpflat::special
