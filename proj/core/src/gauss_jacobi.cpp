#include "sharpflat/gauss_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>

namespace sharpflat::special {

namespace {

// Monic recurrence coefficients of the Jacobi weight.
void jacobi_matrix(double a, double b, int order, Eigen::VectorXd& diag, Eigen::VectorXd& sub) {
  diag.resize(order);
  sub.resize(std::max(order - 1, 0));
  const double ab = a + b;
  diag[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < order; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < order; ++k) {
    const double s = 2.0 * k + ab;
    const double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    sub[k - 1] = std::sqrt(num / den);
  }
}

}  // namespace

GaussJacobiRule gauss_jacobi_rule(double alpha, double beta, int order) {
  if (order < 1) throw DomainError("Gauss-Jacobi order must be positive");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("Jacobi parameters must exceed -1");

  GaussJacobiRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.theta.resize(order);
  rule.weight.resize(order);

  if (order == 1) {
    const double x = (beta - alpha) / (alpha + beta + 2.0);
    rule.theta[0] = std::acos(x);
    rule.weight[0] = 1.0;
    return rule;
  }

  Eigen::VectorXd diag;
  Eigen::VectorXd sub;
  jacobi_matrix(alpha, beta, order, diag, sub);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& x = solver.eigenvalues();  // ascending

  // log of 2^{a+b+1} Gamma(Q+a+1) Gamma(Q+b+1) / (Gamma(Q+a+b+1) Q!) minus the
  // log total mass 2^{a+b+1} Gamma(a+1) Gamma(b+1) / Gamma(a+b+2).
  using boost::math::lgamma;
  const double q = order;
  const double log_christoffel = lgamma(q + alpha + 1.0) + lgamma(q + beta + 1.0) -
                                 lgamma(q + alpha + beta + 1.0) - lgamma(q + 1.0) -
                                 (lgamma(alpha + 1.0) + lgamma(beta + 1.0) -
                                  lgamma(alpha + beta + 2.0));
  const double deriv_scale = 0.5 * (q + alpha + beta + 1.0);

  for (int i = 0; i < order; ++i) {
    // Ascending x means descending theta; store theta ascending.
    double t = std::acos(std::clamp(x[order - 1 - i], -1.0, 1.0));
    double dp = 0.0;
    for (int it = 0; it < 8; ++it) {
      const double c = std::cos(t);
      const double p = jacobi_value<double>(alpha, beta, order, c);
      dp = deriv_scale * jacobi_value<double>(alpha + 1.0, beta + 1.0, order - 1, c);
      const double g = -std::sin(t) * dp;  // d/dtheta P_Q(cos theta)
      if (g == 0.0) break;
      const double step = p / g;
      t -= step;
      if (std::abs(step) <= 4e-16 * std::max(t, 1e-300)) break;
    }
    dp = deriv_scale * jacobi_value<double>(alpha + 1.0, beta + 1.0, order - 1, std::cos(t));
    const double s = std::sin(t);
    rule.theta[i] = t;
    rule.weight[i] = std::exp(log_christoffel) / (s * s * dp * dp);
  }
  return rule;
}

GaussJacobiRule gauss_jacobi_rule(const JacobiParams& params, int order) {
  return gauss_jacobi_rule(params.a(), params.b(), order);
}

}  // namespace sharpflat::special
