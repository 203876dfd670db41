#pragma once

#include <vector>

#include "sharpflat/special_functions.hpp"

namespace sharpflat::special {

/// Gauss-Jacobi rule for the probability measure on [0, pi] with density
/// proportional to (sin theta/2)^{2 alpha + 1} (cos theta/2)^{2 beta + 1},
/// i.e. the Jacobi weight (1 - x)^alpha (1 + x)^beta pushed to x = cos theta.
/// Exact for polynomials in cos theta of degree <= 2 * order - 1.
struct GaussJacobiRule {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> theta;   ///< nodes, increasing in (0, pi)
  std::vector<double> weight;  ///< positive, sum to 1

  int order() const { return static_cast<int>(theta.size()); }
  /// Highest degree in cos theta integrated exactly.
  int exactness_degree() const { return 2 * order() - 1; }
};

/// Nodes from the eigenvalues of the Jacobi matrix (Golub-Welsch), polished
/// by Newton steps in the angular variable; weights from the closed-form
/// Christoffel numbers so that tiny endpoint weights keep full relative
/// accuracy.
GaussJacobiRule gauss_jacobi_rule(double alpha, double beta, int order);
GaussJacobiRule gauss_jacobi_rule(const JacobiParams& params, int order);

}  // namespace sharpflat::special
