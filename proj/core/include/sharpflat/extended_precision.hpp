#pragma once

// Extended-precision evaluation of the Jacobi recurrence and the Bessel
// main term. The endpoint asymptotic error decays like n^{-4} at fixed
// n~ theta and drops below double-precision roundoff for n in the hundreds,
// so convergence checks run in 50 significant digits.

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sharpflat/special_functions.hpp"

namespace sharpflat::special {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// P_n^{(alpha,beta)}(cos theta) in Real arithmetic.
template <class Real>
Real jacobi_cos_extended(const JacobiParams& params, int n, const Real& theta) {
  using std::cos;
  return jacobi_value<Real>(Real(params.alpha.twice()) / 2, Real(params.beta.twice()) / 2, n,
                            Real(cos(theta)));
}

/// Same formula as edge_main_term(params, frame, theta, EdgeSide::Origin), in Real arithmetic.
template <class Real>
Real edge_main_term_extended(const JacobiParams& params, int n, const Real& theta) {
  using std::cos;
  using std::exp;
  using std::pow;
  using std::sin;
  using std::sqrt;
  const Real a = Real(params.alpha.twice()) / 2;
  const Real b = Real(params.beta.twice()) / 2;
  const Real n_tilde = Real(n) + (a + b + 1) / 2;
  if (theta == 0) {
    return exp(boost::math::lgamma(Real(n) + a + 1) - boost::math::lgamma(Real(n) + 1) -
               boost::math::lgamma(a + 1));
  }
  const Real gamma_ratio =
      exp(boost::math::lgamma(Real(n) + a + 1) - boost::math::lgamma(Real(n) + 1));
  return pow(sin(theta / 2), -a) * pow(cos(theta / 2), -b) * pow(n_tilde, -a) * gamma_ratio *
         sqrt(theta / sin(theta)) * boost::math::cyl_bessel_j(a, n_tilde * theta);
}

}  // namespace sharpflat::special
