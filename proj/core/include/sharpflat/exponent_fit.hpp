#pragma once

#include <span>
#include <vector>

namespace sharpflat::torus {

struct FitPoint {
  double n = 0.0;
  double value = 0.0;
};

/// Least-squares line log(value) = slope * log(n) + intercept.
struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  int sample_count = 0;
  std::vector<double> residuals;  ///< log(value) minus the fitted line, per point
};

/// Needs at least three points with n > 0 strictly increasing and value > 0;
/// throws DomainError otherwise.
ExponentFit fit_exponent(std::span<const FitPoint> points);

/// Least-squares slope of ys against xs (plain linear regression).
double linear_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace sharpflat::torus
