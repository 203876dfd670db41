#include "sharpflat/exponent_fit.hpp"

#include <cmath>
#include <string>

#include "sharpflat/errors.hpp"

namespace sharpflat::torus {

double linear_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("linear_slope needs two equally long series of length >= 2");
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw DomainError("linear_slope: abscissae are all equal");
  return sxy / sxx;
}

ExponentFit fit_exponent(std::span<const FitPoint> points) {
  if (points.size() < 3) throw DomainError("exponent fit needs at least 3 points");
  std::vector<double> lx;
  std::vector<double> ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    if (!(pt.value > 0.0) || !std::isfinite(pt.value)) {
      throw DomainError("exponent fit: value at n=" + std::to_string(pt.n) +
                        " is not a positive finite number");
    }
    if (!(pt.n > 0.0)) throw DomainError("exponent fit: abscissa must be positive");
    if (i > 0 && !(pt.n > points[i - 1].n)) {
      throw DomainError("exponent fit: abscissae must be strictly increasing");
    }
    lx.push_back(std::log(pt.n));
    ly.push_back(std::log(pt.value));
  }
  ExponentFit fit;
  fit.sample_count = static_cast<int>(points.size());
  fit.slope = linear_slope(lx, ly);
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= lx.size();
  my /= ly.size();
  fit.intercept = my - fit.slope * mx;
  fit.residuals.resize(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    fit.residuals[i] = ly[i] - (fit.slope * lx[i] + fit.intercept);
    fit.max_residual = std::max(fit.max_residual, std::abs(fit.residuals[i]));
  }
  return fit;
}

}  // namespace sharpflat::torus
