#include <doctest.h>

#include <cmath>
#include <vector>

#include "sharpflat/errors.hpp"
#include "sharpflat/exponent_fit.hpp"
#include "sharpflat/torus_analysis.hpp"

using namespace sharpflat;
using namespace sharpflat::torus;

TEST_CASE("exact power laws") {
  std::vector<FitPoint> square;
  std::vector<FitPoint> flat;
  for (int n = 2; n <= 64; n *= 2) {
    square.push_back({static_cast<double>(n), static_cast<double>(n) * n});
    flat.push_back({static_cast<double>(n), 4.2});
  }
  const auto fit = fit_exponent(square);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(fit.max_residual <= 1e-13);
  CHECK(fit.sample_count == 6);
  CHECK(fit.residuals.size() == 6);
  CHECK(std::abs(fit_exponent(flat).slope) <= 1e-14);
  CHECK(fit_exponent(flat).intercept == doctest::Approx(std::log(4.2)));
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(fit_exponent(std::vector<FitPoint>{{1, 1}, {2, 2}}), DomainError);
  CHECK_THROWS_AS(fit_exponent(std::vector<FitPoint>{{1, 1}, {2, 0}, {3, 1}}), DomainError);
  CHECK_THROWS_AS(fit_exponent(std::vector<FitPoint>{{1, 1}, {3, 2}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(fit_exponent(std::vector<FitPoint>{{0, 1}, {2, 2}, {3, 1}}), DomainError);
}

TEST_CASE("linear slope") {
  const std::vector<double> x = {0, 1, 2, 3};
  const std::vector<double> y = {1, 3, 5, 7};
  CHECK(linear_slope(x, y) == doctest::Approx(2.0));
}

TEST_CASE("kernel L^4 norm slope for (1, 0)") {
  std::vector<FitPoint> pts;
  for (int n = 64; n <= 4096; n *= 2) {
    pts.push_back({static_cast<double>(n),
                   kernel_lp_norm(JacobiParams::from_double(1, 0), n, 4.0, PeriodicGrid::for_degree(n))});
  }
  CHECK(std::abs(fit_exponent(pts).slope - 0.75) <= 0.05);
}
