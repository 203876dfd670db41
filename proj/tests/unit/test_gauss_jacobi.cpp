#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "sharpflat/gauss_jacobi.hpp"

using namespace sharpflat::special;

TEST_CASE("two-point Gauss-Legendre") {
  const auto rule = gauss_jacobi_rule(0.0, 0.0, 2);
  REQUIRE(rule.order() == 2);
  CHECK(std::cos(rule.theta[0]) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(std::cos(rule.theta[1]) == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(rule.weight[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rule.weight[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("rule shape") {
  for (auto [a, b] : {std::pair{0.5, 0.5}, {1.0, 0.0}, {7.0, 3.0}, {3.0, 1.0}}) {
    const auto rule = gauss_jacobi_rule(a, b, 65);
    CHECK(rule.exactness_degree() == 129);
    CHECK(std::accumulate(rule.weight.begin(), rule.weight.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    for (int i = 0; i < rule.order(); ++i) {
      CHECK(rule.weight[i] > 0.0);
      CHECK(rule.theta[i] > 0.0);
      CHECK(rule.theta[i] < std::acos(-1.0));
      if (i > 0) CHECK(rule.theta[i] > rule.theta[i - 1]);
    }
  }
}

TEST_CASE("moments are exact up to degree 2Q - 1") {
  for (auto [a, b] : {std::pair{0.5, 0.5}, {1.0, 0.0}, {2.0, 1.0}, {7.0, 3.0}}) {
    const int q = 12;
    const auto rule = gauss_jacobi_rule(a, b, q);
    for (int j = 0; j <= 2 * q - 1; ++j) {
      double sum = 0.0;
      for (int i = 0; i < q; ++i) sum += rule.weight[i] * std::pow(std::cos(rule.theta[i]), j);
      CHECK(sum == doctest::Approx(oracle::jacobi_moment(a, b, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("invalid rules") {
  CHECK_THROWS(gauss_jacobi_rule(0.5, 0.5, 0));
  CHECK_THROWS(gauss_jacobi_rule(-1.0, 0.5, 4));
}
