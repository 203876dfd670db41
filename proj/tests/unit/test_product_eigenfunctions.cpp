#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sharpflat/cross_geometry.hpp"
#include "sharpflat/product_eigenfunctions.hpp"

using namespace sharpflat;
using namespace sharpflat::product;
using std::numbers::pi;

namespace {

ProductManifold s3_power(int r) { return ProductManifold(std::vector<CrossSpace>(r, CrossSpace::sphere(3))); }

double naive_eval(const ProductManifold& m, const LatticeShell& shell, const std::vector<double>& theta) {
  double sum = 0.0;
  for (const auto& t : shell.members) {
    double term = 1.0;
    for (int i = 0; i < m.rank(); ++i) {
      term *= std::sqrt(cross::rep_dimension(m.factor(i), t[i])) * cross::spherical_eval(m.factor(i), t[i], theta[i]);
    }
    sum += term;
  }
  return sum;
}

LatticeShell shell_of_size(const ProductManifold& m, std::size_t size, std::int64_t start) {
  for (std::int64_t level = start;; ++level) {
    auto shell = enumerate_shell(m, level, true);
    if (shell.size() == size) return shell;
  }
}

FlatSubmanifold diagonal_circle(double lo, double hi) {
  return FlatSubmanifold(5, 1, std::vector<double>(5, 1.0 / std::sqrt(5.0)), std::vector<double>(5, 0.0), {{lo, hi}});
}

}  // namespace

TEST_CASE("extremizer values") {
  const auto m = s3_power(5);
  const auto single = enumerate_shell(m, 40, true);
  REQUIRE(single.size() == 1);
  const Extremizer f(m, single);
  CHECK(f.value_at_origin() == doctest::Approx(243.0).epsilon(1e-12));
  CHECK(extremizer_eval(m, single, std::vector<double>(5, 0.0)) == doctest::Approx(243.0).epsilon(1e-12));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> theta(5);
    for (double& t : theta) t = angle(rng);
    double product = 1.0;
    for (double t : theta) product *= 3.0 * cross::spherical_eval(CrossSpace::sphere(3), 2, t);
    CHECK(f.evaluate(theta) == doctest::Approx(product).epsilon(1e-12));
  }

  const ProductManifold mixed({CrossSpace::sphere(3), CrossSpace::complex_projective(4), CrossSpace::sphere(4),
                               CrossSpace::quaternionic_projective(8), CrossSpace::sphere(3)});
  for (std::int64_t level : {1600, 2209, 3000}) {
    for (bool ordered : {true, false}) {
      const auto shell = enumerate_shell(ordered ? m : mixed, level / (ordered ? 1 : 10), ordered);
      if (shell.empty()) continue;
      const auto& man = ordered ? m : mixed;
      const Extremizer g(man, shell);
      CHECK(g.value_at_origin() == doctest::Approx(naive_eval(man, shell, std::vector<double>(5, 0.0))).epsilon(1e-12));
      auto ws = g.make_workspace();
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> theta(5);
        for (double& t : theta) t = angle(rng);
        const double expect = naive_eval(man, shell, theta);
        CHECK(std::abs(g.evaluate(theta, ws) - expect) <= 1e-10 * g.value_at_origin());
      }
    }
  }
}

TEST_CASE("L^2 norms") {
  const auto m = s3_power(5);
  const auto single = enumerate_shell(m, 40, true);
  CHECK(extremizer_l2_norm(single) == 1.0);
  CHECK(std::abs(extremizer_l2_norm_quadrature(m, single) - 1.0) <= 1e-6);

  const auto four = shell_of_size(m, 4, 100);
  CHECK(extremizer_l2_norm(four) == 2.0);
  CHECK(extremizer_l2_norm_quadrature(m, four) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(Extremizer(m, four).l2_norm() == 2.0);
}

TEST_CASE("flat submanifolds") {
  const FlatSubmanifold s(5, 2, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0}, std::vector<double>(5, 0.0), {{0, 2}, {-1, 0.5}});
  CHECK(s.area_density() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(s.area() == doctest::Approx(std::sqrt(3.0) * 3.0).epsilon(1e-14));
  std::vector<double> theta(5);
  const double u[] = {0.25, -0.5};
  s.map(u, theta);
  CHECK(theta[0] == 0.25);
  CHECK(theta[1] == doctest::Approx(-0.25));
  CHECK(theta[2] == -0.5);

  CHECK_THROWS_AS(FlatSubmanifold(3, 2, {1, 1, 1, 1, 0, 0}, {0, 0, 0}, {{0, 1}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(FlatSubmanifold(3, 1, {1, 0, 0}, {0, 0, 0}, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(FlatSubmanifold(3, 1, {1, 0}, {0, 0, 0}, {{0, 1}}), DomainError);
}

TEST_CASE("restriction norms") {
  const auto m = s3_power(5);
  const auto origin_shell = enumerate_shell(m, 0, true);
  REQUIRE(origin_shell.size() == 1);
  const double length = 2.5;
  const FlatSubmanifold segment(5, 1, {1, 0, 0, 0, 0}, std::vector<double>(5, 0.3), {{0, length}});
  for (double p : {2.0, 3.0, 6.0}) {
    CHECK(restriction_lp_norm(m, origin_shell, segment, p) == doctest::Approx(std::pow(length, 1 / p)).epsilon(1e-13));
  }
  CHECK(restriction_lp_norm(m, origin_shell, segment, std::numeric_limits<double>::infinity()) ==
        doctest::Approx(1.0));

  const auto shell = enumerate_shell(m, 1600, true);
  const Extremizer f(m, shell);
  const auto point = FlatSubmanifold::point(std::vector<double>(5, 0.0));
  CHECK(restriction_lp_norm(m, shell, point, 4.0) == doctest::Approx(f.value_at_origin()).epsilon(1e-14));

  // Diagonal circle through level 40: f(u A) = 243 Phi_2(u / sqrt 5)^5, integrated on the Fourier side.
  const auto single = enumerate_shell(m, 40, true);
  const auto phi = cross::fourier_expansion(CrossSpace::sphere(3), 2, 16);
  std::vector<double> coeff = {1.0};
  int lowest = 0;
  for (int power = 0; power < 5; ++power) {
    std::vector<double> next(coeff.size() + 4, 0.0);
    for (std::size_t a = 0; a < coeff.size(); ++a) {
      for (const auto& t : phi.terms) next[a + t.frequency + 2] += coeff[a] * t.coefficient;
    }
    coeff = next;
    lowest -= 2;
  }
  double energy = 0.0;
  for (double c : coeff) energy += 243.0 * 243.0 * c * c;
  const double oracle_norm = std::sqrt(std::sqrt(5.0) * 2 * pi * energy);
  const auto circle = diagonal_circle(0.0, 2 * pi * std::sqrt(5.0));
  CHECK(restriction_lp_norm(m, single, circle, 2.0) == doctest::Approx(oracle_norm).epsilon(1e-10));

  const double exponents[] = {2.0, 6.0};
  const Extremizer g(m, enumerate_shell(m, 2500, true));
  const FlatSubmanifold plane(5, 2, {1, 0, 1, 0, 1, 0, 0, 1, 0, 1}, std::vector<double>(5, 0.1),
                              {{-0.5, 0.5}, {-0.5, 0.5}});
  const auto serial = restriction_lp_norms(g, plane, exponents, {}, 1);
  const auto parallel = restriction_lp_norms(g, plane, exponents, {}, 3);
  CHECK(serial == parallel);
  const double p_inf[] = {std::numeric_limits<double>::infinity()};
  const auto sup = restriction_lp_norms(g, plane, p_inf);
  CHECK(sup[0] >= serial[1] / std::pow(plane.area(), 1.0 / 6.0) * (1 - 1e-12));

  CHECK_THROWS_AS(restriction_lp_norms(g, plane, exponents, Resolution{1.5, 16}), ResolutionError);
  const auto nodes = quadrature_nodes(g, plane, {});
  CHECK(nodes.size() == 2);
  for (int q : nodes) CHECK(q >= 16);
}

TEST_CASE("pointwise lower check") {
  const auto m = s3_power(5);
  const auto single = enumerate_shell(m, 40, true);
  const Extremizer f(m, single);
  CHECK(pointwise_lower_check(f, 1e-9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pointwise_lower_check(f, 1e-4) >= pointwise_lower_check(f, 1e-2));

  const double ratio = pointwise_lower_check(m, single, 0.05);
  CHECK(ratio >= 0.5);

  // Independent grid minimization over the polydisc.
  const double radius = 0.05 / std::sqrt(40.0);
  double oracle_min = 1.0;
  const int steps = 7;
  std::vector<int> idx(5, 0);
  while (true) {
    std::vector<double> theta(5);
    for (int i = 0; i < 5; ++i) theta[i] = -radius + 2 * radius * idx[i] / (steps - 1);
    oracle_min = std::min(oracle_min, std::abs(naive_eval(m, single, theta)) / 243.0);
    int i = 4;
    while (i >= 0 && ++idx[i] == steps) idx[i--] = 0;
    if (i < 0) break;
  }
  CHECK(oracle_min >= 0.5);
  CHECK(ratio == doctest::Approx(oracle_min).epsilon(1e-9));

  for (std::int64_t level : {1600, 2500, 4900}) {
    const auto shell = enumerate_shell(m, level, true);
    if (!shell.empty()) CHECK(pointwise_lower_check(m, shell) >= 0.5);
  }
}

TEST_CASE("sharpness report") {
  const auto m = s3_power(5);
  const double exponents[] = {2.0, 6.0};
  const std::int64_t level[] = {40};
  const auto circle = diagonal_circle(-0.5, 0.5);
  const auto report = sharpness_report(m, circle, exponents, level);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.fits.empty());
  for (const auto& row : report.rows) {
    const double big_n = std::sqrt(40.0);
    CHECK(row.shell_size == 1);
    CHECK(row.l2_norm == 1.0);
    CHECK(row.lower_check >= 0.5);
    // S meets the polydisc |theta_i| <= eps/N in |u| <= sqrt(5) eps / N.
    const double volume = 2 * std::sqrt(5.0) * 0.05 / big_n;
    CHECK(row.ratio >= row.lower_check * std::pow(volume, 1 / row.p) * 243.0);
    CHECK(row.envelope == doctest::Approx(std::pow(big_n, 6.5 - 1 / row.p)));
  }
  CHECK(report.target_slopes[0] == doctest::Approx(6.0));

  const auto point = FlatSubmanifold::point(std::vector<double>(5, 0.0));
  const std::int64_t big_level[] = {1600};
  const auto at_point = sharpness_report(m, point, exponents, big_level);
  const Extremizer g(m, enumerate_shell(m, 1600, true));
  for (const auto& row : at_point.rows) {
    CHECK(row.ratio == doctest::Approx(g.value_at_origin() / std::sqrt(static_cast<double>(row.shell_size))));
    CHECK(row.ratio >= 0.5 * g.value_at_origin() / std::sqrt(static_cast<double>(row.shell_size)));
  }

  const std::int64_t empty[] = {48};
  CHECK_THROWS_AS(sharpness_report(m, circle, exponents, empty), DomainError);
}
