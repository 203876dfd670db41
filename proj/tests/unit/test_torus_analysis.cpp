#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sharpflat/exponent_fit.hpp"
#include "sharpflat/torus_analysis.hpp"

using namespace sharpflat;
using namespace sharpflat::torus;
using std::numbers::pi;

namespace {

std::vector<double> sample(int m, auto&& f) {
  std::vector<double> out(m);
  for (int j = 0; j < m; ++j) out[j] = f(2.0 * pi * j / m);
  return out;
}

double slope_over(auto&& value, int lo = 64, int hi = 4096) {
  std::vector<FitPoint> pts;
  for (int n = lo; n <= hi; n *= 2) pts.push_back({static_cast<double>(n), value(n)});
  return fit_exponent(pts).slope;
}

const auto kHalf = JacobiParams::from_double(0.5, 0.5);

}  // namespace

TEST_CASE("periodic L^p norms") {
  const auto one = std::vector<double>(64, 1.0);
  for (double p : {1.0, 2.0, 3.5, 8.0}) CHECK(lp_norm_periodic(one, p) == doctest::Approx(std::pow(2 * pi, 1 / p)).epsilon(1e-14));
  CHECK(lp_norm_periodic(one, kInfinity) == 1.0);
  CHECK(lp_norm_periodic(sample(64, [](double t) { return std::cos(t); }), 2.0) ==
        doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
  CHECK(lp_norm_periodic(sample(64, [](double t) { return 3 * std::sin(t); }), kInfinity) == doctest::Approx(3.0));

  const int n = 50;
  const auto kernel = kernel_samples(kHalf, n, PeriodicGrid(8192));
  const double c = special::jacobi_binomial(0.5, n);
  CHECK(lp_norm_periodic(kernel, 2.0) == doctest::Approx(std::sqrt(c * c * 2 * pi / (n + 1))).epsilon(1e-8));

  CHECK_THROWS_AS(lp_norm_periodic(std::vector<double>{1.0, NAN}, 2.0), DomainError);
  CHECK_THROWS_AS(lp_norm_periodic(one, 0.0), DomainError);
}

TEST_CASE("even-p quadrature is exact on trigonometric polynomials") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  const int deg = 6;
  const int m = 64;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::complex<double>> c(2 * deg + 1);
    c[deg] = gauss(rng);
    for (int k = 1; k <= deg; ++k) {
      c[deg + k] = {gauss(rng), gauss(rng)};
      c[deg - k] = std::conj(c[deg + k]);
    }
    const auto f = sample(m, [&](double t) {
      std::complex<double> s = 0;
      for (int k = -deg; k <= deg; ++k) s += c[deg + k] * std::polar(1.0, k * t);
      return s.real();
    });
    double l2 = 0.0;
    for (const auto& z : c) l2 += std::norm(z);
    CHECK(lp_norm_periodic(f, 2.0) == doctest::Approx(std::sqrt(2 * pi * l2)).epsilon(1e-12));

    std::vector<std::complex<double>> sq(4 * deg + 1);
    for (int a = 0; a <= 2 * deg; ++a) {
      for (int b = 0; b <= 2 * deg; ++b) sq[a + b] += c[a] * c[b];
    }
    double l4 = 0.0;
    for (const auto& z : sq) l4 += std::norm(z);
    CHECK(lp_norm_periodic(f, 4.0) == doctest::Approx(std::pow(2 * pi * l4, 0.25)).epsilon(1e-12));
  }
}

TEST_CASE("kernel norms") {
  const PeriodicGrid grid(8192);
  for (double q : {1.0, 2.0, 4.0}) {
    CHECK(kernel_lp_norm(JacobiParams::from_double(2, 1), 0, q, grid) == doctest::Approx(std::pow(2 * pi, 1 / q)));
  }
  for (int n : {64, 256, 1024}) {
    const double c = special::jacobi_binomial(0.5, n);
    const double norm = kernel_lp_norm(kHalf, n, 2.0, PeriodicGrid::for_degree(n));
    CHECK(norm == doctest::Approx(c * std::sqrt(2 * pi / (n + 1))).epsilon(1e-9));
    CHECK(norm / envelope_A_tilde(0.5, 2.0, n) > 1.0);
    CHECK(norm / envelope_A_tilde(0.5, 2.0, n) < 3.0);
  }
  const auto one = JacobiParams::from_double(1, 1);
  CHECK(std::abs(slope_over([&](int n) { return kernel_lp_norm(one, n, 2.0, PeriodicGrid::for_degree(n)); }) - 0.5) <=
        0.05);
}

TEST_CASE("envelopes") {
  for (int n : {0, 7, 300}) {
    CHECK(envelope_A(0.5, 1.0, n) == doctest::Approx(std::pow(n + 1.0, -0.5)));
    CHECK(envelope_A(1.0, 2.0, n) == doctest::Approx(std::pow(n + 1.0, 0.5)));
    CHECK(envelope_A_tilde(1.0, 2.0 / 3.0, n) ==
          doctest::Approx(std::pow(n + 1.0, -0.5) * std::pow(std::log(n + 2.0), 1.5)));
  }
  for (double delta : {0.0, 0.5, 1.0, 2.5}) {
    for (double p : {0.5, 1.0, 2.0 / 3.0, 2.0, 4.0, 1.0 / (delta + 0.5)}) {
      for (int n : {1, 50, 4000}) {
        CHECK(envelope_A_tilde(delta, p, n) >= envelope_A(delta, p, n));
        if (!is_kink(delta, p)) CHECK(envelope_A_tilde(delta, p, n) == envelope_A(delta, p, n));
      }
    }
  }
  CHECK(envelope_exponent(1.0, 4.0) == doctest::Approx(0.75));
  CHECK_THROWS_AS(envelope_A(-1.0, 2.0, 3), DomainError);
}

TEST_CASE("exact L^2 operator norm") {
  CHECK(opnorm_l2_exact(JacobiParams::from_double(3, 1), 0, PeriodicGrid(64)) == doctest::Approx(2 * pi).epsilon(1e-14));
  for (int n = 64; n <= 4096; n *= 2) {
    const double expect = 2 * pi * special::jacobi_binomial(0.5, n) / (n + 1);
    CHECK(opnorm_l2_exact(kHalf, n, PeriodicGrid::for_degree(n)) == doctest::Approx(expect).epsilon(1e-10));
  }
  CHECK(std::abs(slope_over([](int n) { return opnorm_l2_exact(kHalf, n, PeriodicGrid::for_degree(n)); }) + 0.5) <=
        0.03);
  CHECK_THROWS_AS(kernel_multipliers(kHalf, 8, PeriodicGrid(16)), AliasingError);
  CHECK_NOTHROW(kernel_multipliers(kHalf, 7, PeriodicGrid(16)));
}

TEST_CASE("operator norm brackets") {
  BracketOptions quick;
  quick.power_steps = 40;
  for (double p : {2.0, 4.0, 6.0}) {
    const auto b = opnorm_bracket(JacobiParams::from_double(1, 0), 0, p, PeriodicGrid(256), 1, quick);
    CHECK(b.upper == doctest::Approx(std::pow(2 * pi, 2 / p)).epsilon(1e-12));
    CHECK(b.lower == doctest::Approx(b.upper).epsilon(1e-10));
  }
  for (int n : {8, 32}) {
    const PeriodicGrid grid(2048);
    const auto b = opnorm_bracket(kHalf, n, 2.0, grid, 5, quick);
    const double exact = opnorm_l2_exact(kHalf, n, grid);
    CHECK(b.upper_method == UpperMethod::ExactMultiplier);
    CHECK(b.lower <= exact + 1e-8);
    CHECK(b.upper >= exact - 1e-8);
    CHECK(b.upper == doctest::Approx(exact).epsilon(1e-12));
  }
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> degree(0, 40);
  std::uniform_real_distribution<double> exponent(2.0, 9.0);
  const JacobiParams families[] = {kHalf, JacobiParams::from_double(1, 0), JacobiParams::from_double(1.5, 1.5),
                                   JacobiParams::from_double(3, 1)};
  for (const auto& fam : families) {
    for (int trial = 0; trial < 3; ++trial) {
      const int n = degree(rng);
      const double p = exponent(rng);
      const auto b = opnorm_bracket(fam, n, p, PeriodicGrid(1024), trial, quick);
      CHECK(b.lower <= b.upper * (1 + 1e-12));
      CHECK(b.young_upper == doctest::Approx(kernel_lp_norm(fam, n, p / 2, PeriodicGrid(1024))));
    }
  }
  const auto first = opnorm_bracket(families[1], 20, 5.0, PeriodicGrid(1024), 99, quick);
  const auto second = opnorm_bracket(families[1], 20, 5.0, PeriodicGrid(1024), 99, quick);
  CHECK(first.lower == second.lower);
  CHECK(first.lower_witness == second.lower_witness);

  CHECK_THROWS_AS(opnorm_bracket(kHalf, 4, 1.5, PeriodicGrid(256), 1), DomainError);
  CHECK_THROWS_AS(opnorm_bracket(kHalf, 200, 4.0, PeriodicGrid(256), 1), AliasingError);

  const auto one = JacobiParams::from_double(1, 1);
  CHECK(std::abs(slope_over([&](int n) { return opnorm_upper(one, n, 8.0, PeriodicGrid::for_degree(n)); }) - 0.75) <=
        0.05);
}

TEST_CASE("tensor upper bounds") {
  CHECK(tensor_opnorm_upper({}, 4.0) == 1.0);
  const KernelFactor single{JacobiParams::from_double(1, 0), 12};
  CHECK(tensor_opnorm_upper(std::span(&single, 1), 4.0) ==
        opnorm_upper(single.params, 12, 4.0, PeriodicGrid::for_degree(12)));

  const int n = 3;
  const std::vector<KernelFactor> pair = {{kHalf, n}, {kHalf, n}};
  const auto k = kernel_samples(kHalf, n, PeriodicGrid(16));
  const double direct = oracle::max_multiplier_2d(k, k);
  CHECK(tensor_opnorm_upper(pair, 2.0) == doctest::Approx(direct).epsilon(1e-6));
}
