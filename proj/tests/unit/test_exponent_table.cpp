#include <doctest.h>

#include <algorithm>
#include <random>

#include "sharpflat/errors.hpp"
#include "sharpflat/exponent_table.hpp"

using namespace sharpflat;
using namespace sharpflat::exponents;

namespace {

const LebesgueExponent kTwo = LebesgueExponent::finite(2);

Rational prefix_tau(const std::vector<int>& dims, int k, const LebesgueExponent& p) {
  Rational sum(0);
  for (int i = 0; i < k; ++i) sum += tau(dims[i], p);
  return sum;
}

}  // namespace

TEST_CASE("tau") {
  CHECK(tau(3, kTwo) == Rational(-1, 2));
  CHECK(tau(2, kTwo) == Rational(-1, 4));
  CHECK(tau(2, LebesgueExponent::finite(4)) == Rational(-1, 4));
  CHECK(tau(2, LebesgueExponent::finite(5)) == Rational(-1, 5));
  CHECK(tau(7, LebesgueExponent::infinity()) == Rational(0));
  CHECK_THROWS_AS(tau(1, kTwo), DomainError);
}

TEST_CASE("no-loss exponent on all-d_i>=3 products") {
  const std::vector<LebesgueExponent> ps = {kTwo, LebesgueExponent::finite(3), LebesgueExponent::finite(Rational(7, 2)),
                                            LebesgueExponent::finite(6), LebesgueExponent::infinity()};
  for (const auto& p : ps) {
    for (int k = 0; k <= 5; ++k) {
      const auto rec = exponent_table({3, 3, 3, 3, 3}, k, p);
      CHECK(rec.total_dimension() == 15);
      CHECK(rec.product_exponent == Rational(13, 2) - Rational(k) * p.reciprocal());
      CHECK(rec.product_exponent == rec.no_loss_exponent);
      CHECK(rec.joint_exponent == Rational(5) - Rational(k) * p.reciprocal());
      CHECK(rec.sharpness_expected);
    }
    const auto mixed = exponent_table({5, 3, 8, 4}, 2, p);
    CHECK(mixed.dimensions == std::vector<int>{3, 4, 5, 8});
    CHECK(mixed.product_exponent == mixed.no_loss_exponent);
    CHECK_FALSE(mixed.sharpness_expected);
  }
  CHECK_FALSE(exponent_table({2, 3, 3, 3, 3}, 1, kTwo).sharpness_expected);
}

TEST_CASE("baseline comparison") {
  const auto rec = exponent_table({3, 3, 3, 3, 3}, 1, kTwo);
  REQUIRE(rec.baseline.has_value());
  CHECK(*rec.baseline == Rational(13, 2));
  CHECK(rec.product_exponent == Rational(6));
  CHECK(rec.improvement() == Rational(1, 2));
  CHECK(to_string(*rec.improvement()) == "1/2");
  CHECK(baseline_exponent(1, 15, kTwo) == Rational(13, 2));
}

TEST_CASE("sorting ascending never lowers the prefix sum") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> dim(2, 16);
  const std::vector<LebesgueExponent> ps = {kTwo, LebesgueExponent::finite(Rational(5, 2)),
                                            LebesgueExponent::finite(3), LebesgueExponent::infinity()};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> dims(2 + trial % 5);
    for (int& d : dims) d = dim(rng);
    std::vector<int> sorted = dims;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : ps) {
      for (int k = 0; k <= static_cast<int>(dims.size()); ++k) {
        CHECK(prefix_tau(sorted, k, p) >= prefix_tau(dims, k, p));
        CHECK(exponent_table(dims, k, p).tau == exponent_table(sorted, k, p).tau);
      }
    }
  }
}

TEST_CASE("Lebesgue exponents") {
  CHECK(LebesgueExponent::from_double(2.5) == LebesgueExponent::finite(Rational(5, 2)));
  CHECK(LebesgueExponent::from_double(1.0 / 3.0 + 2.0) == LebesgueExponent::finite(Rational(7, 3)));
  CHECK(LebesgueExponent::from_double(std::numeric_limits<double>::infinity()).is_infinite());
  CHECK(LebesgueExponent::infinity().reciprocal() == Rational(0));
  CHECK(LebesgueExponent::infinity().to_string() == "inf");
  CHECK_THROWS_AS(LebesgueExponent::infinity().value(), DomainError);
  CHECK_THROWS(exponent_table({3, 3}, 3, kTwo));
  CHECK_THROWS(exponent_table({3}, 1, kTwo));
  CHECK_THROWS(exponent_table({3, 3}, 1, LebesgueExponent::finite(1)));
}
