#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "sharpflat/product_eigenfunctions.hpp"

using namespace sharpflat;
using namespace sharpflat::product;

namespace {

ProductManifold s3_power(int r) { return ProductManifold(std::vector<CrossSpace>(r, CrossSpace::sphere(3))); }

bool contains(const LatticeShell& shell, const DegreeTuple& t) {
  return std::find(shell.members.begin(), shell.members.end(), t) != shell.members.end();
}

void compare_with_brute_force(const ProductManifold& m, std::int64_t max_level, int bound) {
  std::vector<int> shifts;
  std::vector<bool> even;
  for (const auto& f : m.factors()) {
    shifts.push_back(f.eigenvalue_shift());
    even.push_back(f.even_degrees_only());
  }
  const auto buckets = oracle::bucket_tuples(shifts, even, bound, max_level);
  const auto counts = unconstrained_shell_counts(m, max_level);
  for (std::int64_t level = 0; level <= max_level; ++level) {
    std::vector<DegreeTuple> all;
    std::vector<DegreeTuple> ordered;
    if (auto it = buckets.find(level); it != buckets.end()) {
      all = it->second;
      for (const auto& t : all) {
        if (oracle::ordered(t)) ordered.push_back(t);
      }
    }
    const auto free_shell = enumerate_shell(m, level, false);
    const auto ordered_shell = enumerate_shell(m, level, true);
    REQUIRE(free_shell.members == all);
    REQUIRE(ordered_shell.members == ordered);
    REQUIRE(counts[level] == static_cast<std::int64_t>(all.size()));
    for (const auto& t : all) {
      REQUIRE(in_shell(m, t, level, false));
      REQUIRE(in_shell(m, t, level, true) == oracle::ordered(t));
      REQUIRE_FALSE(in_shell(m, t, level + 1, false));
    }
  }
}

}  // namespace

TEST_CASE("manifold ordering") {
  const ProductManifold m({CrossSpace::sphere(6), CrossSpace::complex_projective(4), CrossSpace::sphere(2)});
  CHECK(m.rank() == 3);
  CHECK(m.dimension() == 12);
  CHECK(m.factor(0) == CrossSpace::sphere(2));
  CHECK(m.factor(1) == CrossSpace::complex_projective(4));
  CHECK(m.factor(2) == CrossSpace::sphere(6));
  CHECK_THROWS_AS(ProductManifold({CrossSpace::sphere(3)}), DomainError);
}

TEST_CASE("shells on (S^3)^5") {
  const auto m = s3_power(5);
  CHECK(contains(enumerate_shell(m, 15, true), {1, 1, 1, 1, 1}));
  CHECK(contains(enumerate_shell(m, 40, true), {2, 2, 2, 2, 2}));
  CHECK(enumerate_shell(m, 40, true).spectral_parameter() == doctest::Approx(std::sqrt(40.0)));

  // Level 48: n_i^2 + 2 n_i in {0, 3, 8, 15, 24, 35, 48}, so n_1 <= 6.
  const auto buckets = oracle::bucket_tuples(std::vector<int>(5, 2), std::vector<bool>(5, false), 6, 48);
  const auto& all = buckets.at(48);
  CHECK(enumerate_shell(m, 48, false).members == all);
  std::vector<DegreeTuple> ordered;
  for (const auto& t : all) {
    if (oracle::ordered(t)) ordered.push_back(t);
  }
  CHECK(enumerate_shell(m, 48, true).members == ordered);
  CHECK_THROWS_AS(enumerate_shell(m, -1, true), DomainError);
}

TEST_CASE("enumerator matches a naive loop up to level 500") {
  compare_with_brute_force(s3_power(5), 500, 21);
  compare_with_brute_force(ProductManifold({CrossSpace::sphere(4), CrossSpace::real_projective(3),
                                            CrossSpace::complex_projective(4), CrossSpace::sphere(2)}),
                           500, 22);
}

TEST_CASE("ordered members have comparable degrees") {
  const auto m = s3_power(5);
  for (std::int64_t level : {1600, 2500, 5000, 9999}) {
    const auto shell = enumerate_shell(m, level, true);
    const double big_n = shell.spectral_parameter();
    for (const auto& t : shell.members) {
      CHECK(t.front() >= t.back());
      CHECK(2 * t.back() >= t.front());
      CHECK(t.front() <= big_n);
      CHECK(t.back() >= big_n / 2 / std::sqrt(5.0) - 1);
    }
  }
}

TEST_CASE("unconstrained counts grow like N^(r-2)") {
  const auto fit = count_growth(s3_power(5), 10000);
  CHECK(fit.slope >= 2.7);
}
