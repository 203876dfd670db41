#pragma once

// Exact rational bookkeeping of restriction exponents on products of CROSSs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace sharpflat::exponents {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// A Lebesgue exponent p in [1, inf], with p = inf kept exact.
class LebesgueExponent {
 public:
  static LebesgueExponent finite(Rational p);
  static LebesgueExponent infinity();
  /// Recovers a rational with denominator <= 1000 from a double; +inf maps to infinity().
  static LebesgueExponent from_double(double p);

  bool is_infinite() const { return infinite_; }
  /// Throws DomainError for p = inf.
  const Rational& value() const;
  /// 1/p, zero for p = inf.
  Rational reciprocal() const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const LebesgueExponent&, const LebesgueExponent&) = default;

 private:
  LebesgueExponent(Rational p, bool infinite) : value_(p), infinite_(infinite) {}
  Rational value_;
  bool infinite_ = false;
};

/// p >= q with inf largest.
bool at_least(const LebesgueExponent& p, const Rational& q);

/// tau(d, p) = -1/p for p >= 4/(d-1), -(d-1)/4 otherwise. Requires d >= 2, p >= 2.
Rational tau(int d, const LebesgueExponent& p);

/// Restriction exponent of a k-dimensional submanifold in a d-manifold from
/// the general-manifold baseline, or nullopt outside every branch.
std::optional<Rational> baseline_exponent(int k, int d, const LebesgueExponent& p);

struct ExponentRecord {
  std::vector<int> dimensions;   ///< d_1 <= ... <= d_r
  int k = 0;
  LebesgueExponent p = LebesgueExponent::infinity();
  std::vector<Rational> tau;     ///< per factor, ascending dimension
  Rational product_exponent;     ///< (d-2)/2 + sum_{i<=k} tau(d_i, p)
  Rational joint_exponent;       ///< (d-r)/2 + sum_{i<=k} tau(d_i, p), for joint eigenfunctions
  Rational no_loss_exponent;     ///< (d-2)/2 - k/p
  std::optional<Rational> baseline;
  /// All d_i >= 3 and r >= 5: the lattice-shell extremizer realizes no_loss_exponent.
  bool sharpness_expected = false;

  int total_dimension() const;
  int rank() const { return static_cast<int>(dimensions.size()); }
  /// baseline - product_exponent when the baseline applies.
  std::optional<Rational> improvement() const;
};

/// Requires r >= 2 factors of dimension >= 2, 0 <= k <= r, p >= 2.
ExponentRecord exponent_table(std::vector<int> dimensions, int k, const LebesgueExponent& p);

}  // namespace sharpflat::exponents
