#include "sharpflat/exponent_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sharpflat/errors.hpp"

namespace sharpflat::exponents {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

LebesgueExponent LebesgueExponent::finite(Rational p) {
  if (p < Rational(1)) throw DomainError("Lebesgue exponent must be >= 1");
  return LebesgueExponent(p, false);
}

LebesgueExponent LebesgueExponent::infinity() { return LebesgueExponent(Rational(0), true); }

LebesgueExponent LebesgueExponent::from_double(double p) {
  if (std::isinf(p) && p > 0) return infinity();
  if (!std::isfinite(p)) throw DomainError("Lebesgue exponent must be a number");
  for (std::int64_t q = 1; q <= 1000; ++q) {
    const double scaled = p * static_cast<double>(q);
    const double nearest = std::round(scaled);
    if (std::abs(scaled - nearest) <= 1e-9 * std::max(1.0, std::abs(scaled))) {
      return finite(Rational(static_cast<std::int64_t>(nearest), q));
    }
  }
  throw DomainError("Lebesgue exponent is not a rational with small denominator");
}

const Rational& LebesgueExponent::value() const {
  if (infinite_) throw DomainError("p = inf has no finite value");
  return value_;
}

Rational LebesgueExponent::reciprocal() const {
  return infinite_ ? Rational(0) : Rational(1) / value_;
}

double LebesgueExponent::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : exponents::to_double(value_);
}

std::string LebesgueExponent::to_string() const {
  return infinite_ ? "inf" : exponents::to_string(value_);
}

bool at_least(const LebesgueExponent& p, const Rational& q) {
  return p.is_infinite() || p.value() >= q;
}

Rational tau(int d, const LebesgueExponent& p) {
  if (d < 2) throw DomainError("factor dimension must be >= 2");
  if (!at_least(p, Rational(2))) throw DomainError("tau needs p >= 2");
  if (at_least(p, Rational(4, d - 1))) return -p.reciprocal();
  return -Rational(d - 1, 4);
}

std::optional<Rational> baseline_exponent(int k, int d, const LebesgueExponent& p) {
  if (d < 2 || k < 1 || k >= d || !at_least(p, Rational(2))) return std::nullopt;
  const Rational inv = p.reciprocal();
  if (k == d - 1) {
    if (at_least(p, Rational(2 * d, d - 1))) return Rational(d - 1, 2) - Rational(d - 1) * inv;
    return Rational(d - 1, 4) - Rational(d - 2, 2) * inv;
  }
  if (k == d - 2) {
    // p = 2 carries a logarithmic loss.
    if (!p.is_infinite() && p.value() == Rational(2)) return std::nullopt;
    return Rational(d - 1, 2) - Rational(d - 2) * inv;
  }
  return Rational(d - 1, 2) - Rational(k) * inv;
}

int ExponentRecord::total_dimension() const {
  return std::accumulate(dimensions.begin(), dimensions.end(), 0);
}

std::optional<Rational> ExponentRecord::improvement() const {
  if (!baseline) return std::nullopt;
  return *baseline - product_exponent;
}

ExponentRecord exponent_table(std::vector<int> dimensions, int k, const LebesgueExponent& p) {
  if (dimensions.size() < 2) throw DomainError("need at least two factors");
  if (k < 0 || k > static_cast<int>(dimensions.size())) throw DomainError("k must lie in [0, r]");
  std::sort(dimensions.begin(), dimensions.end());
  ExponentRecord rec;
  rec.dimensions = std::move(dimensions);
  rec.k = k;
  rec.p = p;
  Rational partial(0);
  for (int i = 0; i < rec.rank(); ++i) {
    rec.tau.push_back(tau(rec.dimensions[i], p));
    if (i < k) partial += rec.tau.back();
  }
  const int d = rec.total_dimension();
  const int r = rec.rank();
  rec.product_exponent = Rational(d - 2, 2) + partial;
  rec.joint_exponent = Rational(d - r, 2) + partial;
  rec.no_loss_exponent = Rational(d - 2, 2) - Rational(k) * p.reciprocal();
  rec.baseline = baseline_exponent(k, d, p);
  rec.sharpness_expected = r >= 5 && rec.dimensions.front() >= 3;
  return rec;
}

}  // namespace sharpflat::exponents
