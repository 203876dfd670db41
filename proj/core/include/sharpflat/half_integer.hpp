#pragma once

#include <cmath>
#include <compare>
#include <string>

#include "sharpflat/errors.hpp"

namespace sharpflat {

/// An element of (1/2)Z stored as twice its value, so comparisons and
/// catalog identities are exact.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }

  /// Throws DomainError unless 2*value is an integer.
  static HalfInteger from_double(double value) {
    const double twice = 2.0 * value;
    if (!std::isfinite(twice) || std::nearbyint(twice) != twice) {
      throw DomainError("value " + std::to_string(value) + " is not a half-integer");
    }
    return HalfInteger(static_cast<int>(twice));
  }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(twice_ - o.twice_); }

  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

}  // namespace sharpflat
