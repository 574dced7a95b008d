#pragma once

#include <numbers>

namespace circcop {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces any finite real to [0, 2pi). Results within 1e-15 of 2pi snap to 0.
double reduce_angle(double radians) noexcept;

/// Signed shortest angular difference a - b, in (-pi, pi].
double angular_difference(double a, double b) noexcept;

/// A direction on the circle C = [0, 2pi), in radians.
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) noexcept : value_(reduce_angle(radians)) {}

  [[nodiscard]] constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Angle, Angle) = default;
  friend constexpr auto operator<=>(Angle, Angle) = default;

 private:
  double value_ = 0.0;
};

inline Angle operator+(Angle a, Angle b) noexcept { return Angle(a.value() + b.value()); }
inline Angle operator-(Angle a, Angle b) noexcept { return Angle(a.value() - b.value()); }

/// A probability-scale value in I = [0, 1]. Construction rejects anything else.
class UnitValue {
 public:
  constexpr UnitValue() = default;
  explicit UnitValue(double value);

  [[nodiscard]] constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(UnitValue, UnitValue) = default;
  friend constexpr auto operator<=>(UnitValue, UnitValue) = default;

 private:
  double value_ = 0.0;
};

}  // namespace circcop
