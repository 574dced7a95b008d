#include "circcop/angle.hpp"

#include <cmath>
#include <string>

#include "circcop/error.hpp"

namespace circcop {

double reduce_angle(double radians) noexcept {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi - 1e-15) r = 0.0;
  return r;
}

double angular_difference(double a, double b) noexcept {
  double d = reduce_angle(a - b);
  return d > kPi ? d - kTwoPi : d;
}

UnitValue::UnitValue(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("unit value out of [0,1]: " + std::to_string(value));
  }
}

}  // namespace circcop
