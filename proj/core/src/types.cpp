#include "detproc/types.hpp"

#include <cmath>

#include "detproc/errors.hpp"

namespace detproc {

Complex divide(Complex numerator, Complex denominator) {
  if (denominator == Complex(0.0, 0.0)) {
    throw DomainError("complex division by zero");
  }
  return numerator / denominator;
}

HalfInteger HalfInteger::from_doubled(std::int64_t doubled) {
  if (doubled % 2 == 0) {
    throw DomainError("half-integer must have an odd doubled value, got " +
                      std::to_string(doubled));
  }
  return HalfInteger(doubled);
}

HalfInteger HalfInteger::from_value(double x) {
  const double twice = 2.0 * x;
  if (!std::isfinite(twice) || twice != std::round(twice)) {
    throw DomainError("not a half-integer: " + std::to_string(x));
  }
  return from_doubled(static_cast<std::int64_t>(twice));
}

std::string HalfInteger::to_string() const { return std::to_string(doubled_) + "/2"; }

}  // namespace detproc
