#pragma once

#include <Eigen/Dense>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>

namespace detproc {

using Complex = std::complex<double>;
using CMatrix2 = Eigen::Matrix2cd;

/// Complex division that rejects a zero divisor instead of producing inf/nan.
Complex divide(Complex numerator, Complex denominator);

/// A point of Z' = Z + 1/2, stored as the odd integer 2x.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  /// `doubled` must be odd.
  static HalfInteger from_doubled(std::int64_t doubled);
  /// `x` must be an exact half-integer.
  static HalfInteger from_value(double x);

  constexpr std::int64_t doubled() const noexcept { return doubled_; }
  constexpr double value() const noexcept { return 0.5 * static_cast<double>(doubled_); }

  constexpr HalfInteger operator-() const noexcept { return HalfInteger(-doubled_); }

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  std::string to_string() const;

 private:
  constexpr explicit HalfInteger(std::int64_t doubled) : doubled_(doubled) {}
  std::int64_t doubled_ = 1;
};

}  // namespace detproc

template <>
struct std::hash<detproc::HalfInteger> {
  std::size_t operator()(detproc::HalfInteger x) const noexcept {
    return std::hash<std::int64_t>{}(x.doubled());
  }
};
