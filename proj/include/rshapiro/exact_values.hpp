#pragma once

#include <array>
#include <cstdint>

#include "rshapiro/eval.hpp"

namespace rshapiro {

// Exact value of R(t) = c_0 + 2*sum_{m>=1} c_m cos(m t) at an eighth angle
// t = 2*pi*q/8. There cos(m t) lies in {0, +-1, +-sqrt(2)/2}, so the value is
//   units + sqrt2_halves * (sqrt(2)/2)
// with both parts exact integers derived from the integer autocorrelation.
struct ExactCircleValue {
  std::int64_t units = 0;
  std::int64_t sqrt2_halves = 0;

  bool is_zero() const { return units == 0 && sqrt2_halves == 0; }
  double to_double() const;
};

// R at t_q = 2*pi*q/8 for q = 0..7.
std::array<ExactCircleValue, 8> eighth_angle_values(const Autocorrelation& ac);

// Exact sign in {-1, 0, +1}; decided in integer arithmetic.
int exact_sign(const ExactCircleValue& v);

// value - m, exact.
ExactCircleValue subtract_integer(const ExactCircleValue& v, std::int64_t m);

}  // namespace rshapiro
