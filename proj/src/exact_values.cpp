#include "rshapiro/exact_values.hpp"

#include <cmath>
#include <numbers>

namespace rshapiro {

double ExactCircleValue::to_double() const {
  return static_cast<double>(units) +
         static_cast<double>(sqrt2_halves) * (std::numbers::sqrt2 / 2.0);
}

std::array<ExactCircleValue, 8> eighth_angle_values(const Autocorrelation& ac) {
  // cos(2 pi r / 8) for r = mq mod 8: {1, s, 0, -s, -1, -s, 0, s}, s = sqrt2/2
  std::array<ExactCircleValue, 8> out{};
  const std::size_t n = ac.c.size();
  for (int q = 0; q < 8; ++q) {
    std::int64_t units = ac.c[0];
    std::int64_t halves = 0;
    for (std::size_t m = 1; m < n; ++m) {
      switch ((m * std::size_t(q)) % 8) {
        case 0: units += 2 * ac.c[m]; break;
        case 1: case 7: halves += 2 * ac.c[m]; break;
        case 3: case 5: halves -= 2 * ac.c[m]; break;
        case 4: units -= 2 * ac.c[m]; break;
        default: break;  // cos = 0
      }
    }
    out[std::size_t(q)] = {units, halves};
  }
  return out;
}

int exact_sign(const ExactCircleValue& v) {
  const std::int64_t u = v.units, h = v.sqrt2_halves;
  if (h == 0) return u > 0 ? 1 : (u < 0 ? -1 : 0);
  if (u == 0) return h > 0 ? 1 : -1;
  if (u > 0 && h > 0) return 1;
  if (u < 0 && h < 0) return -1;
  // mixed signs: compare 2u^2 with h^2; equality would force sqrt(2) rational
  const __int128 uu = static_cast<__int128>(u) * u * 2;
  const __int128 hh = static_cast<__int128>(h) * h;
  if (u > 0) return uu > hh ? 1 : -1;
  return hh > uu ? 1 : -1;
}

ExactCircleValue subtract_integer(const ExactCircleValue& v, std::int64_t m) {
  return {v.units - m, v.sqrt2_halves};
}

}  // namespace rshapiro
