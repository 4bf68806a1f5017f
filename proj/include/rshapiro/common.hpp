#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rshapiro {

// Thrown when a request would exceed the configured memory budget.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on invalid mathematical domain (e.g. |eta| >= 1/2).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when the polynomial root finder fails its residual contract.
class RootFindingError : public std::runtime_error {
 public:
  explicit RootFindingError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} << 30;  // 2 GiB

// Absolute tolerance for modulus-squared quantities, which scale like n = 2^k.
inline double eval_tolerance(std::int64_t n) { return 1e-6 * static_cast<double>(n); }

// Ambiguity band for level-crossing sign classification.
inline double ambiguity_band(std::int64_t n) { return 1e-7 * static_cast<double>(n); }

// Exact rational arithmetic for bound computations; keeps pass/fail decisions
// away from float boundaries.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

  Rational abs() const { return {num < 0 ? -num : num, den}; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// ceil(num/den) for den > 0.
inline std::int64_t ceil_rational(const Rational& r) {
  const std::int64_t q = r.num / r.den;
  return (r.num > 0 && r.num % r.den != 0) ? q + 1 : q;
}

// Parses a plain decimal literal ("0.25", "-0.4", "1") into an exact rational.
Rational parse_decimal(std::string_view text);

// Compensated accumulation; keeps long grid sums at O(eps) relative error.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace rshapiro
