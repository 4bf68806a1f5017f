// Double-double helpers for the pointwise evaluation oracle. Error-free
// transformations after Dekker/Knuth; products lean on std::fma.
#pragma once

#include <cmath>

namespace rshapiro::detail {

struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd dd_add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd dd_add(Dd a, double b) {
  Dd s = two_sum(a.hi, b);
  s.lo += a.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd dd_neg(Dd a) { return {-a.hi, -a.lo}; }

inline Dd dd_mul(Dd a, Dd b) {
  Dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

struct DdComplex {
  Dd re, im;
};

inline DdComplex ddc_mul(const DdComplex& a, const DdComplex& b) {
  return {dd_add(dd_mul(a.re, b.re), dd_neg(dd_mul(a.im, b.im))),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

// Horner over real coefficients, highest degree first via reverse iteration.
template <typename Coeff>
DdComplex horner_unit_circle(const Coeff* coeffs, std::size_t count, double t) {
  const DdComplex z{{std::cos(t), 0.0}, {std::sin(t), 0.0}};
  DdComplex acc{{0.0, 0.0}, {0.0, 0.0}};
  for (std::size_t j = count; j-- > 0;) {
    acc = ddc_mul(acc, z);
    acc.re = dd_add(acc.re, static_cast<double>(coeffs[j]));
  }
  return acc;
}

inline double dd_norm(const DdComplex& v) {
  const Dd n = dd_add(dd_mul(v.re, v.re), dd_mul(v.im, v.im));
  return n.hi + n.lo;
}

}  // namespace rshapiro::detail
