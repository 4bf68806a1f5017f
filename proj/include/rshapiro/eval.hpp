#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rshapiro/common.hpp"
#include "rshapiro/sign_sequence.hpp"

namespace rshapiro {

// Samples at equispaced angles t_i = 2*pi*i/N on the unit circle.
struct CircleGrid {
  std::size_t size = 0;
  std::vector<std::complex<double>> values;
};

struct RealGrid {
  std::size_t size = 0;
  std::vector<double> values;
};

// Caps the worker threads used by the grid transforms (default 1).
void set_fft_threads(int threads);

// value[i] = sum_j a_j e^{i t_i j}, via a zero-padded fast transform.
// N must be a power of two with N >= length of the polynomial.
CircleGrid eval_unit_circle(const SignSequence& seq, std::size_t grid_size,
                            std::size_t max_bytes = kDefaultMemoryBudget);

// Same transform for an arbitrary complex coefficient vector.
CircleGrid eval_unit_circle(std::span<const std::complex<double>> coeffs, std::size_t grid_size,
                            std::size_t max_bytes = kDefaultMemoryBudget);

// Pointwise |value|^2; real and nonnegative.
RealGrid modulus_squared(const CircleGrid& grid);

// Horner evaluation at e^{it} in double-double arithmetic. Pointwise ground
// truth for bisection refinement near suspected zeros.
std::complex<double> eval_point(const SignSequence& seq, double t);
std::complex<double> eval_point(std::span<const double> coeffs, double t);

// |seq(e^{it})|^2 through the double-double path.
double modulus_squared_point(const SignSequence& seq, double t);

// Exact integer autocorrelation c[m] = sum_j a_j a_{j+m}; c[0] = n.
struct Autocorrelation {
  std::vector<std::int64_t> c;
};

// Direct O(n^2) summation; the oracle route.
Autocorrelation autocorrelation_direct(const SignSequence& seq);

// Transform-based for large n, rounded to integers with the rounding residual
// verified below 0.5; falls back to the direct route for small n.
Autocorrelation autocorrelation(const SignSequence& seq);

// Max over the grid of | |P_k|^2 + |Q_k|^2 - 2n |  (parallelogram law).
double check_parallelogram(int k, std::size_t grid_size);

// Grid export helpers.
void write_grid_csv(const RealGrid& grid, std::ostream& out);
void write_grid_csv(const CircleGrid& grid, std::ostream& out);
// Raw little-endian 64-bit floats; complex grids interleave re,im.
void write_grid_f64(const RealGrid& grid, std::ostream& out);
void write_grid_f64(const CircleGrid& grid, std::ostream& out);
void write_autocorrelation_csv(const Autocorrelation& ac, std::ostream& out);

}  // namespace rshapiro
