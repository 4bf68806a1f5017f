#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rshapiro/common.hpp"
#include "rshapiro/sign_sequence.hpp"

namespace rshapiro {

// Empirical distribution of R_k(t)/(2n) over [0,1].
struct Histogram1D {
  std::size_t bins = 0;
  std::vector<double> mass;
  double ks_statistic = 0.0;  // sup distance of the empirical CDF from uniform
  double mean = 0.0;
  std::size_t grid_size = 0;
};

Histogram1D value_distribution(const SignSequence& seq, std::size_t grid_size, std::size_t bins);

// Fraction of samples with alpha <= R/(2n) < beta (beta = 1 closes the range).
double band_mass(const SignSequence& seq, std::size_t grid_size, double alpha, double beta);

// Empirical distribution of P_k(e^{it})/sqrt(2n) over a G x G grid on [-1,1]^2,
// against the limit density 2/(2*pi) per unit area on the unit disk.
struct Histogram2D {
  std::size_t cells = 0;  // G
  std::vector<double> mass;       // row-major, cell (ix, iy) at ix*G + iy
  std::vector<double> reference;  // 2*area(cell intersect D)/(2*pi), normalized
  double max_cell_error = 0.0;
  std::size_t grid_size = 0;
};

Histogram2D planar_distribution(const SignSequence& seq, std::size_t grid_size, std::size_t cells);

struct MomentReport {
  double q = 0.0;
  double estimate = 0.0;
  std::size_t grid_size = 0;
  bool exact = false;     // even integer q with N > (q/2)(n-1): quadrature exact
  double predicted = 0.0; // sqrt(2n) / (q/2+1)^{1/q}
  double ratio = 0.0;
};

// M_q(seq) by rectangle rule on N angles. Even integer q below the Nyquist
// degree is exact; otherwise N doubles until successive estimates agree to
// 1e-9 relative.
MomentReport moment(const SignSequence& seq, double q, std::size_t grid_size);

struct MahlerReport {
  double estimate = 0.0;
  std::size_t grid_size = 0;
  double clip = 0.0;               // values below e^{-clip} are clipped
  double sensitivity_grid = 0.0;   // relative change on doubling N
  double sensitivity_clip = 0.0;   // relative change on doubling the clip
  bool diagnostic = false;         // sensitivity above 1e-6 relative
};

// M_0 by rectangle-rule average of max(log|f|, -clip), exponentiated.
MahlerReport mahler_quadrature(const SignSequence& seq, std::size_t grid_size, double clip = 40.0);
MahlerReport mahler_quadrature(std::span<const std::complex<double>> coeffs,
                               std::size_t grid_size, double clip = 40.0);

// All complex roots via a balanced companion matrix plus Newton polish;
// every root must satisfy |f(z)| < 1e-8 * max(1, ||coeffs||_2) or a
// RootFindingError is raised.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs);

// Jensen route: M_0 = |leading| * prod max(1, |z_j|).
double mahler_via_roots(std::span<const std::complex<double>> coeffs);
double mahler_via_roots(const SignSequence& seq, int max_level = 8);

void write_histogram1d_csv(const Histogram1D& h, std::ostream& out);
void write_histogram2d_csv(const Histogram2D& h, std::ostream& out);

}  // namespace rshapiro
