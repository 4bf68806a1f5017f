#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "rshapiro/common.hpp"
#include "rshapiro/eval.hpp"
#include "rshapiro/exact_values.hpp"

namespace rshapiro {

// One certified solution of R(t) = level.
//   cell:        grid cell index (zero in [t_cell, t_{cell+1}], or at t_cell
//                exactly when exact)
//   angle:       exact or refined angle; bracket midpoint when unrefined
//   residual:    |R(angle) - level| via the oracle; 0 for exact certificates,
//                NaN when no oracle is available
//   exact:       certified by integer arithmetic at the angle itself
//   bracket_lo/hi: grid indices of the resolved samples flanking the zero
//                (hi may wrap past N); equal to cell for exact certificates
struct Crossing {
  std::size_t cell = 0;
  double angle = 0.0;
  double residual = 0.0;
  bool exact = false;
  std::size_t bracket_lo = 0;
  std::size_t bracket_hi = 0;
};

struct CrossingReport {
  double level = 0.0;
  std::int64_t certified_count = 0;
  std::vector<Crossing> crossings;
  std::int64_t ambiguous_cells = 0;  // unresolved in-band samples
  std::size_t grid_size = 0;
};

// Grid point whose sign of (value - level) is known exactly from integer
// arithmetic; sign 0 certifies a zero at that angle.
struct ExactGridPoint {
  std::size_t index = 0;
  int sign = 0;
};

// Exact-sign certificates at the eighth angles t = 2*pi*q/8 (grid indices
// q*N/8, N divisible by 8) for the exact rational level level_num/level_den,
// from the integer autocorrelation.
std::vector<ExactGridPoint> exact_eighth_angle_points(const Autocorrelation& ac,
                                                      std::int64_t level_num,
                                                      std::int64_t level_den,
                                                      std::size_t grid_size);

struct CountOptions {
  // Band below which a grid sample's sign is treated as unresolved.
  double ambiguity_band = 0.0;
  // Resolution band for oracle values during subdivision; the pointwise
  // oracle is far more accurate than the grid, so this can sit well below
  // ambiguity_band. 0 selects ambiguity_band * 1e-4.
  double oracle_band = 0.0;
  // Bisect every bracket until width < 2*pi/(64*N) and, when
  // residual_target > 0, until |oracle(angle) - level| < residual_target.
  bool refine = false;
  double residual_target = 0.0;
  // High-precision pointwise R(t); enables refinement and the x16
  // subdivision of ambiguous cells.
  std::function<double(double)> oracle;
  // Exact-sign overrides at grid indices.
  std::vector<ExactGridPoint> exact_points;
};

// Counts certified distinct solutions of R(t) = level around the circle:
// strict sign changes of (sample - level) between resolved samples, plus
// exact-certificate zeros. A run of unresolved samples flanked by opposite
// resolved signs contributes max(sign changes resolved inside it, exact
// zeros inside it, 1); a run flanked by equal signs contributes only what
// subdivision or certificates resolve. Undercounting is sound; the count is
// a lower bound on the number of distinct solutions.
CrossingReport count_level_crossings(std::span<const double> samples, double level,
                                     const CountOptions& options = {});

struct Theorem21Report {
  int k = 0;
  std::int64_t n = 0;
  std::int64_t zero_count = 0;
  std::int64_t bound_zeros = 0;       // n/4 + 1
  std::int64_t interval_hits = 0;
  std::int64_t bound_intervals = 0;   // n/2 + 2
  bool pass_zeros = false;
  bool pass_intervals = false;
  std::size_t grid_size = 0;
  std::vector<double> zero_angles;         // strictly increasing in [0, 2pi)
  std::vector<std::uint8_t> interval_hit;  // n flags for [t_j, t_{j+1}]
};

// Certifies zeros of R_k(t) = n on an oversample*n grid and maps each to its
// containing interval [t_j, t_{j+1}], t_j = 2*pi*j/n. A zero exactly at t_j
// credits both adjacent closed intervals.
Theorem21Report verify_theorem_2_1(int k, std::size_t oversample = 16);

struct Theorem22Report {
  int k = 0;
  std::int64_t n = 0;
  Rational eta;
  Rational epsilon;
  double level = 0.0;
  std::int64_t zero_count = 0;
  std::int64_t bound = 0;
  bool pass = false;
  std::size_t oversample_used = 0;
};

// ceil((1/2 - |eta| - epsilon) * n/2) in exact rational arithmetic,
// floored at 0. For eta = 0 the bound defers to the n/4+1 of Theorem 2.1.
std::int64_t theorem22_bound(std::int64_t n, const Rational& eta, const Rational& epsilon);

// Certified crossings of R_k at level (1+eta)n against theorem22_bound.
// Escalates the grid to oversample 64 before reporting failure.
Theorem22Report verify_theorem_2_2(int k, const Rational& eta, const Rational& epsilon,
                                   std::size_t oversample = 16);

// Max residual over the n-point subgrid z_j = e^{2*pi*i*j/n} of
//   P_k(z_j) - 2 P_{k-2}(z_j)                      (even j)
//   P_k(z_j) - (-1)^{(j-1)/2} 2i Q_{k-2}(z_j)      (odd j)
double check_lemma_3_1(int k);

// Max over the grid of |(R_k(t) - n) + (R_k(t + pi) - n)| via the half-grid
// index shift. N must be even and >= n.
double check_antisymmetry(int k, std::size_t grid_size);

struct SignChangeArgumentReport {
  int k = 0;
  std::int64_t n = 0;
  std::int64_t sign_changes = 0;          // s, strict changes in <A_0..A_n>
  std::int64_t sign_change_bound = 0;     // n/2 - 2
  std::int64_t qualifying_pairs = 0;      // m, pairs with A_j A_{j+1} >= 0
  std::int64_t qualifying_bound = 0;      // n/2 + 2
  std::int64_t uncertified_intervals = 0; // qualifying intervals without a certified zero
  bool pass = false;
  std::vector<double> a_tuple;            // the raw (n+1)-tuple
};

// Re-executes the proof mechanics: builds A_j = R_{k-2}(t_j) - n/4 on the
// n-grid, checks s <= n/2-2 and m >= n/2+2, and certifies that every
// qualifying closed interval contains a zero of R_k(t) = n.
SignChangeArgumentReport verify_sign_change_argument(int k, std::size_t oversample = 16);

void write_crossings_csv(const CrossingReport& report, std::ostream& out);

}  // namespace rshapiro
