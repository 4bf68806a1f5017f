#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rshapiro/common.hpp"

namespace rshapiro {

// Coefficient vector with entries in {-1,+1} and length 2^level.
// Coefficients are exact small integers; floats appear only inside evaluation.
class SignSequence {
 public:
  SignSequence(std::vector<std::int8_t> coeffs, int level);

  int level() const { return level_; }
  std::size_t size() const { return coeffs_.size(); }
  int operator[](std::size_t j) const { return coeffs_[j]; }
  std::span<const std::int8_t> coeffs() const { return coeffs_; }

 private:
  std::vector<std::int8_t> coeffs_;
  int level_;
};

// The pair (P_k, Q_k) produced by the doubling recursion.
struct RSPair {
  SignSequence p;
  SignSequence q;
  int level;
};

// Builds (P_k, Q_k) by bottom-up doubling from P_0 = Q_0 = 1.
RSPair build_rs_pair(int level, std::size_t max_bytes = kDefaultMemoryBudget);

// Closed-form coefficient of P_k for any k with 2^k > j:
// sign = (-1)^{number of "11" pairs in the binary expansion of j}.
int grs_coefficient(std::uint64_t j);

// Max over an even grid of | |Q_k(-z)| - |P_k(z)| |  (modulus form of the
// Q_k(-z) = P_k*(z) identity; the signed form needs a k-dependent sign
// convention, so only the modulus is checked).
double check_eq_1_2(int k, std::size_t grid_size);

// Empirical overall sign s_k with Q_k(-z) = s_k * P_k*(z) at coefficient
// level, or 0 if no single sign works.
int eq_1_2_coefficient_sign(int k);

// Text export: one "+1"/"-1" line per coefficient.
void write_sign_lines(const SignSequence& seq, std::ostream& out);
SignSequence read_sign_lines(std::istream& in, int level);

// Packed export: bit = 1 <-> +1, little-endian bit order within bytes,
// zero-padded to a whole byte. The reader must know the level.
std::vector<std::uint8_t> pack_signs(const SignSequence& seq);
SignSequence unpack_signs(std::span<const std::uint8_t> bytes, int level);

}  // namespace rshapiro
