#include "rshapiro/sign_sequence.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "rshapiro/eval.hpp"

namespace rshapiro {

SignSequence::SignSequence(std::vector<std::int8_t> coeffs, int level)
    : coeffs_(std::move(coeffs)), level_(level) {
  if (level < 0 || level >= 63) throw std::invalid_argument("level out of range");
  if (coeffs_.size() != (std::size_t{1} << level))
    throw std::invalid_argument("coefficient count must be 2^level");
  for (const std::int8_t c : coeffs_)
    if (c != 1 && c != -1) throw std::invalid_argument("coefficients must be +1 or -1");
}

RSPair build_rs_pair(int level, std::size_t max_bytes) {
  if (level < 0 || level >= 63) throw std::invalid_argument("level out of range");
  const std::size_t n = std::size_t{1} << level;
  // two coefficient vectors, one byte per entry
  if (n > max_bytes / 2)
    throw CapacityError("building level " + std::to_string(level) + " exceeds the memory budget");

  std::vector<std::int8_t> p{1}, q{1};
  p.reserve(n);
  q.reserve(n);
  for (int step = 0; step < level; ++step) {
    // P_{k+1} = P_k ++ Q_k,  Q_{k+1} = P_k ++ (-Q_k)
    const std::size_t half = p.size();
    p.insert(p.end(), q.begin(), q.end());
    q.resize(2 * half);
    for (std::size_t j = 0; j < half; ++j) {
      q[j] = p[j];
      q[half + j] = -p[half + j];
    }
  }
  return RSPair{SignSequence(std::move(p), level), SignSequence(std::move(q), level), level};
}

int grs_coefficient(std::uint64_t j) {
  // parity of the number of adjacent "11" pairs in the binary expansion
  const int pairs = std::popcount(j & (j >> 1));
  return (pairs & 1) ? -1 : 1;
}

double check_eq_1_2(int k, std::size_t grid_size) {
  if (grid_size % 2 != 0) throw DomainError("grid size must be even");
  const RSPair pair = build_rs_pair(k);
  const CircleGrid gp = eval_unit_circle(pair.p, grid_size);
  const CircleGrid gq = eval_unit_circle(pair.q, grid_size);
  const std::size_t half = grid_size / 2;
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_size; ++i) {
    // -z at angle t_i is the sample at t_i + pi
    const double dev = std::abs(std::abs(gq.values[(i + half) % grid_size]) -
                                std::abs(gp.values[i]));
    worst = std::max(worst, dev);
  }
  return worst;
}

int eq_1_2_coefficient_sign(int k) {
  const RSPair pair = build_rs_pair(k);
  const std::size_t n = pair.p.size();
  int sign = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const int lhs = ((j & 1) ? -1 : 1) * pair.q[j];  // coefficient of Q_k(-z)
    const int rhs = pair.p[n - 1 - j];               // coefficient of P_k*(z)
    const int s = lhs * rhs;
    if (sign == 0)
      sign = s;
    else if (sign != s)
      return 0;
  }
  return sign;
}

void write_sign_lines(const SignSequence& seq, std::ostream& out) {
  for (std::size_t j = 0; j < seq.size(); ++j) out << (seq[j] > 0 ? "+1\n" : "-1\n");
}

SignSequence read_sign_lines(std::istream& in, int level) {
  const std::size_t n = std::size_t{1} << level;
  std::vector<std::int8_t> coeffs;
  coeffs.reserve(n);
  std::string line;
  while (coeffs.size() < n && std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "+1" || line == "1")
      coeffs.push_back(1);
    else if (line == "-1")
      coeffs.push_back(-1);
    else
      throw DomainError("unexpected coefficient line: " + line);
  }
  return SignSequence(std::move(coeffs), level);
}

std::vector<std::uint8_t> pack_signs(const SignSequence& seq) {
  std::vector<std::uint8_t> bytes((seq.size() + 7) / 8, 0);
  for (std::size_t j = 0; j < seq.size(); ++j)
    if (seq[j] > 0) bytes[j / 8] |= std::uint8_t(1u << (j % 8));
  return bytes;
}

SignSequence unpack_signs(std::span<const std::uint8_t> bytes, int level) {
  const std::size_t n = std::size_t{1} << level;
  if (bytes.size() < (n + 7) / 8) throw DomainError("packed data shorter than 2^level bits");
  std::vector<std::int8_t> coeffs(n);
  for (std::size_t j = 0; j < n; ++j)
    coeffs[j] = (bytes[j / 8] >> (j % 8)) & 1u ? 1 : -1;
  return SignSequence(std::move(coeffs), level);
}

}  // namespace rshapiro
