#include "rshapiro/eval.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <ostream>

#include "double_double.hpp"

namespace rshapiro {

namespace {

// FFTW plan creation/destruction is not thread-safe.
std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

int& fft_thread_count() {
  static int threads = 1;
  return threads;
}

void run_dft(std::vector<std::complex<double>>& in, std::vector<std::complex<double>>& out,
             int direction) {
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_plan_mutex());
    static const bool threads_ready = fftw_init_threads() != 0;
    if (threads_ready) fftw_plan_with_nthreads(fft_thread_count());
    plan = fftw_plan_dft_1d(static_cast<int>(in.size()),
                            reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), direction,
                            FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_plan_mutex());
    fftw_destroy_plan(plan);
  }
}

void check_grid_request(std::size_t grid_size, std::size_t poly_size, std::size_t max_bytes) {
  if (!std::has_single_bit(grid_size)) throw DomainError("grid size must be a power of two");
  if (grid_size < poly_size) throw DomainError("grid size must be at least the polynomial length");
  if (grid_size > max_bytes / (2 * sizeof(std::complex<double>)))
    throw CapacityError("grid of " + std::to_string(grid_size) + " points exceeds the memory budget");
}

}  // namespace

void set_fft_threads(int threads) {
  std::lock_guard lock(fftw_plan_mutex());
  fft_thread_count() = std::max(1, threads);
}

CircleGrid eval_unit_circle(std::span<const std::complex<double>> coeffs, std::size_t grid_size,
                            std::size_t max_bytes) {
  check_grid_request(grid_size, coeffs.size(), max_bytes);
  std::vector<std::complex<double>> in(grid_size, std::complex<double>(0, 0));
  std::copy(coeffs.begin(), coeffs.end(), in.begin());
  CircleGrid grid;
  grid.size = grid_size;
  grid.values.resize(grid_size);
  // value[i] = sum_j a_j e^{+2 pi i j i / N}: the unnormalized backward DFT
  run_dft(in, grid.values, FFTW_BACKWARD);
  return grid;
}

CircleGrid eval_unit_circle(const SignSequence& seq, std::size_t grid_size, std::size_t max_bytes) {
  std::vector<std::complex<double>> coeffs(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) coeffs[j] = std::complex<double>(seq[j], 0.0);
  return eval_unit_circle(coeffs, grid_size, max_bytes);
}

RealGrid modulus_squared(const CircleGrid& grid) {
  RealGrid out;
  out.size = grid.size;
  out.values.resize(grid.values.size());
  for (std::size_t i = 0; i < grid.values.size(); ++i) out.values[i] = std::norm(grid.values[i]);
  return out;
}

std::complex<double> eval_point(const SignSequence& seq, double t) {
  const auto acc = detail::horner_unit_circle(seq.coeffs().data(), seq.size(), t);
  return {acc.re.hi + acc.re.lo, acc.im.hi + acc.im.lo};
}

std::complex<double> eval_point(std::span<const double> coeffs, double t) {
  const auto acc = detail::horner_unit_circle(coeffs.data(), coeffs.size(), t);
  return {acc.re.hi + acc.re.lo, acc.im.hi + acc.im.lo};
}

double modulus_squared_point(const SignSequence& seq, double t) {
  return detail::dd_norm(detail::horner_unit_circle(seq.coeffs().data(), seq.size(), t));
}

Autocorrelation autocorrelation_direct(const SignSequence& seq) {
  const std::size_t n = seq.size();
  Autocorrelation ac;
  ac.c.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j + m < n; ++j)
      sum += static_cast<std::int64_t>(seq[j]) * static_cast<std::int64_t>(seq[j + m]);
    ac.c[m] = sum;
  }
  return ac;
}

Autocorrelation autocorrelation(const SignSequence& seq) {
  const std::size_t n = seq.size();
  if (n <= 2048) return autocorrelation_direct(seq);

  // linear autocorrelation through a length-2n transform; exactness restored
  // by rounding with a verified residual
  const std::size_t m = 2 * n;
  std::vector<std::complex<double>> in(m, std::complex<double>(0, 0));
  for (std::size_t j = 0; j < n; ++j) in[j] = std::complex<double>(seq[j], 0.0);
  std::vector<std::complex<double>> spectrum(m);
  run_dft(in, spectrum, FFTW_FORWARD);
  for (auto& v : spectrum) v = std::complex<double>(std::norm(v), 0.0);
  std::vector<std::complex<double>> corr(m);
  run_dft(spectrum, corr, FFTW_BACKWARD);

  Autocorrelation ac;
  ac.c.resize(n);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t j = 0; j < n; ++j) {
    const double value = corr[j].real() * scale;
    const double rounded = std::round(value);
    if (std::abs(value - rounded) >= 0.5 - 1e-3)
      throw std::runtime_error("autocorrelation rounding residual too large");
    ac.c[j] = static_cast<std::int64_t>(rounded);
  }
  return ac;
}

double check_parallelogram(int k, std::size_t grid_size) {
  const RSPair pair = build_rs_pair(k);
  const CircleGrid gp = eval_unit_circle(pair.p, grid_size);
  const CircleGrid gq = eval_unit_circle(pair.q, grid_size);
  const double two_n = 2.0 * static_cast<double>(pair.p.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_size; ++i)
    worst = std::max(worst, std::abs(std::norm(gp.values[i]) + std::norm(gq.values[i]) - two_n));
  return worst;
}

void write_grid_csv(const RealGrid& grid, std::ostream& out) {
  out << "t,value\n";
  for (std::size_t i = 0; i < grid.size; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid.size);
    out << t << ',' << grid.values[i] << '\n';
  }
}

void write_grid_csv(const CircleGrid& grid, std::ostream& out) {
  out << "t,re,im\n";
  for (std::size_t i = 0; i < grid.size; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid.size);
    out << t << ',' << grid.values[i].real() << ',' << grid.values[i].imag() << '\n';
  }
}

void write_grid_f64(const RealGrid& grid, std::ostream& out) {
  out.write(reinterpret_cast<const char*>(grid.values.data()),
            static_cast<std::streamsize>(grid.values.size() * sizeof(double)));
}

void write_grid_f64(const CircleGrid& grid, std::ostream& out) {
  out.write(reinterpret_cast<const char*>(grid.values.data()),
            static_cast<std::streamsize>(grid.values.size() * sizeof(std::complex<double>)));
}

void write_autocorrelation_csv(const Autocorrelation& ac, std::ostream& out) {
  out << "m,c_m\n";
  for (std::size_t m = 0; m < ac.c.size(); ++m) out << m << ',' << ac.c[m] << '\n';
}

}  // namespace rshapiro
