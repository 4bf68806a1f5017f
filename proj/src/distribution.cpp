#include "rshapiro/distribution.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "rshapiro/eval.hpp"

namespace rshapiro {

namespace {

using std::numbers::pi;

std::vector<std::complex<double>> to_complex(const SignSequence& seq) {
  std::vector<std::complex<double>> coeffs(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) coeffs[j] = std::complex<double>(seq[j], 0.0);
  return coeffs;
}

// normalized samples R(t_i)/(2n) of a sign sequence
std::vector<double> normalized_square_samples(const SignSequence& seq, std::size_t grid_size) {
  if (grid_size < 4 * seq.size()) throw DomainError("grid must oversample by at least 4");
  const RealGrid r = modulus_squared(eval_unit_circle(seq, grid_size));
  const double scale = 1.0 / (2.0 * static_cast<double>(seq.size()));
  std::vector<double> x(r.values.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = r.values[i] * scale;
  return x;
}

}  // namespace

Histogram1D value_distribution(const SignSequence& seq, std::size_t grid_size, std::size_t bins) {
  if (bins == 0) throw DomainError("need at least one bin");
  std::vector<double> x = normalized_square_samples(seq, grid_size);
  const double inv = 1.0 / static_cast<double>(x.size());

  Histogram1D h;
  h.bins = bins;
  h.grid_size = grid_size;
  h.mass.assign(bins, 0.0);
  KahanSum mean;
  for (const double v : x) {
    const auto b = std::min<std::size_t>(
        bins - 1, static_cast<std::size_t>(std::max(0.0, v * static_cast<double>(bins))));
    h.mass[b] += inv;
    mean.add(v);
  }
  h.mean = mean.value() * inv;

  // one-sample KS distance from the uniform CDF on [0,1]
  std::sort(x.begin(), x.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double u = std::clamp(x[i], 0.0, 1.0);
    ks = std::max(ks, std::abs(u - static_cast<double>(i) * inv));
    ks = std::max(ks, std::abs(static_cast<double>(i + 1) * inv - u));
  }
  h.ks_statistic = ks;
  return h;
}

double band_mass(const SignSequence& seq, std::size_t grid_size, double alpha, double beta) {
  const std::vector<double> x = normalized_square_samples(seq, grid_size);
  std::size_t count = 0;
  for (const double v : x)
    if (v >= alpha && (v < beta || beta >= 1.0)) ++count;
  return static_cast<double>(count) / static_cast<double>(x.size());
}

Histogram2D planar_distribution(const SignSequence& seq, std::size_t grid_size,
                                std::size_t cells) {
  if (cells < 8) throw DomainError("need at least an 8x8 cell grid");
  if (grid_size < 4 * seq.size()) throw DomainError("grid must oversample by at least 4");
  const CircleGrid g = eval_unit_circle(seq, grid_size);
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(seq.size()));

  Histogram2D h;
  h.cells = cells;
  h.grid_size = grid_size;
  h.mass.assign(cells * cells, 0.0);
  h.reference.assign(cells * cells, 0.0);

  const double inv = 1.0 / static_cast<double>(g.values.size());
  const auto gi = static_cast<double>(cells);
  for (const auto& v : g.values) {
    const double x = v.real() * scale, y = v.imag() * scale;
    const auto ix = std::min<std::size_t>(
        cells - 1, static_cast<std::size_t>(std::max(0.0, (x + 1.0) * 0.5 * gi)));
    const auto iy = std::min<std::size_t>(
        cells - 1, static_cast<std::size_t>(std::max(0.0, (y + 1.0) * 0.5 * gi)));
    h.mass[ix * cells + iy] += inv;
  }

  // reference: area(cell intersect unit disk), boundary cells by 32x32
  // subsampling, then normalized so the masses compare bin-for-bin
  const double side = 2.0 / gi;
  double total_area = 0.0;
  for (std::size_t ix = 0; ix < cells; ++ix) {
    for (std::size_t iy = 0; iy < cells; ++iy) {
      const double x0 = -1.0 + side * static_cast<double>(ix);
      const double y0 = -1.0 + side * static_cast<double>(iy);
      const double nx = std::max({x0, -(x0 + side), 0.0});
      const double ny = std::max({y0, -(y0 + side), 0.0});
      const double fx = std::max(std::abs(x0), std::abs(x0 + side));
      const double fy = std::max(std::abs(y0), std::abs(y0 + side));
      double area;
      if (nx * nx + ny * ny >= 1.0) {
        area = 0.0;
      } else if (fx * fx + fy * fy <= 1.0) {
        area = side * side;
      } else {
        int inside = 0;
        for (int sx = 0; sx < 32; ++sx) {
          const double px = x0 + (static_cast<double>(sx) + 0.5) * side / 32.0;
          for (int sy = 0; sy < 32; ++sy) {
            const double py = y0 + (static_cast<double>(sy) + 0.5) * side / 32.0;
            if (px * px + py * py <= 1.0) ++inside;
          }
        }
        area = side * side * static_cast<double>(inside) / 1024.0;
      }
      h.reference[ix * cells + iy] = area;
      total_area += area;
    }
  }
  for (auto& ref : h.reference) ref /= total_area;

  for (std::size_t c = 0; c < cells * cells; ++c)
    h.max_cell_error = std::max(h.max_cell_error, std::abs(h.mass[c] - h.reference[c]));
  return h;
}

namespace {

// rectangle-rule mean of |f|^q from a modulus-squared grid
double mean_power(const RealGrid& r, double q) {
  KahanSum sum;
  if (q == 2.0) {
    for (const double v : r.values) sum.add(v);
  } else if (q == 4.0) {
    for (const double v : r.values) sum.add(v * v);
  } else if (q == 6.0) {
    for (const double v : r.values) sum.add(v * v * v);
  } else if (q == 8.0) {
    for (const double v : r.values) sum.add((v * v) * (v * v));
  } else {
    const double h = 0.5 * q;
    for (const double v : r.values) sum.add(std::pow(v, h));
  }
  return sum.value() / static_cast<double>(r.values.size());
}

}  // namespace

MomentReport moment(const SignSequence& seq, double q, std::size_t grid_size) {
  if (!(q > 0.0)) throw DomainError("moment exponent must be positive");
  const auto n = static_cast<double>(seq.size());
  if (grid_size < seq.size()) throw DomainError("grid size must be at least the polynomial length");

  const bool even_integer = q == std::floor(q) && std::fmod(q, 2.0) == 0.0;
  const auto nyquist_exact = [&](std::size_t grid) {
    return even_integer && static_cast<double>(grid) > 0.5 * q * (n - 1.0);
  };

  std::size_t grid = grid_size;
  RealGrid r = modulus_squared(eval_unit_circle(seq, grid));
  double estimate = std::pow(mean_power(r, q), 1.0 / q);
  if (!nyquist_exact(grid)) {
    // double the grid until two successive estimates agree
    for (int round = 0; round < 8; ++round) {
      const std::size_t next = grid * 2;
      RealGrid r2 = modulus_squared(eval_unit_circle(seq, next));
      const double refined = std::pow(mean_power(r2, q), 1.0 / q);
      const double diff = std::abs(refined - estimate);
      grid = next;
      estimate = refined;
      if (diff < 1e-9 * std::abs(refined) || nyquist_exact(grid)) break;
    }
  }

  MomentReport rep;
  rep.q = q;
  rep.estimate = estimate;
  rep.grid_size = grid;
  rep.exact = nyquist_exact(grid);
  rep.predicted = std::sqrt(2.0 * n) / std::pow(0.5 * q + 1.0, 1.0 / q);
  rep.ratio = rep.estimate / rep.predicted;
  return rep;
}

namespace {

double mahler_mean_log(std::span<const std::complex<double>> coeffs, std::size_t grid_size,
                       double clip) {
  // midpoint-offset angles t_i + pi/N: P_k vanishes at z = -1 for odd k, and
  // an aligned grid would land a sample on the log singularity
  std::vector<std::complex<double>> twisted(coeffs.begin(), coeffs.end());
  const double step = pi / static_cast<double>(grid_size);
  for (std::size_t j = 0; j < twisted.size(); ++j)
    twisted[j] *= std::polar(1.0, step * static_cast<double>(j));
  const CircleGrid g = eval_unit_circle(twisted, grid_size);
  KahanSum sum;
  for (const auto& v : g.values) sum.add(std::max(0.5 * std::log(std::norm(v)), -clip));
  return sum.value() / static_cast<double>(g.values.size());
}

}  // namespace

MahlerReport mahler_quadrature(std::span<const std::complex<double>> coeffs,
                               std::size_t grid_size, double clip) {
  if (clip <= 0.0) throw DomainError("clip must be positive");
  MahlerReport rep;
  rep.grid_size = grid_size;
  rep.clip = clip;
  const double base = mahler_mean_log(coeffs, grid_size, clip);
  const double finer = mahler_mean_log(coeffs, 2 * grid_size, clip);
  const double deeper = mahler_mean_log(coeffs, grid_size, 2.0 * clip);
  rep.estimate = std::exp(base);
  rep.sensitivity_grid = std::abs(std::exp(finer) / rep.estimate - 1.0);
  rep.sensitivity_clip = std::abs(std::exp(deeper) / rep.estimate - 1.0);
  rep.diagnostic = rep.sensitivity_grid > 1e-6 || rep.sensitivity_clip > 1e-6;
  return rep;
}

MahlerReport mahler_quadrature(const SignSequence& seq, std::size_t grid_size, double clip) {
  const auto coeffs = to_complex(seq);
  return mahler_quadrature(coeffs, grid_size, clip);
}

namespace {

using cd = std::complex<double>;

cd horner_at(std::span<const cd> coeffs, cd z, cd* derivative = nullptr) {
  cd f(0, 0), df(0, 0);
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    df = df * z + f;
    f = f * z + coeffs[j];
  }
  if (derivative) *derivative = df;
  return f;
}

// |f(z)| / max(1,|z|)^deg: the residual measured on the well-conditioned side
// of the unit circle (reversed polynomial at 1/z for outside roots).
double scaled_residual(std::span<const cd> coeffs, std::span<const cd> reversed, cd z) {
  if (std::abs(z) <= 1.0) return std::abs(horner_at(coeffs, z));
  return std::abs(horner_at(reversed, cd(1, 0) / z));
}

void polish_root(std::span<const cd> coeffs, std::span<const cd> reversed, cd& z) {
  for (int it = 0; it < 6; ++it) {
    if (std::abs(z) <= 1.0) {
      cd df;
      const cd f = horner_at(coeffs, z, &df);
      if (df == cd(0, 0)) return;
      const cd step = f / df;
      z -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) return;
    } else {
      // outside roots: polish the reversed polynomial at w = 1/z
      cd w = cd(1, 0) / z;
      cd df;
      const cd f = horner_at(reversed, w, &df);
      if (df == cd(0, 0)) return;
      const cd step = f / df;
      w -= step;
      if (w == cd(0, 0)) return;
      z = cd(1, 0) / w;
      if (std::abs(step) < 1e-15) return;
    }
  }
}

// Parlett-Reinsch style balancing; companion matrices are far from balanced.
void balance_matrix(Eigen::MatrixXcd& m) {
  const double radix = 2.0;
  const auto dim = m.rows();
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < dim; ++i) {
      double c = 0, r = 0;
      for (Eigen::Index j = 0; j < dim; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / radix) {
        c *= radix;
        r /= radix;
        f *= radix;
      }
      while (c > r * radix) {
        c /= radix;
        r *= radix;
        f /= radix;
      }
      if (c + r < 0.95 * s) {
        converged = false;
        m.col(i) *= f;
        m.row(i) /= f;
      }
    }
  }
}

}  // namespace

std::vector<cd> polynomial_roots(std::span<const cd> coeffs) {
  std::size_t degree = coeffs.empty() ? 0 : coeffs.size() - 1;
  while (degree > 0 && coeffs[degree] == cd(0, 0)) --degree;
  if (degree == 0) {
    if (coeffs.empty() || coeffs[0] == cd(0, 0))
      throw DomainError("polynomial is identically zero or empty");
    return {};
  }
  std::size_t lowest = 0;
  while (lowest < degree && coeffs[lowest] == cd(0, 0)) ++lowest;

  std::vector<cd> work(coeffs.begin() + static_cast<std::ptrdiff_t>(lowest),
                       coeffs.begin() + static_cast<std::ptrdiff_t>(degree) + 1);
  std::vector<cd> roots(lowest, cd(0, 0));  // factored powers of z
  const std::size_t d = work.size() - 1;
  if (d == 0) return roots;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                      static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = cd(1, 0);
  for (std::size_t i = 0; i < d; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) =
        -work[i] / work[d];
  balance_matrix(companion);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw RootFindingError("companion eigenvalue iteration failed to converge");

  std::vector<cd> reversed(work.rbegin(), work.rend());
  double norm2 = 0.0;
  for (const cd& c : work) norm2 += std::norm(c);
  const double tolerance = 1e-8 * std::max(1.0, std::sqrt(norm2));

  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    cd z = solver.eigenvalues()[i];
    polish_root(work, reversed, z);
    if (scaled_residual(work, reversed, z) >= tolerance)
      throw RootFindingError("root residual above tolerance after polishing");
    roots.push_back(z);
  }
  return roots;
}

double mahler_via_roots(std::span<const cd> coeffs) {
  std::size_t degree = coeffs.empty() ? 0 : coeffs.size() - 1;
  while (degree > 0 && coeffs[degree] == cd(0, 0)) --degree;
  if (degree == 0) {
    if (coeffs.empty()) throw DomainError("empty polynomial");
    return std::abs(coeffs[0]);
  }
  const std::vector<cd> roots = polynomial_roots(coeffs);
  // Jensen: log M_0 = log|c| + sum of max(0, log|z_j|)
  double log_m0 = std::log(std::abs(coeffs[degree]));
  for (const cd& z : roots) log_m0 += std::max(0.0, std::log(std::abs(z)));
  return std::exp(log_m0);
}

double mahler_via_roots(const SignSequence& seq, int max_level) {
  if (seq.level() > max_level)
    throw CapacityError("sequence level exceeds the root-finding conditioning cap");
  const auto coeffs = to_complex(seq);
  return mahler_via_roots(coeffs);
}

void write_histogram1d_csv(const Histogram1D& h, std::ostream& out) {
  out << "bin_lo,bin_hi,mass\n";
  const double width = 1.0 / static_cast<double>(h.bins);
  for (std::size_t b = 0; b < h.bins; ++b)
    out << static_cast<double>(b) * width << ',' << static_cast<double>(b + 1) * width << ','
        << h.mass[b] << '\n';
}

void write_histogram2d_csv(const Histogram2D& h, std::ostream& out) {
  out << "x_lo,y_lo,mass,reference\n";
  const double side = 2.0 / static_cast<double>(h.cells);
  for (std::size_t ix = 0; ix < h.cells; ++ix)
    for (std::size_t iy = 0; iy < h.cells; ++iy)
      out << -1.0 + side * static_cast<double>(ix) << ',' << -1.0 + side * static_cast<double>(iy)
          << ',' << h.mass[ix * h.cells + iy] << ',' << h.reference[ix * h.cells + iy] << '\n';
}

}  // namespace rshapiro
