#include "rshapiro/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "rshapiro/sign_sequence.hpp"

namespace rshapiro {

namespace {

using std::numbers::pi;

// Positions live on the x16 refinement subgrid: grid index i sits at 16*i.
constexpr std::uint64_t kSub = 16;

double angle_of_position(std::uint64_t pos, std::size_t grid_size) {
  return 2.0 * pi * static_cast<double>(pos) / static_cast<double>(kSub * grid_size);
}

double fold_angle(double t) {
  const double two_pi = 2.0 * pi;
  double r = std::fmod(t, two_pi);
  if (r < 0) r += two_pi;
  return r;
}

struct RefinedBracket {
  double lo = 0, hi = 0, angle = 0, residual = 0;
};

// Bisects (lo, hi) with the oracle until the bracket is narrower than
// width_target and, when requested, the midpoint residual is under
// residual_target. The flanking signs come from resolved samples; if the
// oracle disagrees at the endpoints the midpoint is reported as-is.
RefinedBracket bisect_bracket(const std::function<double(double)>& oracle, double level,
                              double lo, double hi, double width_target,
                              double residual_target) {
  double flo = oracle(lo) - level;
  double fhi = oracle(hi) - level;
  if (flo == 0.0) return {lo, lo, lo, 0.0};
  if (fhi == 0.0) return {hi, hi, hi, 0.0};
  if ((flo > 0) == (fhi > 0)) {
    const double mid = 0.5 * (lo + hi);
    return {lo, hi, mid, std::abs(oracle(mid) - level)};
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = oracle(mid) - level;
    if (fm == 0.0) return {lo, hi, mid, 0.0};
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    if (hi - lo < width_target) {
      const double best = std::min(std::abs(flo), std::abs(fhi));
      if (residual_target <= 0 || best < residual_target) break;
    }
  }
  const double mid = 0.5 * (lo + hi);
  return {lo, hi, mid, std::abs(oracle(mid) - level)};
}

}  // namespace

std::vector<ExactGridPoint> exact_eighth_angle_points(const Autocorrelation& ac,
                                                      std::int64_t level_num,
                                                      std::int64_t level_den,
                                                      std::size_t grid_size) {
  if (grid_size % 8 != 0) throw DomainError("grid size must be divisible by 8");
  if (level_den <= 0) throw DomainError("level denominator must be positive");
  const auto values = eighth_angle_values(ac);
  std::vector<ExactGridPoint> points;
  points.reserve(8);
  for (int q = 0; q < 8; ++q) {
    // sign of (units + halves*sqrt2/2) - level_num/level_den, exactly
    const ExactCircleValue scaled{values[std::size_t(q)].units * level_den - level_num,
                                  values[std::size_t(q)].sqrt2_halves * level_den};
    points.push_back({std::size_t(q) * (grid_size / 8), exact_sign(scaled)});
  }
  return points;
}

CrossingReport count_level_crossings(std::span<const double> samples, double level,
                                     const CountOptions& options) {
  const std::size_t n_grid = samples.size();
  CrossingReport rep;
  rep.level = level;
  rep.grid_size = n_grid;
  if (n_grid == 0) return rep;

  const double band = std::max(options.ambiguity_band, 0.0);
  const double oracle_band = options.oracle_band > 0 ? options.oracle_band : band * 1e-4;
  const double width_target = 2.0 * pi / (64.0 * static_cast<double>(n_grid));

  // -1 / +1 resolved, 0 unresolved; exact certificates override
  std::vector<std::int8_t> cls(n_grid);
  std::vector<std::uint8_t> exact_zero(n_grid, 0);
  for (std::size_t i = 0; i < n_grid; ++i) {
    const double d = samples[i] - level;
    cls[i] = (std::abs(d) < band || d == 0.0) ? std::int8_t(0) : (d > 0 ? std::int8_t(1) : std::int8_t(-1));
  }
  for (const ExactGridPoint& ep : options.exact_points) {
    if (ep.index >= n_grid) throw DomainError("exact point index outside the grid");
    cls[ep.index] = static_cast<std::int8_t>(ep.sign);
    exact_zero[ep.index] = (ep.sign == 0) ? 1 : 0;
  }

  for (std::size_t i = 0; i < n_grid; ++i)
    if (cls[i] == 0 && !exact_zero[i]) ++rep.ambiguous_cells;

  std::vector<std::size_t> resolved;
  for (std::size_t i = 0; i < n_grid; ++i)
    if (cls[i] != 0) resolved.push_back(i);

  struct Pending {
    bool exact;
    std::uint64_t lo, hi;  // subgrid positions, unwrapped
  };
  std::vector<Pending> found;

  if (resolved.empty()) {
    for (std::size_t i = 0; i < n_grid; ++i)
      if (exact_zero[i]) found.push_back({true, kSub * i, kSub * i});
  } else {
    for (std::size_t r = 0; r < resolved.size(); ++r) {
      const std::uint64_t a = resolved[r];
      const std::uint64_t b =
          (r + 1 < resolved.size()) ? resolved[r + 1] : resolved[0] + n_grid;
      const int sign_a = cls[a % n_grid];
      const int sign_b = cls[b % n_grid];

      std::vector<std::uint64_t> zs;  // exact zeros strictly inside the gap
      for (std::uint64_t g = a + 1; g < b; ++g)
        if (exact_zero[g % n_grid]) zs.push_back(kSub * g);

      // resolved sign sequence across the gap, refined by the oracle
      std::vector<std::pair<std::uint64_t, int>> pts;
      pts.emplace_back(kSub * a, sign_a);
      // wide gaps are degenerate plateaus; subdividing them cannot resolve
      if (b > a + 1 && options.oracle && b - a <= 256) {
        for (std::uint64_t cell = a; cell < b; ++cell) {
          for (std::uint64_t s = 1; s < kSub; ++s) {
            const std::uint64_t pos = kSub * cell + s;
            const double d = options.oracle(angle_of_position(pos, n_grid)) - level;
            if (std::abs(d) >= oracle_band && d != 0.0) pts.emplace_back(pos, d > 0 ? 1 : -1);
          }
          if (cell + 1 < b && !exact_zero[(cell + 1) % n_grid]) {
            const std::uint64_t pos = kSub * (cell + 1);
            const double d = options.oracle(angle_of_position(pos, n_grid)) - level;
            if (std::abs(d) >= oracle_band && d != 0.0) pts.emplace_back(pos, d > 0 ? 1 : -1);
          }
        }
        std::sort(pts.begin(), pts.end());
      }
      pts.emplace_back(kSub * b, sign_b);

      // each sign alternation brackets a zero; brackets holding an exact zero
      // are dropped so certificates and brackets never count the same zero
      for (std::size_t p = 1; p < pts.size(); ++p) {
        if (pts[p - 1].second != pts[p].second) {
          const std::uint64_t lo = pts[p - 1].first;
          const std::uint64_t hi = pts[p].first;
          const bool holds_exact =
              std::any_of(zs.begin(), zs.end(),
                          [&](std::uint64_t z) { return lo < z && z < hi; });
          if (!holds_exact) found.push_back({false, lo, hi});
        }
      }
      for (std::uint64_t z : zs) found.push_back({true, z, z});
    }
  }

  rep.certified_count = static_cast<std::int64_t>(found.size());
  rep.crossings.reserve(found.size());
  for (const Pending& p : found) {
    Crossing c;
    c.exact = p.exact;
    c.bracket_lo = p.lo;
    c.bracket_hi = p.hi;
    c.cell = static_cast<std::size_t>((p.lo / kSub) % n_grid);
    if (p.exact) {
      c.angle = 2.0 * pi * static_cast<double>(c.cell) / static_cast<double>(n_grid);
      c.residual = 0.0;
    } else if (options.refine && options.oracle) {
      const RefinedBracket rb =
          bisect_bracket(options.oracle, level, angle_of_position(p.lo, n_grid),
                         angle_of_position(p.hi, n_grid), width_target,
                         options.residual_target);
      c.angle = fold_angle(rb.angle);
      c.residual = rb.residual;
    } else {
      c.angle = fold_angle(0.5 * (angle_of_position(p.lo, n_grid) +
                                  angle_of_position(p.hi, n_grid)));
      c.residual = std::numeric_limits<double>::quiet_NaN();
    }
    rep.crossings.push_back(c);
  }
  std::sort(rep.crossings.begin(), rep.crossings.end(),
            [](const Crossing& x, const Crossing& y) { return x.angle < y.angle; });
  return rep;
}

namespace {

// Shared machinery for the theorem verifiers: counts certified zeros of
// R_k = level on an oversampled grid and marks which coarse intervals
// [t_j, t_{j+1}], t_j = 2*pi*j/n, certifiably contain one.
struct LevelCertification {
  CrossingReport report;
  std::vector<std::uint8_t> interval_hit;
  std::int64_t interval_hits = 0;
};

LevelCertification certify_level(const SignSequence& p, const Autocorrelation& ac,
                                 std::int64_t level_num, std::int64_t level_den,
                                 std::size_t oversample) {
  const std::int64_t n = static_cast<std::int64_t>(p.size());
  const std::size_t n_grid = oversample * p.size();
  const double level = static_cast<double>(level_num) / static_cast<double>(level_den);

  const RealGrid samples = modulus_squared(eval_unit_circle(p, n_grid));

  CountOptions opt;
  opt.ambiguity_band = ambiguity_band(n);
  opt.exact_points = exact_eighth_angle_points(ac, level_num, level_den, n_grid);
  opt.oracle = [&p](double t) { return modulus_squared_point(p, t); };

  LevelCertification cert;
  cert.report = count_level_crossings(samples.values, level, opt);
  cert.interval_hit.assign(p.size(), 0);

  const std::uint64_t interval_span = kSub * oversample;  // subgrid units per interval
  auto credit = [&](std::uint64_t j) { cert.interval_hit[j % p.size()] = 1; };

  for (const Crossing& c : cert.report.crossings) {
    if (c.exact) {
      // a zero exactly at a grid angle; at a coarse boundary it belongs to
      // both adjacent closed intervals
      const std::uint64_t pos = c.bracket_lo % (kSub * n_grid);
      if (pos % interval_span == 0) {
        const std::uint64_t j = pos / interval_span;
        credit(j);
        credit(j + p.size() - 1);
      } else {
        credit(pos / interval_span);
      }
      continue;
    }
    const std::uint64_t j_lo = c.bracket_lo / interval_span;
    if (c.bracket_hi <= (j_lo + 1) * interval_span) {
      credit(j_lo);
      continue;
    }
    // bracket spans a coarse boundary: narrow it with the oracle
    const RefinedBracket rb = bisect_bracket(
        opt.oracle, level, angle_of_position(c.bracket_lo, n_grid),
        angle_of_position(c.bracket_hi, n_grid),
        2.0 * pi / (64.0 * static_cast<double>(n_grid)), 0.0);
    const double scale = static_cast<double>(n) / (2.0 * pi);
    const auto jl = static_cast<std::int64_t>(std::floor(rb.lo * scale));
    const auto jh = static_cast<std::int64_t>(std::floor(rb.hi * scale));
    if (jl == jh) {
      credit(static_cast<std::uint64_t>(jl));
    } else if (jh == jl + 1) {
      // still straddling after refinement: treat as a boundary zero
      credit(static_cast<std::uint64_t>(jh));
      credit(static_cast<std::uint64_t>(jh + n - 1));
    }
    // wider than one boundary: tangential mess, certify nothing
  }
  for (const std::uint8_t h : cert.interval_hit) cert.interval_hits += h;
  return cert;
}

}  // namespace

Theorem21Report verify_theorem_2_1(int k, std::size_t oversample) {
  if (k < 2) throw DomainError("theorem 2.1 verification needs k >= 2");
  if (oversample < 2 || !std::has_single_bit(oversample))
    throw DomainError("oversample must be a power of two >= 2");

  const SignSequence p = build_rs_pair(k).p;
  const Autocorrelation ac = autocorrelation(p);
  const std::int64_t n = static_cast<std::int64_t>(p.size());
  const LevelCertification cert = certify_level(p, ac, n, 1, oversample);

  Theorem21Report rep;
  rep.k = k;
  rep.n = n;
  rep.grid_size = oversample * p.size();
  rep.zero_count = cert.report.certified_count;
  rep.bound_zeros = n / 4 + 1;
  rep.interval_hits = cert.interval_hits;
  rep.bound_intervals = n / 2 + 2;
  rep.pass_zeros = rep.zero_count >= rep.bound_zeros;
  rep.pass_intervals = rep.interval_hits >= rep.bound_intervals;
  rep.interval_hit = cert.interval_hit;
  rep.zero_angles.reserve(cert.report.crossings.size());
  for (const Crossing& c : cert.report.crossings) rep.zero_angles.push_back(c.angle);
  return rep;
}

std::int64_t theorem22_bound(std::int64_t n, const Rational& eta, const Rational& epsilon) {
  if (eta.num == 0) return n / 4 + 1;  // eta = 0 is Theorem 2.1
  const Rational margin = Rational(1, 2) - eta.abs() - epsilon;
  const Rational bound = margin * Rational(n, 2);
  return std::max<std::int64_t>(ceil_rational(bound), 0);
}

Theorem22Report verify_theorem_2_2(int k, const Rational& eta, const Rational& epsilon,
                                   std::size_t oversample) {
  if (k < 2) throw DomainError("theorem 2.2 verification needs k >= 2");
  if (!(eta.abs() < Rational(1, 2))) throw DomainError("eta must satisfy |eta| < 1/2");
  if (epsilon.num <= 0) throw DomainError("epsilon must be positive");
  if (oversample < 2 || !std::has_single_bit(oversample))
    throw DomainError("oversample must be a power of two >= 2");

  const SignSequence p = build_rs_pair(k).p;
  const Autocorrelation ac = autocorrelation(p);
  const std::int64_t n = static_cast<std::int64_t>(p.size());

  // level (1+eta)n as an exact rational
  const std::int64_t level_num = (eta.den + eta.num) * n;
  const std::int64_t level_den = eta.den;

  Theorem22Report rep;
  rep.k = k;
  rep.n = n;
  rep.eta = eta;
  rep.epsilon = epsilon;
  rep.level = static_cast<double>(level_num) / static_cast<double>(level_den);
  rep.bound = theorem22_bound(n, eta, epsilon);

  // near-tangential crossings at levels close to the extremes may need a
  // finer grid; escalate to x64 before reporting failure
  for (std::size_t os = oversample;; os *= 2) {
    const LevelCertification cert = certify_level(p, ac, level_num, level_den, os);
    rep.zero_count = cert.report.certified_count;
    rep.oversample_used = os;
    rep.pass = rep.zero_count >= rep.bound;
    if (rep.pass || os >= 64) break;
  }
  return rep;
}

double check_lemma_3_1(int k) {
  if (k < 2) throw DomainError("lemma 3.1 needs k >= 2");
  const std::size_t n = std::size_t{1} << k;
  const SignSequence pk = build_rs_pair(k).p;
  const RSPair low = build_rs_pair(k - 2);
  const CircleGrid gp = eval_unit_circle(pk, n);
  const CircleGrid gp2 = eval_unit_circle(low.p, n);
  const CircleGrid gq2 = eval_unit_circle(low.q, n);

  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> expected;
    if (j % 2 == 0) {
      expected = 2.0 * gp2.values[j];
    } else {
      const double sign = ((j - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
      expected = std::complex<double>(0.0, 2.0 * sign) * gq2.values[j];
    }
    worst = std::max(worst, std::abs(gp.values[j] - expected));
  }
  return worst;
}

double check_antisymmetry(int k, std::size_t grid_size) {
  if (grid_size % 2 != 0) throw DomainError("grid size must be even");
  const SignSequence p = build_rs_pair(k).p;
  const RealGrid r = modulus_squared(eval_unit_circle(p, grid_size));
  const double n = static_cast<double>(p.size());
  const std::size_t half = grid_size / 2;
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_size; ++i)
    worst = std::max(worst,
                     std::abs((r.values[i] - n) + (r.values[(i + half) % grid_size] - n)));
  return worst;
}

SignChangeArgumentReport verify_sign_change_argument(int k, std::size_t oversample) {
  if (k < 2) throw DomainError("the sign-change argument needs k >= 2");
  const std::int64_t n = std::int64_t{1} << k;
  const SignSequence low = build_rs_pair(k - 2).p;
  const Autocorrelation ac_low = autocorrelation(low);
  const std::int64_t quarter = n / 4;

  // A_j = R_{k-2}(t_j) - n/4 on the n-grid, t_j = 2*pi*j/n, j = 0..n
  const RealGrid r = modulus_squared(eval_unit_circle(low, std::size_t(n)));
  const auto eighth = eighth_angle_values(ac_low);

  SignChangeArgumentReport rep;
  rep.k = k;
  rep.n = n;
  rep.a_tuple.resize(std::size_t(n) + 1);
  std::vector<std::int8_t> cls(std::size_t(n) + 1);
  const double band = 1e-10 * static_cast<double>(quarter);
  for (std::int64_t j = 0; j <= n; ++j) {
    const double a = r.values[std::size_t(j % n)] - static_cast<double>(quarter);
    rep.a_tuple[std::size_t(j)] = a;
    cls[std::size_t(j)] = (std::abs(a) < band || a == 0.0)
                              ? std::int8_t(0)
                              : (a > 0 ? std::int8_t(1) : std::int8_t(-1));
    if ((8 * j) % n == 0) {
      // eighth angle: classify by exact integer arithmetic instead
      const auto q = std::size_t((8 * j / n) % 8);
      const ExactCircleValue exact = subtract_integer(eighth[q], quarter);
      cls[std::size_t(j)] = static_cast<std::int8_t>(exact_sign(exact));
      if (exact.is_zero()) rep.a_tuple[std::size_t(j)] = 0.0;
    }
  }

  // s: strict sign changes across the linear tuple, zeros skipped
  int last = 0;
  for (std::int64_t j = 0; j <= n; ++j) {
    if (cls[std::size_t(j)] == 0) continue;
    if (last != 0 && cls[std::size_t(j)] != last) ++rep.sign_changes;
    last = cls[std::size_t(j)];
  }
  // m: adjacent pairs with A_j A_{j+1} >= 0 (zeros qualify either way)
  for (std::int64_t j = 0; j < n; ++j) {
    const int s0 = cls[std::size_t(j)], s1 = cls[std::size_t(j) + 1];
    if (s0 == 0 || s1 == 0 || s0 == s1) ++rep.qualifying_pairs;
  }
  rep.sign_change_bound = n / 2 - 2;
  rep.qualifying_bound = n / 2 + 2;

  // every qualifying closed interval must hold a certified zero of R_k = n
  const Theorem21Report t21 = verify_theorem_2_1(k, oversample);
  for (std::int64_t j = 0; j < n; ++j) {
    const int s0 = cls[std::size_t(j)], s1 = cls[std::size_t(j) + 1];
    const bool qualifying = (s0 == 0 || s1 == 0 || s0 == s1);
    if (qualifying && !t21.interval_hit[std::size_t(j)]) ++rep.uncertified_intervals;
  }
  rep.pass = rep.sign_changes <= rep.sign_change_bound &&
             rep.qualifying_pairs >= rep.qualifying_bound && rep.uncertified_intervals == 0;
  return rep;
}

void write_crossings_csv(const CrossingReport& report, std::ostream& out) {
  out << "cell,angle,residual,exact\n";
  for (const Crossing& c : report.crossings)
    out << c.cell << ',' << c.angle << ',' << c.residual << ',' << (c.exact ? 1 : 0) << '\n';
}

}  // namespace rshapiro
