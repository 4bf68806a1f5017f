// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "rshapiro/crossings.hpp"
#include "rshapiro/distribution.hpp"
#include "rshapiro/eval.hpp"
#include "rshapiro/sign_sequence.hpp"

using namespace rshapiro;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", index, name,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buffer[512];
  std::vsnprintf(buffer, sizeof buffer, format, args);
  va_end(args);
  return buffer;
}

// 1: parallelogram law, modulus symmetry, antisymmetry, each < 1e-6 n
void criterion_identities() {
  bool pass = true;
  double worst_ratio = 0;
  int worst_k = 0;
  for (int k = 2; k <= 18; ++k) {
    const std::int64_t n = std::int64_t{1} << k;
    const std::size_t grid = std::size_t{1} << (k + 4);
    const double tol = eval_tolerance(n);
    const double d1 = check_parallelogram(k, grid);
    const double d2 = check_eq_1_2(k, grid);
    const double d3 = check_antisymmetry(k, grid);
    const double worst = std::max({d1, d2, d3});
    if (worst / tol > worst_ratio) {
      worst_ratio = worst / tol;
      worst_k = k;
    }
    pass = pass && worst < tol;
  }
  report(1, "exact identity suite (k=2..18)", pass,
         fmt("worst deviation %.3e of tolerance at k=%d", worst_ratio, worst_k));
}

// 2: lemma 3.1 subgrid residuals < 1e-6 sqrt(n)
void criterion_lemma31() {
  bool pass = true;
  double worst = 0;
  int worst_k = 0;
  for (int k = 2; k <= 18; ++k) {
    const double n = static_cast<double>(std::int64_t{1} << k);
    const double ratio = check_lemma_3_1(k) / (1e-6 * std::sqrt(n));
    if (ratio > worst) {
      worst = ratio;
      worst_k = k;
    }
    pass = pass && ratio < 1.0;
  }
  report(2, "lemma 3.1 doubling identity (k=2..18)", pass,
         fmt("worst residual %.3e of tolerance at k=%d", worst, worst_k));
}

// 3: theorem 2.1 bounds, plus the closed-form zeros at k=2
void criterion_theorem21() {
  bool pass = true;
  std::string detail;
  for (int k = 2; k <= 18; ++k) {
    const Theorem21Report rep = verify_theorem_2_1(k);
    if (!(rep.pass_zeros && rep.pass_intervals)) {
      pass = false;
      detail = fmt("k=%d zeros %lld/%lld intervals %lld/%lld", k,
                   static_cast<long long>(rep.zero_count),
                   static_cast<long long>(rep.bound_zeros),
                   static_cast<long long>(rep.interval_hits),
                   static_cast<long long>(rep.bound_intervals));
    }
    if (k == 2) {
      const double expected[] = {0.0, pi / 2, pi, 3 * pi / 2};
      bool angles_ok = rep.zero_angles.size() == 4;
      for (int i = 0; angles_ok && i < 4; ++i)
        angles_ok = std::abs(rep.zero_angles[std::size_t(i)] - expected[i]) < 1e-8;
      if (!angles_ok) {
        pass = false;
        detail = "k=2 closed-form zeros not recovered";
      }
    }
  }
  if (pass) {
    const Theorem21Report rep = verify_theorem_2_1(18);
    detail = fmt("all k pass; k=18 zeros %lld >= %lld, intervals %lld >= %lld",
                 static_cast<long long>(rep.zero_count), static_cast<long long>(rep.bound_zeros),
                 static_cast<long long>(rep.interval_hits),
                 static_cast<long long>(rep.bound_intervals));
  }
  report(3, "theorem 2.1 zero and interval bounds (k=2..18)", pass, detail);
}

// 4: theorem 2.2 matrix with exact bounds and the +-eta bijection
void criterion_theorem22() {
  bool pass = true;
  std::string detail = "all cells pass";
  if (theorem22_bound(262144, Rational(1, 4), Rational(1, 20)) != 26215) {
    report(4, "theorem 2.2 matrix", false, "bound arithmetic broken at the worked example");
    return;
  }
  const Rational epsilon(1, 20);
  for (int k : {14, 16, 18}) {
    for (const Rational& eta : {Rational(1, 10), Rational(1, 4), Rational(2, 5)}) {
      const Theorem22Report plus = verify_theorem_2_2(k, eta, epsilon);
      const Theorem22Report minus =
          verify_theorem_2_2(k, Rational(-eta.num, eta.den), epsilon);
      if (!plus.pass || !minus.pass) {
        pass = false;
        detail = fmt("k=%d eta=%lld/%lld count %lld vs bound %lld", k,
                     static_cast<long long>(eta.num), static_cast<long long>(eta.den),
                     static_cast<long long>(plus.zero_count),
                     static_cast<long long>(plus.bound));
      }
      if (plus.zero_count != minus.zero_count) {
        pass = false;
        detail = fmt("k=%d eta=%lld/%lld asymmetric counts %lld vs %lld", k,
                     static_cast<long long>(eta.num), static_cast<long long>(eta.den),
                     static_cast<long long>(plus.zero_count),
                     static_cast<long long>(minus.zero_count));
      }
    }
  }
  report(4, "theorem 2.2 matrix (k=14,16,18; eta=+-0.1,+-0.25,+-0.4)", pass, detail);
}

// 5: the A_j tuple mechanics with full interval certification
void criterion_signarg() {
  bool pass = true;
  std::string detail = "all k pass";
  for (int k = 2; k <= 16; ++k) {
    const SignChangeArgumentReport rep = verify_sign_change_argument(k);
    if (!rep.pass) {
      pass = false;
      detail = fmt("k=%d s=%lld<=%lld m=%lld>=%lld uncertified=%lld", k,
                   static_cast<long long>(rep.sign_changes),
                   static_cast<long long>(rep.sign_change_bound),
                   static_cast<long long>(rep.qualifying_pairs),
                   static_cast<long long>(rep.qualifying_bound),
                   static_cast<long long>(rep.uncertified_intervals));
    }
  }
  report(5, "sign-change argument mechanics (k=2..16)", pass, detail);
}

// 6: M_2 = sqrt(n) and the conjectured q-moment asymptotics at k=18
void criterion_moments() {
  bool pass = true;
  std::string detail;
  for (int k = 1; k <= 18; ++k) {
    const SignSequence p = build_rs_pair(k).p;
    const double root_n = std::sqrt(static_cast<double>(p.size()));
    const MomentReport m = moment(p, 2.0, std::max<std::size_t>(p.size() * 4, 8));
    if (std::abs(m.estimate - root_n) >= 1e-12 * root_n) {
      pass = false;
      detail = fmt("M_2 off at k=%d: %.17g vs %.17g", k, m.estimate, root_n);
    }
  }
  const SignSequence p18 = build_rs_pair(18).p;
  for (double q : {4.0, 6.0, 8.0}) {
    const MomentReport m = moment(p18, q, std::size_t{1} << 22);
    if (std::abs(m.ratio - 1.0) >= 0.05) {
      pass = false;
      detail += fmt(" q=%g ratio %.4f", q, m.ratio);
    } else {
      detail += fmt("q=%g ratio %.4f; ", q, m.ratio);
    }
  }
  report(6, "moment exactness and asymptotics", pass, detail);
}

// 7: Saffari and Montgomery limits as regression thresholds
void criterion_distribution() {
  bool pass = true;
  std::string detail;
  double last = 2.0;
  for (int k : {10, 12, 14, 16, 18}) {
    const SignSequence p = build_rs_pair(k).p;
    const Histogram1D h = value_distribution(p, std::size_t{1} << 22, 64);
    detail += fmt("ks(%d)=%.4f ", k, h.ks_statistic);
    if (h.ks_statistic >= last) pass = false;
    last = h.ks_statistic;
    if (k == 18 && h.ks_statistic >= 0.05) pass = false;
  }
  const SignSequence p18 = build_rs_pair(18).p;
  const Histogram2D h2 = planar_distribution(p18, std::size_t{1} << 22, 16);
  detail += fmt("max2d=%.4f", h2.max_cell_error);
  if (h2.max_cell_error >= 0.02) pass = false;
  report(7, "value distribution limits (KS + planar)", pass, detail);
}

// 8: the two Mahler routes agree; strict power-mean ordering
void criterion_mahler() {
  bool pass = true;
  std::string detail;
  for (int k = 1; k <= 8; ++k) {
    const SignSequence p = build_rs_pair(k).p;
    const double roots = mahler_via_roots(p);
    const MahlerReport quad = mahler_quadrature(p, std::size_t{1} << 20);
    const double gap = std::abs(quad.estimate / roots - 1.0);
    if (gap >= 1e-6) {
      pass = false;
      detail += fmt("k=%d gap %.2e ", k, gap);
    }
    if (!(roots < std::sqrt(static_cast<double>(p.size())))) {
      pass = false;
      detail += fmt("k=%d M0 %.6f !< sqrt(n) ", k, roots);
    }
  }
  if (pass) {
    const SignSequence p8 = build_rs_pair(8).p;
    detail = fmt("M0(P_8)=%.9f, routes agree to 1e-6 for k<=8", mahler_via_roots(p8));
  }
  report(8, "Mahler measure cross-validation (k<=8)", pass, detail);
}

}  // namespace

int main() {
  criterion_identities();
  criterion_lemma31();
  criterion_theorem21();
  criterion_theorem22();
  criterion_signarg();
  criterion_moments();
  criterion_distribution();
  criterion_mahler();
  if (failures == 0)
    std::printf("acceptance: all 8 criteria pass\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
