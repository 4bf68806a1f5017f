#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rshapiro/crossings.hpp"
#include "rshapiro/sign_sequence.hpp"

using namespace rshapiro;
using std::numbers::pi;

namespace {

// Closed-form small case: R_2(t) = 4 + 2cos t - 2cos 3t, independent of the
// transform pipeline.
double r2_closed_form(double t) { return 4.0 + 2.0 * std::cos(t) - 2.0 * std::cos(3.0 * t); }

std::vector<double> r2_samples(std::size_t n_grid) {
  std::vector<double> s(n_grid);
  for (std::size_t i = 0; i < n_grid; ++i)
    s[i] = r2_closed_form(2.0 * pi * double(i) / double(n_grid));
  return s;
}

}  // namespace

TEST_CASE("closed-form R_2 at level 4: four distinct zeros") {
  // cos t = cos 3t <=> sin 2t sin t = 0: zeros at 0, pi/2, pi, 3pi/2, of
  // which 0 and pi are touch points certifiable only by exact arithmetic.
  const std::size_t N = 64;
  const auto samples = r2_samples(N);
  const Autocorrelation ac = autocorrelation(build_rs_pair(2).p);

  CountOptions opt;
  opt.ambiguity_band = ambiguity_band(4);
  opt.oracle = r2_closed_form;
  opt.exact_points = exact_eighth_angle_points(ac, 4, 1, N);

  const CrossingReport rep = count_level_crossings(samples, 4.0, opt);
  REQUIRE(rep.certified_count == 4);
  REQUIRE(rep.crossings.size() == 4);
  const double expected[] = {0.0, pi / 2, pi, 3 * pi / 2};
  for (int i = 0; i < 4; ++i) {
    CHECK(rep.crossings[i].exact);
    CHECK(std::abs(rep.crossings[i].angle - expected[i]) < 1e-8);
    CHECK(rep.crossings[i].residual == 0.0);
  }
}

TEST_CASE("without exact certificates only the two strict crossings count") {
  const std::size_t N = 64;
  const auto samples = r2_samples(N);
  CountOptions opt;
  opt.ambiguity_band = ambiguity_band(4);
  const CrossingReport rep = count_level_crossings(samples, 4.0, opt);
  CHECK(rep.certified_count == 2);
  CHECK(rep.ambiguous_cells > 0);
}

TEST_CASE("degenerate inputs") {
  const std::vector<double> flat(32, 1.5);

  CountOptions opt;
  opt.ambiguity_band = 1e-7;
  SUBCASE("constant samples equal to the level") {
    const CrossingReport rep = count_level_crossings(flat, 1.5, opt);
    CHECK(rep.certified_count == 0);
    CHECK(rep.ambiguous_cells == 32);
  }
  SUBCASE("level above the maximum") {
    const CrossingReport rep = count_level_crossings(flat, 9.0, opt);
    CHECK(rep.certified_count == 0);
    CHECK(rep.ambiguous_cells == 0);
  }
}

TEST_CASE("refinement residual on an independent function") {
  const std::size_t N = 64;
  std::vector<double> samples(N);
  for (std::size_t i = 0; i < N; ++i) samples[i] = std::sin(2.0 * pi * double(i) / double(N));

  CountOptions opt;
  opt.ambiguity_band = 1e-9;
  opt.refine = true;
  opt.residual_target = 1e-10;
  opt.oracle = [](double t) { return std::sin(t); };

  const CrossingReport rep = count_level_crossings(samples, 0.5, opt);
  REQUIRE(rep.certified_count == 2);
  CHECK(std::abs(rep.crossings[0].angle - pi / 6) < 1e-9);
  CHECK(std::abs(rep.crossings[1].angle - 5 * pi / 6) < 1e-9);
  for (const auto& c : rep.crossings) CHECK(c.residual < 1e-10);
}

TEST_CASE("certified count never decreases with oversampling") {
  const SignSequence p = build_rs_pair(6).p;
  const std::int64_t n = std::int64_t(p.size());
  const Autocorrelation ac = autocorrelation(p);
  std::int64_t last = -1;
  for (std::size_t oversample : {8, 16, 32, 64}) {
    const std::size_t N = oversample * std::size_t(n);
    const RealGrid r = modulus_squared(eval_unit_circle(p, N));
    CountOptions opt;
    opt.ambiguity_band = ambiguity_band(n);
    opt.exact_points = exact_eighth_angle_points(ac, n, 1, N);
    opt.oracle = [&](double t) { return modulus_squared_point(p, t); };
    const CrossingReport rep = count_level_crossings(r.values, double(n), opt);
    CHECK(rep.certified_count >= last);
    last = rep.certified_count;
  }
}

TEST_CASE("theorem 2.1 at k=2: the closed-form case") {
  const Theorem21Report rep = verify_theorem_2_1(2);
  CHECK(rep.n == 4);
  CHECK(rep.bound_zeros == 2);
  CHECK(rep.bound_intervals == 4);
  REQUIRE(rep.zero_count == 4);
  REQUIRE(rep.interval_hits == 4);
  CHECK(rep.pass_zeros);
  CHECK(rep.pass_intervals);
  REQUIRE(rep.zero_angles.size() == 4);
  const double expected[] = {0.0, pi / 2, pi, 3 * pi / 2};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(rep.zero_angles[i] - expected[i]) < 1e-8);
}

TEST_CASE("theorem 2.1 bounds hold through k=10") {
  for (int k = 3; k <= 10; ++k) {
    const Theorem21Report rep = verify_theorem_2_1(k);
    const std::int64_t n = std::int64_t{1} << k;
    CHECK(rep.bound_zeros == n / 4 + 1);
    CHECK(rep.bound_intervals == n / 2 + 2);
    CHECK(rep.pass_zeros);
    CHECK(rep.pass_intervals);
    for (std::size_t i = 1; i < rep.zero_angles.size(); ++i)
      REQUIRE(rep.zero_angles[i] > rep.zero_angles[i - 1]);
  }
  // regression: certified counts at k=10, frozen from the first run
  const Theorem21Report rep = verify_theorem_2_1(10);
  CHECK(rep.zero_count >= 257);
  CHECK(rep.zero_count == 1076);      // frozen from the first run
  CHECK(rep.interval_hits == 904);    // frozen from the first run
}

TEST_CASE("theorem 2.2 bound arithmetic is exact") {
  CHECK(parse_decimal("0.25") == Rational(1, 4));
  CHECK(parse_decimal("-0.4") == Rational(-2, 5));
  CHECK(parse_decimal("0.05") == Rational(1, 20));
  CHECK(parse_decimal("1") == Rational(1, 1));
  CHECK_THROWS_AS(parse_decimal("abc"), DomainError);

  // worked example: k=18, eta=0.25, eps=0.05 -> ceil(0.2 * 262144 / 2)
  CHECK(theorem22_bound(262144, Rational(1, 4), Rational(1, 20)) == 26215);
  CHECK(theorem22_bound(1024, Rational(1, 4), Rational(1, 20)) == 103);
  // eta = 0 defers to the Theorem 2.1 bound
  CHECK(theorem22_bound(1024, Rational(0, 1), Rational(1, 20)) == 257);
}

TEST_CASE("theorem 2.2 verifier") {
  CHECK_THROWS_AS(verify_theorem_2_2(4, Rational(3, 5), Rational(1, 20)), DomainError);
  CHECK_THROWS_AS(verify_theorem_2_2(4, Rational(1, 2), Rational(1, 20)), DomainError);

  const Theorem22Report plus = verify_theorem_2_2(10, Rational(1, 4), Rational(1, 20));
  CHECK(plus.bound == 103);
  CHECK(plus.pass);
  CHECK(plus.zero_count >= plus.bound);

  // crossings at (1+eta)n and (1-eta)n are in bijection under t -> t+pi
  const Theorem22Report minus = verify_theorem_2_2(10, Rational(-1, 4), Rational(1, 20));
  CHECK(minus.zero_count == plus.zero_count);

  const Theorem22Report zero = verify_theorem_2_2(8, Rational(0, 1), Rational(1, 20));
  const Theorem21Report t21 = verify_theorem_2_1(8);
  CHECK(zero.zero_count == t21.zero_count);
}

TEST_CASE("lemma 3.1 hand cases and residuals") {
  const SignSequence p2 = build_rs_pair(2).p;
  // P_2(1) = 2 = 2 P_0(1); P_2(i) = 2i = (-1)^0 2i Q_0(i)
  CHECK(std::abs(eval_point(p2, 0.0) - std::complex<double>(2, 0)) < 1e-14);
  CHECK(std::abs(eval_point(p2, pi / 2) - std::complex<double>(0, 2)) < 1e-14);

  for (int k = 2; k <= 12; ++k) {
    const double n = double(std::int64_t{1} << k);
    CHECK(check_lemma_3_1(k) < 1e-6 * std::sqrt(n));
  }
}

TEST_CASE("antisymmetry R_k(t) - n = n - R_k(t + pi)") {
  const SignSequence p5 = build_rs_pair(5).p;
  const double n = 32.0;
  const double a = modulus_squared_point(p5, 0.7) - n;
  const double b = modulus_squared_point(p5, 0.7 + pi) - n;
  CHECK(std::abs(a + b) < 1e-9 * n);

  for (int k = 2; k <= 12; ++k) {
    const std::int64_t nk = std::int64_t{1} << k;
    CHECK(check_antisymmetry(k, std::size_t(4) * nk) < eval_tolerance(nk));
  }
}

TEST_CASE("sign-change argument at k=2: fully degenerate tuple") {
  // R_0 = 1 and n/4 = 1, so A_j = 0 for every j.
  const SignChangeArgumentReport rep = verify_sign_change_argument(2);
  CHECK(rep.sign_changes == 0);
  CHECK(rep.sign_change_bound == 0);
  CHECK(rep.qualifying_pairs == 4);
  CHECK(rep.qualifying_bound == 4);
  CHECK(rep.uncertified_intervals == 0);
  CHECK(rep.pass);
  REQUIRE(rep.a_tuple.size() == 5);
  for (double a : rep.a_tuple) CHECK(a == 0.0);
}

TEST_CASE("sign-change argument bounds and certification") {
  for (int k = 3; k <= 12; ++k) {
    const SignChangeArgumentReport rep = verify_sign_change_argument(k);
    const std::int64_t n = std::int64_t{1} << k;
    CHECK(rep.sign_changes <= n / 2 - 2);
    CHECK(rep.qualifying_pairs >= n / 2 + 2);
    CHECK(rep.uncertified_intervals == 0);
    CHECK(rep.pass);
    // every adjacent pair is sign-changing or qualifying (zeros may overlap)
    CHECK(rep.qualifying_pairs + rep.sign_changes >= n);
    REQUIRE(std::int64_t(rep.a_tuple.size()) == n + 1);
    CHECK(rep.a_tuple.front() == rep.a_tuple.back());
  }
}
