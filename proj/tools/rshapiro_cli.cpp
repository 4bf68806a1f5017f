// Command-line front end: one subcommand per verified statement, reports in
// a stable versioned schema. Exit codes: 0 all asserted bounds pass, 1 a
// bound failed, 2 usage/domain error, 3 capacity/resource error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rshapiro/crossings.hpp"
#include "rshapiro/distribution.hpp"
#include "rshapiro/eval.hpp"
#include "rshapiro/report_io.hpp"
#include "rshapiro/sign_sequence.hpp"

namespace {

using nlohmann::json;
using namespace rshapiro;

struct CommonArgs {
  int k = 4;
  std::size_t oversample = 16;
  std::string eta = "0";
  std::string epsilon = "0.05";
  std::vector<double> q = {2.0};
  std::size_t bins = 64;
  std::size_t grid = 0;  // 0: 2^(k+4)
  std::size_t cells = 16;
  std::string out;
  std::string format = "json";
  std::string encoding = "lines";
  int threads = 1;
};

std::size_t default_grid(const CommonArgs& a) {
  return a.grid ? a.grid : (std::size_t{1} << (a.k + 4));
}

void emit(const json& report, const CommonArgs& args) {
  if (args.out.empty()) {
    if (args.format == "csv")
      write_csv_report(report, std::cout);
    else
      std::cout << report.dump(2) << '\n';
    return;
  }
  std::ofstream file(args.out);
  if (!file) throw DomainError("cannot open output file: " + args.out);
  if (args.format == "csv")
    write_csv_report(report, file);
  else
    file << report.dump(2) << '\n';
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body,
                bool binary = false) {
  std::ofstream file(path, binary ? std::ios::binary : std::ios::out);
  if (!file) throw DomainError("cannot open output file: " + path);
  body(file);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_build(const CommonArgs& args) {
  const RSPair pair = build_rs_pair(args.k);
  json results = {{"n", pair.p.size()}, {"level", args.k}};
  if (!args.out.empty()) {
    const bool packed = args.encoding == "bits";
    for (const auto& [tag, seq] : {std::pair{"p", &pair.p}, std::pair{"q", &pair.q}}) {
      const std::string path = args.out + "." + tag + (packed ? ".bits" : ".txt");
      write_file(path, [&](std::ostream& os) {
        if (packed) {
          const auto bytes = pack_signs(*seq);
          os.write(reinterpret_cast<const char*>(bytes.data()),
                   static_cast<std::streamsize>(bytes.size()));
        } else {
          write_sign_lines(*seq, os);
        }
      }, packed);
      results[std::string("export_") + tag] = path;
    }
  } else {
    write_sign_lines(pair.p, std::cout);
  }
  if (!args.out.empty()) {
    json report = make_report("build", {{"k", args.k}, {"encoding", args.encoding}},
                              results, true);
    emit(report, CommonArgs{.out = "", .format = args.format});
  }
  return 0;
}

int run_eval(const CommonArgs& args) {
  const std::size_t grid = default_grid(args);
  const std::int64_t n = std::int64_t{1} << args.k;
  const double tol = eval_tolerance(n);

  const double parallelogram = check_parallelogram(args.k, grid);
  const double eq12 = check_eq_1_2(args.k, grid);

  const SignSequence p = build_rs_pair(args.k).p;
  const RealGrid r = modulus_squared(eval_unit_circle(p, grid));
  KahanSum sum;
  for (double v : r.values) sum.add(v);
  const double parseval = std::abs(sum.value() / double(grid) - double(n));

  if (!args.out.empty()) {
    const bool binary = ends_with(args.out, ".f64") || ends_with(args.out, ".bin");
    write_file(args.out, [&](std::ostream& os) {
      binary ? write_grid_f64(r, os) : write_grid_csv(r, os);
    }, binary);
  }

  const bool pass = parallelogram < tol && eq12 < tol && parseval < tol;
  json report = make_report(
      "eval", {{"k", args.k}, {"grid", grid}},
      {{"n", n},
       {"max_parallelogram_dev", parallelogram},
       {"max_eq12_dev", eq12},
       {"parseval_dev", parseval},
       {"tolerance", tol},
       {"grid_export", args.out}},
      pass);
  emit(report, CommonArgs{.out = "", .format = args.format});
  return pass ? 0 : 1;
}

int run_autocorr(const CommonArgs& args) {
  const SignSequence p = build_rs_pair(args.k).p;
  const Autocorrelation ac = autocorrelation(p);
  std::int64_t max_sidelobe = 0;
  for (std::size_t m = 1; m < ac.c.size(); ++m)
    max_sidelobe = std::max(max_sidelobe, std::abs(ac.c[m]));
  if (!args.out.empty())
    write_file(args.out, [&](std::ostream& os) { write_autocorrelation_csv(ac, os); });
  const bool pass = ac.c[0] == std::int64_t(p.size());
  json report = make_report("autocorr", {{"k", args.k}},
                            {{"n", p.size()},
                             {"c0", ac.c[0]},
                             {"max_abs_sidelobe", max_sidelobe},
                             {"export", args.out}},
                            pass);
  emit(report, CommonArgs{.out = "", .format = args.format});
  return pass ? 0 : 1;
}

int run_crossings(const CommonArgs& args) {
  const Rational eta = parse_decimal(args.eta);
  if (!(eta.abs() < Rational(1, 2))) throw DomainError("eta must satisfy |eta| < 1/2");
  const SignSequence p = build_rs_pair(args.k).p;
  const Autocorrelation ac = autocorrelation(p);
  const std::int64_t n = std::int64_t(p.size());
  const std::size_t grid = args.oversample * p.size();
  const std::int64_t level_num = (eta.den + eta.num) * n;
  const double level = double(level_num) / double(eta.den);

  const RealGrid r = modulus_squared(eval_unit_circle(p, grid));
  CountOptions opt;
  opt.ambiguity_band = ambiguity_band(n);
  opt.exact_points = exact_eighth_angle_points(ac, level_num, eta.den, grid);
  opt.oracle = [&p](double t) { return modulus_squared_point(p, t); };
  // pointwise refinement is Horner-priced; keep it to grids it can afford
  opt.refine = grid <= (std::size_t{1} << 16);
  opt.residual_target = opt.refine ? eval_tolerance(n) : 0.0;

  const CrossingReport rep = count_level_crossings(r.values, level, opt);
  if (!args.out.empty())
    write_file(args.out, [&](std::ostream& os) {
      write_csv_header(os, "cell,angle,residual,exact");
      for (const Crossing& c : rep.crossings)
        os << c.cell << ',' << c.angle << ',' << c.residual << ',' << (c.exact ? 1 : 0) << '\n';
    });
  json report = make_report("crossings",
                            {{"k", args.k}, {"eta", args.eta}, {"oversample", args.oversample}},
                            {{"level", level},
                             {"certified_count", rep.certified_count},
                             {"ambiguous_cells", rep.ambiguous_cells},
                             {"grid", rep.grid_size},
                             {"refined", opt.refine},
                             {"export", args.out}},
                            true);
  emit(report, CommonArgs{.out = "", .format = args.format});
  return 0;
}

int run_t21(const CommonArgs& args) {
  const Theorem21Report rep = verify_theorem_2_1(args.k, args.oversample);
  json report = make_report("verify-t21",
                            {{"k", args.k}, {"oversample", args.oversample}},
                            {{"n", rep.n},
                             {"grid", rep.grid_size},
                             {"zero_count", rep.zero_count},
                             {"bound_zeros", rep.bound_zeros},
                             {"interval_hits", rep.interval_hits},
                             {"bound_intervals", rep.bound_intervals},
                             {"pass_zeros", rep.pass_zeros},
                             {"pass_intervals", rep.pass_intervals}},
                            rep.pass_zeros && rep.pass_intervals);
  if (!args.out.empty())
    write_file(args.out, [&](std::ostream& os) {
      write_csv_header(os, "angle");
      for (double a : rep.zero_angles) os << a << '\n';
    });
  emit(report, CommonArgs{.out = "", .format = args.format});
  return (rep.pass_zeros && rep.pass_intervals) ? 0 : 1;
}

int run_t22(const CommonArgs& args) {
  const Theorem22Report rep = verify_theorem_2_2(args.k, parse_decimal(args.eta),
                                                 parse_decimal(args.epsilon), args.oversample);
  json report = make_report(
      "verify-t22",
      {{"k", args.k}, {"eta", args.eta}, {"epsilon", args.epsilon}, {"oversample", args.oversample}},
      {{"n", rep.n},
       {"level", rep.level},
       {"zero_count", rep.zero_count},
       {"bound", rep.bound},
       {"oversample_used", rep.oversample_used}},
      rep.pass);
  emit(report, CommonArgs{.out = "", .format = args.format});
  return rep.pass ? 0 : 1;
}

int run_lemma31(const CommonArgs& args) {
  const double residual = check_lemma_3_1(args.k);
  const double tol = 1e-6 * std::sqrt(double(std::int64_t{1} << args.k));
  const bool pass = residual < tol;
  emit(make_report("lemma31", {{"k", args.k}},
                   {{"max_residual", residual}, {"tolerance", tol}}, pass),
       CommonArgs{.out = args.out, .format = args.format});
  return pass ? 0 : 1;
}

int run_antisym(const CommonArgs& args) {
  const std::size_t grid = default_grid(args);
  const double dev = check_antisymmetry(args.k, grid);
  const double tol = eval_tolerance(std::int64_t{1} << args.k);
  const bool pass = dev < tol;
  emit(make_report("antisym", {{"k", args.k}, {"grid", grid}},
                   {{"max_deviation", dev}, {"tolerance", tol}}, pass),
       CommonArgs{.out = args.out, .format = args.format});
  return pass ? 0 : 1;
}

int run_signarg(const CommonArgs& args) {
  const SignChangeArgumentReport rep = verify_sign_change_argument(args.k, args.oversample);
  if (!args.out.empty())
    write_file(args.out, [&](std::ostream& os) {
      write_csv_header(os, "j,a_j");
      for (std::size_t j = 0; j < rep.a_tuple.size(); ++j) os << j << ',' << rep.a_tuple[j] << '\n';
    });
  json report = make_report("signarg",
                            {{"k", args.k}, {"oversample", args.oversample}},
                            {{"n", rep.n},
                             {"sign_changes", rep.sign_changes},
                             {"sign_change_bound", rep.sign_change_bound},
                             {"qualifying_pairs", rep.qualifying_pairs},
                             {"qualifying_bound", rep.qualifying_bound},
                             {"uncertified_intervals", rep.uncertified_intervals},
                             {"tuple_export", args.out}},
                            rep.pass);
  emit(report, CommonArgs{.out = "", .format = args.format});
  return rep.pass ? 0 : 1;
}

int run_dist1d(const CommonArgs& args) {
  const SignSequence p = build_rs_pair(args.k).p;
  const Histogram1D h = value_distribution(p, default_grid(args), args.bins);
  double total = 0;
  for (double m : h.mass) total += m;
  const bool pass = std::abs(total - 1.0) < 1e-9 && h.ks_statistic >= 0.0 &&
                    h.ks_statistic <= 1.0 && std::abs(h.mean - 0.5) < 1e-6;
  if (!args.out.empty())
    write_file(args.out, [&](std::ostream& os) { write_histogram1d_csv(h, os); });
  json report = make_report("dist1d",
                            {{"k", args.k}, {"grid", h.grid_size}, {"bins", args.bins}},
                            {{"ks_statistic", h.ks_statistic},
                             {"mean", h.mean},
                             {"total_mass", total},
                             {"export", args.out}},
                            pass);
  emit(report, CommonArgs{.out = "", .format = args.format});
  return pass ? 0 : 1;
}

int run_dist2d(const CommonArgs& args) {
  const SignSequence p = build_rs_pair(args.k).p;
  const Histogram2D h = planar_distribution(p, default_grid(args), args.cells);
  double total_mass = 0, total_ref = 0;
  for (std::size_t c = 0; c < h.mass.size(); ++c) {
    total_mass += h.mass[c];
    total_ref += h.reference[c];
  }
  const bool pass = std::abs(total_mass - 1.0) < 1e-9 && std::abs(total_ref - 1.0) < 1e-9;
  if (!args.out.empty())
    write_file(args.out, [&](std::ostream& os) { write_histogram2d_csv(h, os); });
  json report = make_report("dist2d",
                            {{"k", args.k}, {"grid", h.grid_size}, {"cells", args.cells}},
                            {{"max_cell_error", h.max_cell_error},
                             {"total_mass", total_mass},
                             {"total_reference", total_ref},
                             {"export", args.out}},
                            pass);
  emit(report, CommonArgs{.out = "", .format = args.format});
  return pass ? 0 : 1;
}

int run_moments(const CommonArgs& args) {
  const SignSequence p = build_rs_pair(args.k).p;
  const double root_n = std::sqrt(double(p.size()));
  bool pass = true;
  json entries = json::array();
  for (double q : args.q) {
    const MomentReport m = moment(p, q, default_grid(args));
    if (q == 2.0 && std::abs(m.estimate - root_n) >= 1e-12 * root_n) pass = false;
    entries.push_back({{"q", m.q},
                       {"estimate", m.estimate},
                       {"grid", m.grid_size},
                       {"exact", m.exact},
                       {"predicted", m.predicted},
                       {"ratio", m.ratio}});
  }
  emit(make_report("moments", {{"k", args.k}, {"grid", default_grid(args)}},
                   {{"moments", entries}}, pass),
       CommonArgs{.out = args.out, .format = args.format});
  return pass ? 0 : 1;
}

int run_mahler(const CommonArgs& args) {
  const SignSequence p = build_rs_pair(args.k).p;
  const MahlerReport quad = mahler_quadrature(p, default_grid(args));
  json results = {{"estimate", quad.estimate},
                  {"grid", quad.grid_size},
                  {"clip", quad.clip},
                  {"sensitivity_grid", quad.sensitivity_grid},
                  {"sensitivity_clip", quad.sensitivity_clip},
                  {"diagnostic", quad.diagnostic}};
  const double n = double(p.size());
  // q -> 0 limit of the conjectured normalizer: sqrt(2n)/sqrt(e)
  results["ratio_to_sqrt_2n_over_e"] = quad.estimate / std::sqrt(2.0 * n / std::exp(1.0));
  bool pass = !quad.diagnostic;
  if (args.k <= 8) {
    const double roots = mahler_via_roots(p);
    const double gap = std::abs(quad.estimate / roots - 1.0);
    results["roots_estimate"] = roots;
    results["relative_gap"] = gap;
    pass = pass && gap < 1e-6;
  }
  emit(make_report("mahler", {{"k", args.k}, {"grid", default_grid(args)}}, results, pass),
       CommonArgs{.out = args.out, .format = args.format});
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rudin-Shapiro polynomial toolkit: constructions, certified "
               "level-crossing bounds, exact identities, and value distributions"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string command;
  const auto add_common = [&](CLI::App* sub, bool with_grid = true) {
    sub->add_option("--k", args.k, "level k (n = 2^k)");
    sub->add_option("--out", args.out, "output file path");
    sub->add_option("--format", args.format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", args.threads, "worker thread cap");
    if (with_grid) sub->add_option("--grid", args.grid, "grid size N (default 2^(k+4))");
    sub->callback([&, sub] { command = sub->get_name(); });
    return sub;
  };

  auto* build = add_common(app.add_subcommand("build", "construct P_k, Q_k"), false);
  build->add_option("--encoding", args.encoding, "coefficient encoding: lines|bits")
      ->check(CLI::IsMember({"lines", "bits"}));
  add_common(app.add_subcommand("eval", "evaluate on the unit circle and check the exact identities"));
  add_common(app.add_subcommand("autocorr", "exact integer autocorrelation"), false);
  auto* crossings = add_common(app.add_subcommand("crossings", "certified level crossings"), false);
  crossings->add_option("--eta", args.eta, "level offset: level = (1+eta)n");
  crossings->add_option("--oversample", args.oversample, "grid oversampling factor");
  auto* t21 = add_common(app.add_subcommand("verify-t21", "zeros of R_k(t) = n"), false);
  t21->add_option("--oversample", args.oversample, "grid oversampling factor");
  auto* t22 = add_common(app.add_subcommand("verify-t22", "zeros of R_k(t) = (1+eta)n"), false);
  t22->add_option("--eta", args.eta, "eta in (-1/2, 1/2)");
  t22->add_option("--epsilon", args.epsilon, "positive slack in the bound");
  t22->add_option("--oversample", args.oversample, "grid oversampling factor");
  add_common(app.add_subcommand("lemma31", "subgrid doubling identity"), false);
  add_common(app.add_subcommand("antisym", "R_k(t) - n = n - R_k(t+pi)"));
  auto* signarg = add_common(app.add_subcommand("signarg", "A_j tuple proof mechanics"), false);
  signarg->add_option("--oversample", args.oversample, "grid oversampling factor");
  auto* dist1d = add_common(app.add_subcommand("dist1d", "distribution of R_k/(2n)"));
  dist1d->add_option("--bins", args.bins, "histogram bins");
  auto* dist2d = add_common(app.add_subcommand("dist2d", "planar distribution of P_k/sqrt(2n)"));
  dist2d->add_option("--cells", args.cells, "cells per axis");
  auto* moments = add_common(app.add_subcommand("moments", "M_q moments"));
  moments->add_option("--q", args.q, "moment exponents (repeatable)");
  add_common(app.add_subcommand("mahler", "Mahler measure by quadrature and roots"));

  CLI11_PARSE(app, argc, argv);
  set_fft_threads(args.threads);

  try {
    if (command == "build") return run_build(args);
    if (command == "eval") return run_eval(args);
    if (command == "autocorr") return run_autocorr(args);
    if (command == "crossings") return run_crossings(args);
    if (command == "verify-t21") return run_t21(args);
    if (command == "verify-t22") return run_t22(args);
    if (command == "lemma31") return run_lemma31(args);
    if (command == "antisym") return run_antisym(args);
    if (command == "signarg") return run_signarg(args);
    if (command == "dist1d") return run_dist1d(args);
    if (command == "dist2d") return run_dist2d(args);
    if (command == "moments") return run_moments(args);
    if (command == "mahler") return run_mahler(args);
    std::cerr << "unknown subcommand\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
