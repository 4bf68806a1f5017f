#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rshapiro/crossings.hpp"
#include "rshapiro/distribution.hpp"
#include "rshapiro/eval.hpp"
#include "rshapiro/sign_sequence.hpp"

namespace py = pybind11;
using namespace rshapiro;

namespace {

py::array_t<std::int8_t> coeffs_array(const SignSequence& seq) {
  py::array_t<std::int8_t> out(py::array::ShapeContainer{static_cast<py::ssize_t>(seq.size())});
  std::copy(seq.coeffs().begin(), seq.coeffs().end(), out.mutable_data());
  return out;
}

SignSequence sequence_from_array(py::array_t<std::int8_t, py::array::c_style | py::array::forcecast> arr,
                                 int level) {
  const auto* data = arr.data();
  return SignSequence(std::vector<std::int8_t>(data, data + arr.size()), level);
}

py::array_t<std::complex<double>> grid_array(const CircleGrid& grid) {
  py::array_t<std::complex<double>> out(py::array::ShapeContainer{static_cast<py::ssize_t>(grid.values.size())});
  std::copy(grid.values.begin(), grid.values.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rudin-Shapiro polynomial toolkit: constructions, certified "
            "level-crossing bounds, exact identities, and value distributions";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
  py::register_exception<RootFindingError>(m, "RootFindingError", PyExc_RuntimeError);

  py::class_<SignSequence>(m, "SignSequence")
      .def(py::init(&sequence_from_array), py::arg("coeffs"), py::arg("level"))
      .def_property_readonly("level", &SignSequence::level)
      .def("__len__", &SignSequence::size)
      .def("coeffs", &coeffs_array, "coefficients as an int8 array");

  py::class_<RSPair>(m, "RSPair")
      .def_readonly("p", &RSPair::p)
      .def_readonly("q", &RSPair::q)
      .def_readonly("level", &RSPair::level);

  m.def("build_rs_pair", &build_rs_pair, py::arg("level"),
        py::arg("max_bytes") = kDefaultMemoryBudget,
        "construct (P_k, Q_k) by the doubling recursion");
  m.def("grs_coefficient", &grs_coefficient, py::arg("j"),
        "closed-form coefficient of P_k for any k with 2^k > j");
  m.def("check_eq_1_2", &check_eq_1_2, py::arg("k"), py::arg("grid_size"));
  m.def("check_parallelogram", &check_parallelogram, py::arg("k"), py::arg("grid_size"));

  m.def("eval_unit_circle",
        [](const SignSequence& seq, std::size_t grid) {
          return grid_array(eval_unit_circle(seq, grid));
        },
        py::arg("seq"), py::arg("grid_size"), "samples at t_i = 2*pi*i/N");
  m.def("eval_point",
        py::overload_cast<const SignSequence&, double>(&eval_point),
        py::arg("seq"), py::arg("t"), "double-double Horner oracle at e^{it}");
  m.def("modulus_squared_point", &modulus_squared_point, py::arg("seq"), py::arg("t"));
  m.def("autocorrelation",
        [](const SignSequence& seq) {
          const Autocorrelation ac = autocorrelation(seq);
          py::array_t<std::int64_t> out(py::array::ShapeContainer{static_cast<py::ssize_t>(ac.c.size())});
          std::copy(ac.c.begin(), ac.c.end(), out.mutable_data());
          return out;
        },
        py::arg("seq"), "exact integer autocorrelation c_m");

  py::class_<Crossing>(m, "Crossing")
      .def_readonly("cell", &Crossing::cell)
      .def_readonly("angle", &Crossing::angle)
      .def_readonly("residual", &Crossing::residual)
      .def_readonly("exact", &Crossing::exact);

  py::class_<CrossingReport>(m, "CrossingReport")
      .def_readonly("level", &CrossingReport::level)
      .def_readonly("certified_count", &CrossingReport::certified_count)
      .def_readonly("crossings", &CrossingReport::crossings)
      .def_readonly("ambiguous_cells", &CrossingReport::ambiguous_cells)
      .def_readonly("grid_size", &CrossingReport::grid_size);

  m.def("count_level_crossings",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> samples, double level,
           double band) {
          CountOptions opt;
          opt.ambiguity_band = band;
          return count_level_crossings({samples.data(), static_cast<std::size_t>(samples.size())},
                                       level, opt);
        },
        py::arg("samples"), py::arg("level"), py::arg("ambiguity_band") = 0.0,
        "certified sign-change count over a wrapped sample grid");

  m.def("count_rs_crossings",
        [](int k, const std::string& eta, std::size_t oversample) {
          const Rational e = parse_decimal(eta);
          const SignSequence p = build_rs_pair(k).p;
          const Autocorrelation ac = autocorrelation(p);
          const std::int64_t n = static_cast<std::int64_t>(p.size());
          const std::int64_t level_num = (e.den + e.num) * n;
          const RealGrid r = modulus_squared(eval_unit_circle(p, oversample * p.size()));
          CountOptions opt;
          opt.ambiguity_band = ambiguity_band(n);
          opt.exact_points = exact_eighth_angle_points(ac, level_num, e.den, oversample * p.size());
          opt.oracle = [p](double t) { return modulus_squared_point(p, t); };
          return count_level_crossings(r.values,
                                       static_cast<double>(level_num) / static_cast<double>(e.den),
                                       opt);
        },
        py::arg("k"), py::arg("eta") = "0", py::arg("oversample") = 16,
        "certified crossings of R_k at level (1+eta)n");

  py::class_<Theorem21Report>(m, "Theorem21Report")
      .def_readonly("k", &Theorem21Report::k)
      .def_readonly("n", &Theorem21Report::n)
      .def_readonly("zero_count", &Theorem21Report::zero_count)
      .def_readonly("bound_zeros", &Theorem21Report::bound_zeros)
      .def_readonly("interval_hits", &Theorem21Report::interval_hits)
      .def_readonly("bound_intervals", &Theorem21Report::bound_intervals)
      .def_readonly("pass_zeros", &Theorem21Report::pass_zeros)
      .def_readonly("pass_intervals", &Theorem21Report::pass_intervals)
      .def_readonly("zero_angles", &Theorem21Report::zero_angles);

  m.def("verify_theorem_2_1", &verify_theorem_2_1, py::arg("k"), py::arg("oversample") = 16);

  py::class_<Theorem22Report>(m, "Theorem22Report")
      .def_readonly("k", &Theorem22Report::k)
      .def_readonly("n", &Theorem22Report::n)
      .def_readonly("level", &Theorem22Report::level)
      .def_readonly("zero_count", &Theorem22Report::zero_count)
      .def_readonly("bound", &Theorem22Report::bound)
      .def_readonly("pass_", &Theorem22Report::pass)
      .def_readonly("oversample_used", &Theorem22Report::oversample_used);

  m.def("verify_theorem_2_2",
        [](int k, const std::string& eta, const std::string& epsilon, std::size_t oversample) {
          return verify_theorem_2_2(k, parse_decimal(eta), parse_decimal(epsilon), oversample);
        },
        py::arg("k"), py::arg("eta"), py::arg("epsilon") = "0.05", py::arg("oversample") = 16);

  m.def("check_lemma_3_1", &check_lemma_3_1, py::arg("k"));
  m.def("check_antisymmetry", &check_antisymmetry, py::arg("k"), py::arg("grid_size"));

  py::class_<SignChangeArgumentReport>(m, "SignChangeArgumentReport")
      .def_readonly("k", &SignChangeArgumentReport::k)
      .def_readonly("n", &SignChangeArgumentReport::n)
      .def_readonly("sign_changes", &SignChangeArgumentReport::sign_changes)
      .def_readonly("sign_change_bound", &SignChangeArgumentReport::sign_change_bound)
      .def_readonly("qualifying_pairs", &SignChangeArgumentReport::qualifying_pairs)
      .def_readonly("qualifying_bound", &SignChangeArgumentReport::qualifying_bound)
      .def_readonly("uncertified_intervals", &SignChangeArgumentReport::uncertified_intervals)
      .def_readonly("pass_", &SignChangeArgumentReport::pass);

  m.def("verify_sign_change_argument", &verify_sign_change_argument, py::arg("k"),
        py::arg("oversample") = 16);

  py::class_<Histogram1D>(m, "Histogram1D")
      .def_readonly("bins", &Histogram1D::bins)
      .def_readonly("mass", &Histogram1D::mass)
      .def_readonly("ks_statistic", &Histogram1D::ks_statistic)
      .def_readonly("mean", &Histogram1D::mean)
      .def_readonly("grid_size", &Histogram1D::grid_size);

  py::class_<Histogram2D>(m, "Histogram2D")
      .def_readonly("cells", &Histogram2D::cells)
      .def_readonly("mass", &Histogram2D::mass)
      .def_readonly("reference", &Histogram2D::reference)
      .def_readonly("max_cell_error", &Histogram2D::max_cell_error)
      .def_readonly("grid_size", &Histogram2D::grid_size);

  m.def("value_distribution", &value_distribution, py::arg("seq"), py::arg("grid_size"),
        py::arg("bins") = 64);
  m.def("band_mass", &band_mass, py::arg("seq"), py::arg("grid_size"), py::arg("alpha"),
        py::arg("beta"));
  m.def("planar_distribution", &planar_distribution, py::arg("seq"), py::arg("grid_size"),
        py::arg("cells") = 16);

  py::class_<MomentReport>(m, "MomentReport")
      .def_readonly("q", &MomentReport::q)
      .def_readonly("estimate", &MomentReport::estimate)
      .def_readonly("grid_size", &MomentReport::grid_size)
      .def_readonly("exact", &MomentReport::exact)
      .def_readonly("predicted", &MomentReport::predicted)
      .def_readonly("ratio", &MomentReport::ratio);

  m.def("moment", &moment, py::arg("seq"), py::arg("q"), py::arg("grid_size"));

  py::class_<MahlerReport>(m, "MahlerReport")
      .def_readonly("estimate", &MahlerReport::estimate)
      .def_readonly("grid_size", &MahlerReport::grid_size)
      .def_readonly("clip", &MahlerReport::clip)
      .def_readonly("sensitivity_grid", &MahlerReport::sensitivity_grid)
      .def_readonly("sensitivity_clip", &MahlerReport::sensitivity_clip)
      .def_readonly("diagnostic", &MahlerReport::diagnostic);

  m.def("mahler_quadrature",
        py::overload_cast<const SignSequence&, std::size_t, double>(&mahler_quadrature),
        py::arg("seq"), py::arg("grid_size"), py::arg("clip") = 40.0);
  m.def("mahler_via_roots",
        py::overload_cast<const SignSequence&, int>(&mahler_via_roots), py::arg("seq"),
        py::arg("max_level") = 8);
  m.def("polynomial_roots",
        [](const std::vector<std::complex<double>>& coeffs) {
          const auto roots = polynomial_roots(coeffs);
          py::array_t<std::complex<double>> out(py::array::ShapeContainer{static_cast<py::ssize_t>(roots.size())});
          std::copy(roots.begin(), roots.end(), out.mutable_data());
          return out;
        },
        py::arg("coeffs"), "all complex roots, residual-checked");
  m.def("set_fft_threads", &set_fft_threads, py::arg("threads"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
