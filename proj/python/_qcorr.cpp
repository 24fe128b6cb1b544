// Python bindings for the qcorr core.
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qcorr/bloch.hpp"
#include "qcorr/entanglement.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/optimizer.hpp"
#include "qcorr/report.hpp"
#include "qcorr/states.hpp"

namespace py = pybind11;
using namespace qcorr;

namespace {

SamplerConfig make_config(std::uint64_t trials, std::uint64_t seed, bool refine, int bins, unsigned threads) {
  SamplerConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.refine = refine;
  cfg.bins = bins;
  cfg.threads = threads;
  return cfg;
}

DensityMatrix state_from(const std::string& spec) {
  auto s = StateSpec::parse(spec);
  s.check();
  return make_state(s);
}

}  // namespace

PYBIND11_MODULE(_qcorr, m) {
  m.doc() = "Geometric discord and measurement-induced nonlocality of bipartite states";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<UnsupportedDimension>(m, "UnsupportedDimension", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegenerateMarginal>(m, "DegenerateMarginal", PyExc_RuntimeError);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<CMatrix, int, int>(), py::arg("data"), py::arg("dim_a"), py::arg("dim_b"))
      .def_property_readonly("data", &DensityMatrix::data)
      .def_property_readonly("dim_a", &DensityMatrix::dim_a)
      .def_property_readonly("dim_b", &DensityMatrix::dim_b)
      .def("reinterpret", &DensityMatrix::reinterpret, py::arg("dim_a"), py::arg("dim_b"))
      .def("__repr__", [](const DensityMatrix& r) {
        std::ostringstream s;
        s << "DensityMatrix(" << r.dim_a() << "x" << r.dim_b() << ")";
        return s.str();
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("hermiticity_defect", &ValidationReport::hermiticity_defect)
      .def_readonly("trace_defect", &ValidationReport::trace_defect)
      .def_readonly("min_eigenvalue", &ValidationReport::min_eigenvalue)
      .def("ok", &ValidationReport::ok);
  m.def("validate", &validate, py::arg("rho"));

  m.def("horodecki_2x4", &states::horodecki_2x4, py::arg("a"));
  m.def("horodecki_3x3", &states::horodecki_3x3, py::arg("beta"));
  m.def("horodecki_4x4_key", &states::horodecki_4x4_key);
  m.def("upb_pyramid", &states::upb_pyramid);
  m.def("upb_tiles", &states::upb_tiles);
  m.def("benatti_4x4", &states::benatti_4x4);
  m.def("werner", &states::werner, py::arg("m"), py::arg("z"));
  m.def("isotropic", &states::isotropic, py::arg("m"), py::arg("z"));
  m.def("state", &state_from, py::arg("spec"), "Build a state from a spec such as 'werner:m=4,z=0.3'.");

  py::class_<Measurement>(m, "Measurement")
      .def_static("from_basis", &Measurement::from_basis, py::arg("basis"), py::arg("tol") = tol::kProjector)
      .def_static("from_projectors",
                  [](const std::vector<CMatrix>& p, double tol) { return Measurement::from_projectors(p, tol); },
                  py::arg("projectors"), py::arg("tol") = tol::kProjector)
      .def_static("complete", &Measurement::complete, py::arg("leading"), py::arg("tol") = tol::kProjector)
      .def_static("computational", &Measurement::computational, py::arg("m"))
      .def_property_readonly("dim", &Measurement::dim)
      .def_property_readonly("basis", &Measurement::basis)
      .def("projectors", &Measurement::projectors);

  py::class_<MeasureEstimate>(m, "MeasureEstimate")
      .def_readonly("value", &MeasureEstimate::value)
      .def_property_readonly("kind", [](const MeasureEstimate& e) { return std::string(kind_name(e.kind)); })
      .def_readonly("witness", &MeasureEstimate::witness)
      .def("__repr__", [](const MeasureEstimate& e) {
        std::ostringstream s;
        s << "MeasureEstimate(" << kind_name(e.kind) << ", " << report::format_number(e.value) << ")";
        return s.str();
      });

  m.def("apply_measurement", &apply_measurement, py::arg("rho"), py::arg("measurement"));
  m.def("normalized_distance", &normalized_distance, py::arg("rho"), py::arg("measurement"));
  m.def("marginal", &marginal, py::arg("rho"));
  m.def("preserves_marginal", &preserves_marginal, py::arg("measurement"), py::arg("rho_a"));
  m.def("gd_lower_bound", &gd_lower_bound, py::arg("rho"));
  m.def("min_upper_bound", &min_upper_bound, py::arg("rho"));
  m.def("gd_exact_2xn", &gd_exact_2xn, py::arg("rho"));
  m.def("gd_candidate_3x3", &gd_candidate_3x3, py::arg("rho"));
  m.def("min_exact_nondegenerate", &min_exact_nondegenerate, py::arg("rho"));
  m.def("min_exact_2d_block", &min_exact_2d_block, py::arg("rho"));
  m.def("min_exact", &min_exact, py::arg("rho"));

  py::class_<bloch::BlochForm>(m, "BlochForm")
      .def_readonly("dim_a", &bloch::BlochForm::dim_a)
      .def_readonly("dim_b", &bloch::BlochForm::dim_b)
      .def_readonly("x", &bloch::BlochForm::x)
      .def_readonly("y", &bloch::BlochForm::y)
      .def_readonly("t", &bloch::BlochForm::t);
  m.def("bloch_decompose", &bloch::decompose, py::arg("rho"));
  m.def("bloch_reconstruct", &bloch::reconstruct, py::arg("form"));

  m.def("partial_transpose",
        [](const DensityMatrix& rho, const std::string& side) {
          if (side != "A" && side != "B") throw DomainError("side must be 'A' or 'B'");
          return partial_transpose(rho, side == "A" ? Side::A : Side::B);
        },
        py::arg("rho"), py::arg("side") = "B");
  m.def("is_ppt", &is_ppt, py::arg("rho"));
  m.def("negativity", &negativity, py::arg("rho"));
  m.def("classify_horodecki_3x3",
        [](double beta) { return std::string(regime_name(classify_horodecki_3x3(beta))); }, py::arg("beta"));

  py::class_<SampleReport>(m, "SampleReport")
      .def_readonly("best_value", &SampleReport::best_value)
      .def_readonly("best_measurement", &SampleReport::best_measurement)
      .def_readonly("trial_index", &SampleReport::trial_index)
      .def_readonly("refined", &SampleReport::refined)
      .def_readonly("samples", &SampleReport::samples)
      .def_property_readonly("histogram", [](const SampleReport& r) {
        std::vector<std::pair<double, std::uint64_t>> out;
        for (const auto& b : r.histogram) out.emplace_back(b.lower, b.count);
        return out;
      });
  const char* sampler_doc = "Monte Carlo over Haar-random measurements; identical results for any thread count.";
  m.def("sample_gd",
        [](const DensityMatrix& rho, std::uint64_t trials, std::uint64_t seed, bool refine, int bins,
           unsigned threads) {
          py::gil_scoped_release release;
          return sample_gd(rho, make_config(trials, seed, refine, bins, threads));
        },
        py::arg("rho"), py::arg("trials") = 1, py::arg("seed") = 0, py::arg("refine") = false,
        py::arg("bins") = 60, py::arg("threads") = 0, sampler_doc);
  m.def("sample_min",
        [](const DensityMatrix& rho, std::uint64_t trials, std::uint64_t seed, bool refine, int bins,
           unsigned threads) {
          py::gil_scoped_release release;
          return sample_min(rho, make_config(trials, seed, refine, bins, threads));
        },
        py::arg("rho"), py::arg("trials") = 1, py::arg("seed") = 0, py::arg("refine") = false,
        py::arg("bins") = 60, py::arg("threads") = 0, sampler_doc);
}
