#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "revival/analysis.hpp"
#include "revival/dynamics.hpp"
#include "revival/scenario.hpp"
#include "revival/spectrum.hpp"
#include "revival/wavepacket.hpp"

namespace py = pybind11;
using namespace revival;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wave-packet revival simulation and analysis toolkit";

  py::register_exception<ScenarioError>(m, "ScenarioError");
  py::register_exception<IoError>(m, "IoError");

  py::enum_<SpectrumKind>(m, "SpectrumKind")
      .value("Harmonic", SpectrumKind::Harmonic)
      .value("Box1D", SpectrumKind::Box1D)
      .value("Rydberg", SpectrumKind::Rydberg)
      .value("Polynomial", SpectrumKind::Polynomial);

  py::enum_<RevivalClass>(m, "RevivalClass")
      .value("TypeI_Periodic", RevivalClass::TypeI_Periodic)
      .value("TypeII_PerfectRevival", RevivalClass::TypeII_PerfectRevival)
      .value("TypeIII_General", RevivalClass::TypeIII_General);

  py::class_<SpectrumModel>(m, "SpectrumModel")
      .def_static("harmonic", &SpectrumModel::harmonic, py::arg("omega"))
      .def_static("box1d", &SpectrumModel::box1d, py::arg("mass"), py::arg("length"))
      .def_static("rydberg", &SpectrumModel::rydberg)
      .def_static("polynomial", &SpectrumModel::polynomial, py::arg("coefficients"))
      .def_property_readonly("kind", &SpectrumModel::kind)
      .def_property_readonly("n_floor", &SpectrumModel::n_floor)
      .def("energy", &SpectrumModel::energy, py::arg("n"))
      .def("derivative", &SpectrumModel::derivative, py::arg("n_bar"), py::arg("order"))
      .def("__repr__", [](const SpectrumModel& model) {
        return "<SpectrumModel " + model.name() + ">";
      });

  py::class_<SpectrumModel2D>(m, "SpectrumModel2D")
      .def_static("box2d", &SpectrumModel2D::box2d, py::arg("mass"), py::arg("length1"),
                  py::arg("length2"))
      .def_static("separable_sum", &SpectrumModel2D::separable_sum, py::arg("first"),
                  py::arg("second"))
      .def("axis", &SpectrumModel2D::axis, py::arg("i"))
      .def("energy", &SpectrumModel2D::energy, py::arg("n1"), py::arg("n2"));

  py::class_<TimeScales>(m, "TimeScales")
      .def_readonly("t_cl", &TimeScales::t_cl)
      .def_readonly("t_rev", &TimeScales::t_rev)
      .def_readonly("t_sr", &TimeScales::t_sr)
      .def_readonly("d1", &TimeScales::d1)
      .def_readonly("d2", &TimeScales::d2)
      .def_readonly("d3", &TimeScales::d3);

  py::class_<TimeScales2D>(m, "TimeScales2D")
      .def_readonly("t_cl_1", &TimeScales2D::t_cl_1)
      .def_readonly("t_cl_2", &TimeScales2D::t_cl_2)
      .def_readonly("t_rev_1", &TimeScales2D::t_rev_1)
      .def_readonly("t_rev_2", &TimeScales2D::t_rev_2)
      .def_readonly("t_rev_mixed", &TimeScales2D::t_rev_mixed)
      .def_readonly("t_third", &TimeScales2D::t_third);

  m.def("time_scales", &time_scales, py::arg("model"), py::arg("n_bar"));
  m.def("time_scales_2d", &time_scales_2d, py::arg("model"), py::arg("n_bar_1"),
        py::arg("n_bar_2"));
  m.def("classify", &classify, py::arg("model"), py::arg("n_bar"));

  py::class_<PacketSpec>(m, "PacketSpec")
      .def(py::init([](double n_bar, double sigma, int n_min, int n_max) {
             return PacketSpec{n_bar, sigma, n_min, n_max};
           }),
           py::arg("n_bar"), py::arg("sigma"), py::arg("n_min"), py::arg("n_max"))
      .def_readwrite("n_bar", &PacketSpec::n_bar)
      .def_readwrite("sigma", &PacketSpec::sigma)
      .def_readwrite("n_min", &PacketSpec::n_min)
      .def_readwrite("n_max", &PacketSpec::n_max);

  py::class_<Coefficients>(m, "Coefficients")
      .def_property_readonly("entries",
                             [](const Coefficients& c) {
                               std::vector<std::pair<int, std::complex<double>>> out;
                               out.reserve(c.entries.size());
                               for (const auto& e : c.entries) out.emplace_back(e.n, e.amplitude);
                               return out;
                             })
      .def_readonly("tail_mass", &Coefficients::tail_mass)
      .def("truncation_warning", &Coefficients::truncation_warning)
      .def("__len__", [](const Coefficients& c) { return c.entries.size(); });

  py::class_<Coefficients2D>(m, "Coefficients2D")
      .def_property_readonly(
          "entries",
          [](const Coefficients2D& c) {
            std::vector<std::pair<std::pair<int, int>, std::complex<double>>> out;
            out.reserve(c.entries.size());
            for (const auto& e : c.entries) out.emplace_back(std::pair{e.n1, e.n2}, e.amplitude);
            return out;
          })
      .def_readonly("tail_mass", &Coefficients2D::tail_mass)
      .def("truncation_warning", &Coefficients2D::truncation_warning)
      .def("__len__", [](const Coefficients2D& c) { return c.entries.size(); });

  m.def("gaussian_coefficients", &gaussian_coefficients, py::arg("spec"));
  m.def("product_coefficients_2d", &product_coefficients_2d, py::arg("spec1"), py::arg("spec2"));

  py::class_<PacketMoments>(m, "PacketMoments")
      .def_readonly("mean", &PacketMoments::mean)
      .def_readonly("std_dev", &PacketMoments::std_dev);
  m.def("packet_moments", &packet_moments, py::arg("coefficients"));

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init([](double t_start, double t_end, int samples) {
             return TimeGrid{t_start, t_end, samples};
           }),
           py::arg("t_start"), py::arg("t_end"), py::arg("samples"))
      .def_readonly("t_start", &TimeGrid::t_start)
      .def_readonly("t_end", &TimeGrid::t_end)
      .def_readonly("samples", &TimeGrid::samples)
      .def("dt", &TimeGrid::dt)
      .def("time", &TimeGrid::time, py::arg("k"))
      .def("times", &TimeGrid::times);

  py::class_<ComplexSeries>(m, "ComplexSeries")
      .def_readonly("grid", &ComplexSeries::grid)
      .def_readonly("values", &ComplexSeries::values)
      .def("abs2", [](const ComplexSeries& s) {
        std::vector<double> out;
        out.reserve(s.values.size());
        for (const auto& v : s.values) out.push_back(std::norm(v));
        return out;
      });

  py::class_<DensityGrid>(m, "DensityGrid")
      .def_readonly("x_samples", &DensityGrid::x_samples)
      .def_readonly("length", &DensityGrid::length)
      .def_readonly("grid", &DensityGrid::grid)
      .def_readonly("values", &DensityGrid::values)
      .def("at", &DensityGrid::at, py::arg("time_index"), py::arg("x_index"))
      .def("x", &DensityGrid::x, py::arg("j"));

  m.def("autocorrelation", &autocorrelation, py::arg("coefficients"), py::arg("model"),
        py::arg("grid"));
  m.def("autocorrelation_2d", &autocorrelation_2d, py::arg("coefficients"), py::arg("model"),
        py::arg("grid"));
  m.def("box_density", &box_density, py::arg("coefficients"), py::arg("mass"), py::arg("length"),
        py::arg("x"), py::arg("t"));
  m.def("carpet", &carpet, py::arg("coefficients"), py::arg("mass"), py::arg("length"),
        py::arg("x_samples"), py::arg("grid"));

  py::class_<Rational>(m, "Rational")
      .def(py::init(&make_rational), py::arg("p"), py::arg("q"))
      .def_readonly("p", &Rational::p)
      .def_readonly("q", &Rational::q)
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__repr__", [](const Rational& r) { return to_string(r); });

  py::class_<FractionLabel>(m, "FractionLabel")
      .def_readonly("value", &FractionLabel::value)
      .def_readonly("residual", &FractionLabel::residual);

  py::class_<RevivalEvent>(m, "RevivalEvent")
      .def_readonly("t", &RevivalEvent::t)
      .def_readonly("height", &RevivalEvent::height)
      .def_readonly("fraction", &RevivalEvent::fraction);

  py::class_<BeatPeak>(m, "BeatPeak")
      .def_readonly("frequency", &BeatPeak::frequency)
      .def_readonly("power", &BeatPeak::power);

  py::class_<BeatReport>(m, "BeatReport")
      .def_readonly("frequencies", &BeatReport::frequencies);

  m.def("detect_revivals", &detect_revivals, py::arg("series"), py::arg("min_height"),
        py::arg("min_separation"));
  m.def("label_fraction", &label_fraction, py::arg("t"), py::arg("t_rev"), py::arg("q_max"),
        py::arg("tol"));
  m.def("periodogram_beats", &periodogram_beats, py::arg("series"), py::arg("top_k"));
  m.def("commensurate", &commensurate, py::arg("t1"), py::arg("t2"), py::arg("q_max"),
        py::arg("tol"));
  m.def("tune_box_ratio", &tune_box_ratio, py::arg("target"));
  m.def("common_revival", &common_revival, py::arg("t1"), py::arg("t2"), py::arg("ratio"));

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("packets", &Scenario::packets)
      .def_readonly("samples", &Scenario::samples)
      .def_readonly("x_samples", &Scenario::x_samples)
      .def_readwrite("series_path", &Scenario::series_path)
      .def_readwrite("events_path", &Scenario::events_path)
      .def_readwrite("carpet_path", &Scenario::carpet_path);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("scales", &RunReport::scales)
      .def_readonly("t_end", &RunReport::t_end)
      .def_readonly("event_count", &RunReport::event_count)
      .def_readonly("written", &RunReport::written)
      .def_readonly("warnings", &RunReport::warnings);

  m.def("parse_scenario", &parse_scenario, py::arg("document"));
  m.def("load_scenario_file", &load_scenario_file, py::arg("path"));
  m.def("run_scenario", &run_scenario, py::arg("scenario"));
  m.def("format_double", &format_double, py::arg("value"));
}
