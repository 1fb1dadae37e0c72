#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dualqkd/dualqkd.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace dualqkd;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Secret key rates for single- and dual-detector QKD receivers";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<SpdSpec>(m, "SpdSpec")
      .def(py::init([](double rep_rate, double eta_d, double y0, double e_det) {
             return SpdSpec{rep_rate, eta_d, y0, e_det};
           }),
           py::arg("rep_rate"), py::arg("eta_d"), py::arg("y0"), py::arg("e_det"))
      .def_readwrite("rep_rate", &SpdSpec::rep_rate)
      .def_readwrite("eta_d", &SpdSpec::eta_d)
      .def_readwrite("y0", &SpdSpec::y0)
      .def_readwrite("e_det", &SpdSpec::e_det);

  py::class_<HomodyneSpec>(m, "HomodyneSpec")
      .def(py::init([](double rep_rate, double g_det, double eps_det) {
             return HomodyneSpec{rep_rate, g_det, eps_det};
           }),
           py::arg("rep_rate"), py::arg("g_det"), py::arg("eps_det"))
      .def_readwrite("rep_rate", &HomodyneSpec::rep_rate)
      .def_readwrite("g_det", &HomodyneSpec::g_det)
      .def_readwrite("eps_det", &HomodyneSpec::eps_det);

  py::class_<LinkSpec>(m, "LinkSpec")
      .def(py::init([](double alpha, double length, double g_bob, double switch_loss) {
             return LinkSpec{alpha, length, g_bob, switch_loss};
           }),
           py::arg("alpha") = 0.21, py::arg("length") = 0.0, py::arg("g_bob") = 1.0,
           py::arg("switch_loss") = 0.0)
      .def_readwrite("alpha", &LinkSpec::alpha)
      .def_readwrite("length", &LinkSpec::length)
      .def_readwrite("g_bob", &LinkSpec::g_bob)
      .def_readwrite("switch_loss", &LinkSpec::switch_loss);

  py::class_<GmcsSource>(m, "GmcsSource")
      .def(py::init([](double v, double beta, double eps_pre) {
             return GmcsSource{v, beta, eps_pre};
           }),
           py::arg("v"), py::arg("beta"), py::arg("eps_pre"))
      .def_readwrite("v", &GmcsSource::v)
      .def_readwrite("beta", &GmcsSource::beta)
      .def_readwrite("eps_pre", &GmcsSource::eps_pre);

  py::class_<Bb84Config>(m, "Bb84Config")
      .def(py::init([](double basis_factor, double f_ec) { return Bb84Config{basis_factor, f_ec}; }),
           py::arg("basis_factor") = 0.5, py::arg("f_ec") = 1.22)
      .def_readwrite("basis_factor", &Bb84Config::basis_factor)
      .def_readwrite("f_ec", &Bb84Config::f_ec);

  py::class_<DecoyConfig>(m, "DecoyConfig")
      .def(py::init([](double mu, double basis_factor, double f_ec, bool drop_pa) {
             return DecoyConfig{mu, basis_factor, f_ec, drop_pa};
           }),
           py::arg("mu") = 0.73, py::arg("basis_factor") = 0.5, py::arg("f_ec") = 1.22,
           py::arg("drop_pa") = false)
      .def_readwrite("mu", &DecoyConfig::mu)
      .def_readwrite("basis_factor", &DecoyConfig::basis_factor)
      .def_readwrite("f_ec", &DecoyConfig::f_ec)
      .def_readwrite("drop_pa", &DecoyConfig::drop_pa);

  py::class_<GmcsNoiseBudget>(m, "GmcsNoiseBudget")
      .def_readonly("g", &GmcsNoiseBudget::g)
      .def_readonly("chi_vac", &GmcsNoiseBudget::chi_vac)
      .def_readonly("eps", &GmcsNoiseBudget::eps)
      .def_readonly("chi", &GmcsNoiseBudget::chi);

  py::class_<ChoiceProbabilities>(m, "ChoiceProbabilities")
      .def_readonly("none", &ChoiceProbabilities::none)
      .def_readonly("once", &ChoiceProbabilities::once)
      .def_readonly("multiple", &ChoiceProbabilities::multiple);

  py::class_<Scenario>(m, "Scenario")
      .def_static("from_json", &parse_scenario, py::arg("text"))
      .def_static("load", &load_scenario, py::arg("path"))
      .def("to_json", &scenario_to_json)
      .def("evaluate", &evaluate, py::arg("length_km"))
      .def_property_readonly("protocol", [](const Scenario& s) { return std::string(to_string(s.protocol)); })
      .def_property_readonly("mode", [](const Scenario& s) { return std::string(to_string(s.mode)); });

  py::class_<Crossing>(m, "Crossing")
      .def_readonly("km", &Crossing::km)
      .def_readonly("touching", &Crossing::touching)
      .def("__repr__", [](const Crossing& c) {
        return "Crossing(km=" + py::repr(py::float_(c.km)).cast<std::string>() +
               ", touching=" + (c.touching ? "True" : "False") + ")";
      });

  py::class_<FigurePreset>(m, "FigurePreset")
      .def_readonly("id", &FigurePreset::id)
      .def_readonly("title", &FigurePreset::title)
      .def_readonly("dual", &FigurePreset::dual)
      .def_readonly("fast", &FigurePreset::fast)
      .def_readonly("slow", &FigurePreset::slow)
      .def_readonly("dual_no_pa", &FigurePreset::dual_no_pa)
      .def_readonly("l_min", &FigurePreset::l_min)
      .def_readonly("l_max", &FigurePreset::l_max)
      .def_readonly("step", &FigurePreset::step);

  m.def("binary_entropy", &binary_entropy, py::arg("x"));
  m.def("channel_transmittance", py::overload_cast<double, double>(&channel_transmittance),
        py::arg("alpha"), py::arg("length"));
  m.def("db_to_transmittance", &db_to_transmittance, py::arg("loss_db"));

  m.def("bb84_gain", &bb84_gain, py::arg("spd"), py::arg("link"), py::arg("extra_loss") = 1.0);
  m.def("bb84_qber", &bb84_qber, py::arg("spd"), py::arg("link"), py::arg("extra_loss") = 1.0);
  m.def("bb84_rate_single", &bb84_rate_single, py::arg("spd"), py::arg("link"), py::arg("cfg"));
  m.def("bb84_rate_dual", &bb84_rate_dual, py::arg("fast"), py::arg("slow"), py::arg("link"),
        py::arg("cfg"));

  m.def("decoy_signal_gain", &decoy_signal_gain, py::arg("mu"), py::arg("spd"), py::arg("link"),
        py::arg("extra_loss") = 1.0);
  m.def("decoy_signal_qber", &decoy_signal_qber, py::arg("mu"), py::arg("spd"), py::arg("link"),
        py::arg("extra_loss") = 1.0);
  m.def("decoy_single_photon_gain", &decoy_single_photon_gain, py::arg("mu"), py::arg("spd"),
        py::arg("link"), py::arg("extra_loss") = 1.0);
  m.def("decoy_single_photon_qber", &decoy_single_photon_qber, py::arg("mu"), py::arg("spd"),
        py::arg("link"), py::arg("extra_loss") = 1.0);
  m.def("decoy_rate_single", &decoy_rate_single, py::arg("spd"), py::arg("link"), py::arg("cfg"));
  m.def("decoy_rate_dual", &decoy_rate_dual, py::arg("fast"), py::arg("slow"), py::arg("link"),
        py::arg("cfg"));
  m.def("optimal_mu", &optimal_mu, py::arg("e_det"), py::arg("f_ec"));

  m.def("noise_budget", &noise_budget, py::arg("source"), py::arg("det"), py::arg("link"),
        py::arg("include_switch") = false);
  m.def("mutual_info_ab", &mutual_info_ab, py::arg("v"), py::arg("chi"));
  m.def("info_ae", &info_ae, py::arg("v"), py::arg("chi"));
  m.def("info_be", &info_be, py::arg("v"), py::arg("chi"), py::arg("g"));
  m.def("gmcs_dr_rate_single", &gmcs_dr_rate_single, py::arg("source"), py::arg("det"),
        py::arg("link"));
  m.def("gmcs_dr_rate_dual", &gmcs_dr_rate_dual, py::arg("source"), py::arg("fast"),
        py::arg("slow"), py::arg("link"));
  m.def("gmcs_rr_rate_single", &gmcs_rr_rate_single, py::arg("source"), py::arg("det"),
        py::arg("link"));
  m.def("gmcs_rr_rate_dual", &gmcs_rr_rate_dual, py::arg("source"), py::arg("fast"),
        py::arg("slow"), py::arg("link"));

  m.def("choice_probabilities", &choice_probabilities, py::arg("p"), py::arg("k"));
  m.def("multi_pulse_qber", &multi_pulse_qber, py::arg("p"), py::arg("k"));
  m.def("max_slow_probability", &max_slow_probability, py::arg("k"), py::arg("qber_budget"));
  m.def("accumulation_time", &accumulation_time, py::arg("p"), py::arg("rep_rate"),
        py::arg("mu"), py::arg("overall_eta"), py::arg("target_counts"));

  m.def("figure_preset", &figure_preset, py::arg("id"));
  m.def("with_switch_loss", &with_switch_loss, py::arg("scenario"), py::arg("loss_db"));
  m.def(
      "sweep",
      [](const Scenario& s, double l_min, double l_max, double step) {
        // (length_km, clamped rate, raw rate) tuples
        std::vector<std::tuple<double, double, double>> rows;
        for (const auto& p : sweep(s, l_min, l_max, step).points) {
          rows.emplace_back(p.length_km, p.rate, p.raw_rate);
        }
        return rows;
      },
      py::arg("scenario"), py::arg("l_min"), py::arg("l_max"), py::arg("step"));
  m.def(
      "max_secure_distance",
      [](const Scenario& s, double l_max, double step) {
        return max_secure_distance(s, l_max, {step, 0.01});
      },
      py::arg("scenario"), py::arg("l_max"), py::arg("step") = 1.0);
  m.def(
      "crossover_distance",
      [](const Scenario& a, const Scenario& b, double l_max, double step) {
        return crossover_distance(a, b, l_max, {step, 0.01});
      },
      py::arg("a"), py::arg("b"), py::arg("l_max"), py::arg("step") = 1.0);
  m.def(
      "dual_advantage_ends",
      [](const FigurePreset& f) {
        const auto singles = f.singles();
        return crossover_distance(rate_function(f.dual), envelope(singles), f.l_max, f.search());
      },
      py::arg("preset"), "Crossover of the dual curve against the best single-detector curve.");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
