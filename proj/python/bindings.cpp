#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "rlcband/cli.hpp"
#include "rlcband/elementary.hpp"
#include "rlcband/error.hpp"
#include "rlcband/io.hpp"
#include "rlcband/rlc_model.hpp"
#include "rlcband/trace.hpp"
#include "rlcband/transient_metrics.hpp"

namespace py = pybind11;
using namespace rlcband;

namespace {

void bind_interval(py::module_& m) {
  py::class_<Interval>(m, "Interval", "Closed interval [lo, hi] with outward-rounded arithmetic.")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_static("point", &Interval::point, py::arg("x"))
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def_property_readonly("width", &Interval::width)
      .def_property_readonly("midpoint", &Interval::midpoint)
      .def("is_point", &Interval::is_point)
      .def("contains", py::overload_cast<double>(&Interval::contains, py::const_), py::arg("x"))
      .def("contains", py::overload_cast<const Interval&>(&Interval::contains, py::const_),
           py::arg("other"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const Interval& x) { return to_string(x); })
      .def("__repr__", [](const Interval& x) { return "Interval" + to_string(x); })
      .def("__iter__", [](const Interval& x) {
        return py::iter(py::make_tuple(x.lo(), x.hi()));
      });

  m.def("intersect", &intersect, py::arg("x"), py::arg("y"),
        "Set intersection; None when empty.");
  m.def("hull", &hull, py::arg("x"), py::arg("y"));
  m.def("from_nominal_tolerance", &from_nominal_tolerance, py::arg("nominal"),
        py::arg("tol_fraction"));
  m.def("parse_interval", &parse_interval, py::arg("text"));
  m.def("to_string", py::overload_cast<const Interval&, int>(&to_string), py::arg("x"),
        py::arg("significant_digits") = 17);

  m.def("pi_interval", &pi_interval);
  m.def("iexp", &iexp);
  m.def("iln", &iln);
  m.def("isqrt", &isqrt);
  m.def("isin", &isin);
  m.def("icos", &icos);
  m.def("iacos", &iacos);
  m.def("iatan", &iatan);
}

void bind_model(py::module_& m) {
  py::class_<Component>(m, "Component")
      .def(py::init([](double nominal, double tol_fraction) {
             return Component{nominal, tol_fraction};
           }),
           py::arg("nominal"), py::arg("tol_fraction") = 0.0)
      .def_readwrite("nominal", &Component::nominal)
      .def_readwrite("tol_fraction", &Component::tol_fraction)
      .def("interval", &Component::interval);

  py::class_<CircuitSpec>(m, "CircuitSpec")
      .def(py::init([](Component r, Component l, Component c, Component rl) {
             CircuitSpec s{r, l, c, rl};
             s.validate();
             return s;
           }),
           py::arg("resistor"), py::arg("inductance"), py::arg("capacitance"),
           py::arg("inductor_resistance"))
      .def_readwrite("resistor", &CircuitSpec::resistor)
      .def_readwrite("inductance", &CircuitSpec::inductance)
      .def_readwrite("capacitance", &CircuitSpec::capacitance)
      .def_readwrite("inductor_resistance", &CircuitSpec::inductor_resistance)
      .def("total_resistance", &CircuitSpec::total_resistance)
      .def("nominal_only", &CircuitSpec::nominal_only);

  py::class_<NominalParams>(m, "NominalParams")
      .def(py::init([](double xi, double omega0, double omegad) {
             return NominalParams{xi, omega0, omegad};
           }),
           py::arg("xi"), py::arg("omega0"), py::arg("omegad"))
      .def_readwrite("xi", &NominalParams::xi)
      .def_readwrite("omega0", &NominalParams::omega0)
      .def_readwrite("omegad", &NominalParams::omegad);

  py::class_<SecondOrderParams>(m, "SecondOrderParams")
      .def_readonly("xi", &SecondOrderParams::xi)
      .def_readonly("omega0", &SecondOrderParams::omega0)
      .def_readonly("omegad", &SecondOrderParams::omegad)
      .def_readonly("nominal", &SecondOrderParams::nominal);

  py::class_<ResponseBand>(m, "ResponseBand")
      .def_readonly("t", &ResponseBand::t)
      .def_readonly("lower", &ResponseBand::lower)
      .def_readonly("nominal", &ResponseBand::nominal)
      .def_readonly("upper", &ResponseBand::upper)
      .def_readonly("peak_time", &ResponseBand::peak_time)
      .def("__len__", &ResponseBand::size);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("t", &Trajectory::t)
      .def_readonly("v", &Trajectory::v);

  m.def("derive_params", &derive_params, py::arg("spec"));
  m.def("nominal_params", &nominal_params, py::arg("spec"));
  m.def("step_response_point", &step_response_point, py::arg("params"), py::arg("t"));
  m.def("step_response_enclosure", &step_response_enclosure, py::arg("params"), py::arg("t"));
  m.def("uniform_grid", &uniform_grid, py::arg("t_end"), py::arg("points"));
  m.def("default_grid", &default_grid, py::arg("params"), py::arg("points") = kDefaultGridPoints,
        py::arg("t_end_multiplier") = kDefaultTEndMultiplier);
  m.def(
      "step_response_band",
      [](const SecondOrderParams& p, std::optional<std::vector<double>> grid) {
        const std::vector<double> g = grid ? *grid : default_grid(p.nominal);
        return step_response_band(p, g);
      },
      py::arg("params"), py::arg("grid") = py::none());
  m.def("simulate_ode_point", &simulate_ode_point, py::arg("spec"), py::arg("t_end"),
        py::arg("dt"));
  m.def("load_circuit_spec", &load_circuit_spec, py::arg("path"));
  m.def("parse_circuit_spec", [](const std::string& text) {
    std::istringstream in(text);
    return parse_circuit_spec(in);
  });
}

void bind_metrics(py::module_& m) {
  py::enum_<Pipeline>(m, "Pipeline")
      .value("FromParams", Pipeline::FromParams)
      .value("FromBand", Pipeline::FromBand)
      .value("FromTrace", Pipeline::FromTrace);

  py::class_<TransientSpecs>(m, "TransientSpecs")
      .def_readonly("overshoot", &TransientSpecs::overshoot)
      .def_readonly("rise_time", &TransientSpecs::rise_time)
      .def_readonly("peak_time", &TransientSpecs::peak_time)
      .def_readonly("settling_time", &TransientSpecs::settling_time)
      .def_readonly("pipeline", &TransientSpecs::pipeline);

  m.def("overshoot_from_xi", &overshoot_from_xi, py::arg("xi"));
  m.def("peak_time", &peak_time, py::arg("omegad"));
  m.def("settling_time", &settling_time, py::arg("xi"), py::arg("omega0"));
  m.def("rise_time", &rise_time, py::arg("xi"), py::arg("omegad"));
  m.def("overshoot_from_band", &overshoot_from_band, py::arg("band"));
  m.def("specs_from_params", &specs_from_params, py::arg("params"));
  m.def("specs_from_band", &specs_from_band, py::arg("band"), py::arg("params"));
  m.def("identify", &identify, py::arg("overshoot"), py::arg("peak_time"));
}

void bind_trace(py::module_& m) {
  py::class_<Trace>(m, "Trace")
      .def(py::init([](const std::vector<double>& t, const std::vector<double>& v,
                       std::string label) {
             if (t.size() != v.size()) throw py::value_error("t and v differ in length");
             std::vector<Sample> samples(t.size());
             for (std::size_t i = 0; i < t.size(); ++i) samples[i] = {t[i], v[i]};
             return Trace(std::move(samples), std::move(label));
           }),
           py::arg("t"), py::arg("v"), py::arg("label") = "")
      .def_property_readonly("t", [](const Trace& tr) {
        std::vector<double> out;
        for (const auto& s : tr.samples()) out.push_back(s.t);
        return out;
      })
      .def_property_readonly("v", [](const Trace& tr) {
        std::vector<double> out;
        for (const auto& s : tr.samples()) out.push_back(s.v);
        return out;
      })
      .def_property_readonly("label", &Trace::label)
      .def("__len__", &Trace::size);

  py::class_<Violation>(m, "Violation")
      .def_readonly("t", &Violation::t)
      .def_readonly("band_widths", &Violation::band_widths);

  py::class_<EnclosureReport>(m, "EnclosureReport")
      .def_readonly("total", &EnclosureReport::total)
      .def_readonly("inside", &EnclosureReport::inside)
      .def_readonly("skipped", &EnclosureReport::skipped)
      .def_readonly("fraction_inside", &EnclosureReport::fraction_inside)
      .def_readonly("worst", &EnclosureReport::worst);

  m.def("load_trace", &load_trace, py::arg("path"));
  m.def("normalize", [](const Trace& t) { return normalize(t); }, py::arg("trace"));
  m.def("measure_specs", &measure_specs, py::arg("normalized"));
  m.def("check_enclosure", &check_enclosure, py::arg("normalized"), py::arg("band"),
        py::arg("slack") = kEnclosureSlack);
}

}  // namespace

PYBIND11_MODULE(_rlcband, m) {
  m.doc() = "Interval enclosures of the series-RLC unit-step response";

  static py::exception<Error> error_type(m, "RlcBandError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error_type.ptr(),
                      py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
    }
  });

  bind_interval(m);
  bind_model(m);
  bind_metrics(m);
  bind_trace(m);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "rlcband");
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a CLI command in-process; returns (exit_code, stdout, stderr).");
}
