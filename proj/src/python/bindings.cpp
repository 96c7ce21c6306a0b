// Copyright 2026 The revspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revspin/bayes.hpp"
#include "revspin/cli/commands.hpp"
#include "revspin/errors.hpp"
#include "revspin/measure.hpp"
#include "revspin/oracle.hpp"
#include "revspin/prep.hpp"
#include "revspin/reverse.hpp"
#include "revspin/wigner.hpp"

namespace py = pybind11;
using namespace revspin;

namespace {

HalfInt half_from_float(double x) {
  const double twice = 2.0 * x;
  if (std::round(twice) != twice) throw std::invalid_argument("not a half-integer");
  return HalfInt::from_twice(static_cast<int>(twice));
}

py::dict outcome_dict(const Outcome& o) {
  py::dict d;
  d["m"] = o.m.value();
  d["probability"] = o.probability;
  d["fidelity"] = o.fidelity;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Reversible spin measurements: compiled core";

  py::register_exception<ConditionError>(mod, "ConditionError", PyExc_ValueError);
  py::register_exception<NumericalError>(mod, "NumericalError", PyExc_ArithmeticError);

  py::class_<HalfInt>(mod, "HalfInt")
      .def(py::init([](const std::string& text) { return parse_half_int(text); }))
      .def(py::init(&half_from_float))
      .def_static("from_twice", &HalfInt::from_twice)
      .def_property_readonly("twice", &HalfInt::twice)
      .def_property_readonly("value", &HalfInt::value)
      .def("__float__", &HalfInt::value)
      .def("__str__", &HalfInt::to_string)
      .def("__repr__", [](HalfInt h) { return "HalfInt('" + h.to_string() + "')"; })
      .def(py::self == py::self);
  py::implicitly_convertible<py::str, HalfInt>();
  py::implicitly_convertible<py::float_, HalfInt>();
  py::implicitly_convertible<py::int_, HalfInt>();

  mod.def("projections", [](HalfInt j) {
    std::vector<double> out;
    for (HalfInt m : projections(j)) out.push_back(m.value());
    return out;
  });

  py::class_<SpinState>(mod, "SpinState")
      .def(py::init<HalfInt, std::vector<std::complex<double>>>(), py::arg("s"),
           py::arg("amplitudes"))
      .def_static("normalized", &SpinState::normalized, py::arg("s"), py::arg("amplitudes"))
      .def_static("basis", &SpinState::basis, py::arg("s"), py::arg("sigma"))
      .def_static("equal_superposition", &SpinState::equal_superposition, py::arg("s"))
      .def_property_readonly("s", [](const SpinState& st) { return st.spin().value(); })
      .def_property_readonly("amplitudes",
                             [](const SpinState& st) {
                               const auto a = st.amplitudes();
                               return std::vector<std::complex<double>>(a.begin(), a.end());
                             })
      .def("weights", &SpinState::weights)
      .def("overlap", &SpinState::overlap)
      .def("fidelity", &SpinState::fidelity);

  mod.def("rotate_state", &rotate_state, py::arg("state"), py::arg("theta"), py::arg("phi"));
  mod.def("coherent_x_state", &coherent_x_state, py::arg("s"));
  mod.def(
      "cat_state",
      [](const std::string& axis, HalfInt s, std::complex<double> c_plus,
         std::complex<double> c_minus) {
        if (axis != "x" && axis != "z") throw std::invalid_argument("axis must be 'x' or 'z'");
        return cat_state(axis == "x" ? CatAxis::x : CatAxis::z, s, c_plus, c_minus);
      },
      py::arg("axis"), py::arg("s"), py::arg("c_plus"), py::arg("c_minus"));

  py::class_<MeasurementParams>(mod, "MeasurementParams")
      .def(py::init<HalfInt, double, double, double>(), py::arg("j"), py::arg("theta"),
           py::arg("phi"), py::arg("g"))
      .def_property_readonly("j", [](const MeasurementParams& p) { return p.j().value(); })
      .def_property_readonly("theta", &MeasurementParams::theta)
      .def_property_readonly("phi", &MeasurementParams::phi)
      .def_property_readonly("g", &MeasurementParams::g);

  mod.def("wigner_small_d", &wigner_small_d, py::arg("j"), py::arg("mp"), py::arg("m"),
          py::arg("theta"));
  mod.def(
      "coefficient_a",
      [](const MeasurementParams& p, HalfInt mp, HalfInt sigma) {
        return coefficient_a(p, mp, sigma);
      },
      py::arg("params"), py::arg("mp"), py::arg("sigma"));
  mod.def(
      "reversibility_condition",
      [](const MeasurementParams& p, HalfInt s) { return reversibility_condition(p, s).satisfied; },
      py::arg("params"), py::arg("s"));

  mod.def(
      "measure",
      [](const SpinState& st, const MeasurementParams& p) {
        py::list rows;
        for (const auto& o : measure(st, p).outcomes) rows.append(outcome_dict(o));
        return rows;
      },
      py::arg("state"), py::arg("params"));
  mod.def(
      "average_fidelity",
      [](const SpinState& st, const MeasurementParams& p) {
        return measure(st, p).average_fidelity();
      },
      py::arg("state"), py::arg("params"));

  // Joint statistics as (2j+1) x (2j+1) matrices indexed [m, mp], both from j down to -j.
  mod.def(
      "joint_measure",
      [](const SpinState& st, const MeasurementParams& p) {
        const JointTable t = joint_measure(st, p);
        const auto n = static_cast<Eigen::Index>(multiplicity(p.j()));
        Eigen::MatrixXd prob(n, n);
        Eigen::MatrixXd fid(n, n);
        for (const auto& e : t.entries()) {
          const auto r = static_cast<Eigen::Index>(projection_index(p.j(), e.m));
          const auto c = static_cast<Eigen::Index>(projection_index(p.j(), e.mp));
          prob(r, c) = e.probability;
          fid(r, c) = e.fidelity;
        }
        py::dict d;
        d["probability"] = prob;
        d["fidelity"] = fid;
        d["average_fidelity"] = t.average_fidelity();
        d["q"] = t.recovery_probability();
        d["q_prime"] = t.approx_recovery_probability();
        return d;
      },
      py::arg("state"), py::arg("params"));

  mod.def("recovery_probability",
          py::overload_cast<const MeasurementParams&>(&recovery_probability), py::arg("params"));
  mod.def("recovery_width", &recovery_width, py::arg("params"));
  mod.def("weak_width", &weak_width, py::arg("params"), py::arg("s"));
  mod.def("asymptotic_recovery", &asymptotic_recovery, py::arg("params"));

  mod.def(
      "subspace_prepare",
      [](HalfInt s, HalfInt j, double g, double varphi, HalfInt m) {
        const PrepResult r = subspace_prepare(s, j, g, varphi, m);
        py::dict d;
        d["probability"] = r.probability;
        d["distribution"] = r.distribution;
        d["peak"] = r.peak.value();
        d["peak_estimate"] = r.peak_estimate;
        d["leaked_mass"] = r.leaked_mass;
        d["state"] = r.state;
        return d;
      },
      py::arg("s"), py::arg("j"), py::arg("g"), py::arg("varphi"), py::arg("m"));

  mod.def("prior_entropy", &prior_entropy);
  mod.def("binary_entropy", &binary_entropy, py::arg("p"));

  mod.def("oracle_deviation", &oracle::closed_form_deviation, py::arg("params"), py::arg("s"));

  mod.def("parse_angle", [](const std::string& text) { return cli::parse_angle(text); },
          py::arg("text"));
  mod.def(
      "preset_metrics",
      [](const std::string& name) {
        py::dict d;
        for (const auto& row : cli::preset_metrics(name)) d[py::str(row.name)] = row.value;
        return d;
      },
      py::arg("name"));
  mod.def("preset_names", &cli::preset_names);
  mod.def(
      "metrics",
      [](HalfInt s, HalfInt j, double g, double theta, double phi, const std::string& state) {
        cli::Scenario sc;
        sc.s = s;
        sc.j = j;
        sc.g = g;
        sc.theta = theta;
        sc.phi = phi;
        sc.state = state;
        py::dict d;
        for (const auto& row : cli::scenario_metrics(sc)) d[py::str(row.name)] = row.value;
        return d;
      },
      py::arg("s"), py::arg("j"), py::arg("g"), py::arg("theta"), py::arg("phi"),
      py::arg("state") = "equal");
}
