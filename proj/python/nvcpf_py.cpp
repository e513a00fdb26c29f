// Copyright 2026 The nvcpf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "nvcpf/analytic.hpp"
#include "nvcpf/config.hpp"
#include "nvcpf/csv.hpp"
#include "nvcpf/engine.hpp"
#include "nvcpf/physical.hpp"
#include "nvcpf/version.hpp"

namespace py = pybind11;
using namespace nvcpf;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

CArray to_numpy(const ComplexMatrix &m) {
    CArray out({m.rows(), m.cols()});
    std::memcpy(out.mutable_data(), m.entries().data(), m.entries().size() * sizeof(cplx));
    return out;
}

CArray to_numpy(const StateVector &v) {
    CArray out(v.size());
    std::memcpy(out.mutable_data(), v.data(), v.size() * sizeof(cplx));
    return out;
}

ComplexMatrix from_numpy(const CArray &a) {
    if (a.ndim() != 2) throw DimensionError("expected a 2-D array");
    const auto r = static_cast<std::size_t>(a.shape(0)), c = static_cast<std::size_t>(a.shape(1));
    return ComplexMatrix(r, c, std::vector<cplx>(a.data(), a.data() + r * c));
}

py::dict table_to_dict(const ResultTable &t) {
    py::dict columns;
    for (const auto &name : t.columns) {
        const auto vals = t.column_values(name);
        columns[py::str(name)] = py::array_t<double>(vals.size(), vals.data());
    }
    py::dict out;
    out["columns"] = columns;
    out["order"] = t.columns;
    out["metadata"] = t.metadata;
    return out;
}

std::vector<Level> parse_label(const std::string &s) {
    std::vector<Level> out;
    for (char c : s) {
        switch (c) {
            case 'g': out.push_back(Level::g); break;
            case 'e': out.push_back(Level::e); break;
            case 'f': out.push_back(Level::f); break;
            case 'E': out.push_back(Level::E); break;
            default: throw ArgumentError(std::string("unknown level '") + c + "'");
        }
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_nvcpf, m) {
    m.doc() = "Three-qubit conditional phase flip gate simulator";
    m.attr("__version__") = std::string(kVersion);

    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("kron", [](const CArray &a, const CArray &b) { return to_numpy(kron(from_numpy(a), from_numpy(b))); });
    m.def("expm", [](const CArray &a) { return to_numpy(expm(from_numpy(a))); });

    m.def(
        "gate_phases",
        [](double mm, int k) {
            const GatePhases p = gate_phases(mm, k);
            py::dict d;
            d["alpha"] = p.alpha.real();
            d["beta"] = p.beta;
            d["t0"] = p.t0;
            d["k"] = p.k;
            return d;
        },
        py::arg("m"), py::arg("k") = 0);
    m.def("ideal_gate", [] { return to_numpy(ideal_gate()); });
    m.def("realized_gate", [](double mm, int k) { return to_numpy(realized_gate(mm, k)); }, py::arg("m"),
          py::arg("k") = 0);
    m.def(
        "analytic_evolve",
        [](const std::string &label, double t, double mm) {
            const auto l = parse_label(label);
            return to_numpy(analytic_evolve(l, t, AnalyticParams::from_ratio(mm)));
        },
        py::arg("label"), py::arg("t"), py::arg("m"), "Closed-form evolution of e.g. 'gge' with the cavity empty.");
    m.def(
        "effective_hamiltonian",
        [](double mm, int n_max) {
            return to_numpy(build_canonical_model(mm, NoiseParams{}, n_max).hamiltonian);
        },
        py::arg("m"), py::arg("n_max") = 1);
    m.def(
        "extract_gate",
        [](double mm, double kappa, double gamma_eg, double gamma_fg, double dt, int k) {
            const double step = dt > 0 ? dt : default_dt(mm);
            return to_numpy(extract_gate(mm, NoiseParams{kappa, gamma_eg, gamma_fg}, step, k));
        },
        py::arg("m"), py::arg("kappa") = 0.0, py::arg("gamma_eg") = 0.0, py::arg("gamma_fg") = 0.0,
        py::arg("dt") = 0.0, py::arg("k") = 0);
    m.def(
        "gate_fidelity_run",
        [](double mm, std::vector<double> times, double kappa, double gamma_eg, double gamma_fg, double dt,
           const std::string &target, int k, int n_max) {
            FidelityRunOptions opts;
            opts.target = target == "realized" ? GateTarget::realized : GateTarget::ideal;
            opts.k = k;
            opts.n_max = n_max;
            const double step = dt > 0 ? dt : default_dt(mm);
            ResultTable t;
            {
                py::gil_scoped_release release;
                t = gate_fidelity_run(mm, NoiseParams{kappa, gamma_eg, gamma_fg}, times, step, opts);
            }
            return table_to_dict(t);
        },
        py::arg("m"), py::arg("times"), py::arg("kappa") = 0.01, py::arg("gamma_eg") = 0.01,
        py::arg("gamma_fg") = 1e-6, py::arg("dt") = 0.0, py::arg("target") = "ideal", py::arg("k") = 0,
        py::arg("n_max") = 1);
    m.def(
        "sweep_panel",
        [](const std::string &panel, std::size_t points) {
            if (panel.size() != 1) throw ArgumentError("panel must be one of a, b, c, d");
            ResultTable t;
            {
                py::gil_scoped_release release;
                t = sweep(panel_spec(panel[0], points));
            }
            return table_to_dict(t);
        },
        py::arg("panel"), py::arg("points") = 0);
    m.def(
        "compare_full_effective",
        [](double mm, std::vector<double> ratios, double t, double dt) {
            return table_to_dict(compare_full_effective(mm, ratios, t, dt));
        },
        py::arg("m"), py::arg("delta_over_g"), py::arg("t"), py::arg("dt") = 0.01);
    m.def(
        "physical_params",
        [](double wavelength, double gamma0, double vm, double q, double omega_max, double delta, double g3) {
            PhysicalInputs in{wavelength, gamma0, vm, q, kSpeedOfLight};
            const PhysicalReport r = derive_physical_params(in, omega_max, delta, g3);
            py::dict d;
            d["interaction_volume"] = r.derived.interaction_volume;
            d["g_max"] = r.derived.g_max;
            d["kappa"] = r.derived.kappa;
            d["gamma_eg"] = r.derived.gamma_eg_est;
            d["excited_population"] = r.derived.excited_population;
            d["gate_time"] = r.derived.gate_time;
            py::list comps;
            for (const auto &c : r.comparisons) {
                py::dict cd;
                cd["quantity"] = c.quantity;
                cd["computed"] = c.computed;
                cd["quoted"] = c.quoted;
                cd["agrees"] = c.agrees();
                cd["note"] = c.note;
                comps.append(cd);
            }
            d["comparisons"] = comps;
            return d;
        },
        py::arg("wavelength"), py::arg("gamma0"), py::arg("vm"), py::arg("q"), py::arg("omega_max"),
        py::arg("delta"), py::arg("g3"));
    m.def(
        "parse_config",
        [](const std::string &text) {
            const RunConfig cfg = parse_config(text);
            py::dict d;
            for (const auto &key : RunConfig::known_keys()) {
                std::visit([&](const auto &v) { d[py::str(key)] = v; }, cfg.get(key));
            }
            return d;
        },
        py::arg("text"));
}
