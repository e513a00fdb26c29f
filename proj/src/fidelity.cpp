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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nvcpf/analytic.hpp"
#include "nvcpf/engine.hpp"
#include "nvcpf/ode.hpp"
#include "nvcpf/version.hpp"

namespace nvcpf {

std::string to_string(GateTarget t) { return t == GateTarget::ideal ? "ideal" : "realized"; }

double default_dt(double m) {
    if (!(m > 0)) throw ArgumentError("default_dt: m must be positive");
    return 0.002 / std::sqrt(2.0 / (m * m) + 1.0);
}

EffectiveModel build_canonical_model(double m, const NoiseParams &noise, int n_max) {
    noise.validate();
    SystemLayout layout = build_layout(3, false, n_max);
    ModelParams params = ModelParams::canonical(m);
    params.kappa = noise.kappa;
    params.gamma_eg = noise.gamma_eg;
    params.gamma_fg = noise.gamma_fg;
    ComplexMatrix h = build_effective_hamiltonian(layout, params, false);
    auto ops = build_collapse_ops(layout, params);
    return {std::move(layout), std::move(h), std::move(ops)};
}

StateVector gate_input_state(const SystemLayout &layout) {
    StateVector psi(layout.dimension());
    const double amp = 1.0 / std::sqrt(8.0);
    for (const auto &label : computational_basis()) psi[layout.basis_index(label, 0)] = amp;
    return psi;
}

StateVector gate_target_state(const SystemLayout &layout, GateTarget target, double m, int k) {
    const ComplexMatrix gate = target == GateTarget::ideal ? ideal_gate() : realized_gate(m, k);
    StateVector psi(layout.dimension());
    const auto &basis = computational_basis();
    const double amp = 1.0 / std::sqrt(8.0);
    for (std::size_t row = 0; row < basis.size(); ++row) {
        cplx s = 0;
        for (std::size_t col = 0; col < basis.size(); ++col) s += gate(row, col) * amp;
        psi[layout.basis_index(basis[row], 0)] = s;
    }
    const double n = norm2(psi);
    for (auto &z : psi) z /= n;
    return psi;
}

ResultTable gate_fidelity_run(double m, const NoiseParams &noise, std::span<const double> t_grid, double dt,
                              const FidelityRunOptions &opts) {
    const EffectiveModel model = build_canonical_model(m, noise, opts.n_max);
    const StateVector psi0 = gate_input_state(model.layout);
    const StateVector target = gate_target_state(model.layout, opts.target, m, opts.k);
    const DensityState rho0 = DensityState::pure(model.layout, psi0);

    ResultTable table;
    table.columns = {"g3_t", "fidelity"};
    for_each_lindblad_state(model.hamiltonian, model.collapse_ops, rho0, t_grid, dt,
                            [&](std::size_t, double t, const ComplexMatrix &rho) {
                                table.add_row({t, state_fidelity(rho, target)});
                            });

    auto &md = table.metadata;
    md["code_version"] = kVersion;
    md["dt"] = format_exact(dt);
    md["fidelity_definition"] = "<psi_T|rho(t)|psi_T>, psi_0 = uniform over 8 computational states x vacuum";
    md["gamma_eg_ratio"] = format_exact(noise.gamma_eg);
    md["gamma_fg_ratio"] = format_exact(noise.gamma_fg);
    md["grid_points"] = std::to_string(t_grid.size());
    if (!t_grid.empty()) {
        md["grid_start"] = format_exact(t_grid.front());
        md["grid_end"] = format_exact(t_grid.back());
    }
    md["integrator"] = "rk4-fixed";
    md["k_index"] = std::to_string(opts.k);
    md["kappa_ratio"] = format_exact(noise.kappa);
    md["m"] = format_exact(m);
    md["n_max"] = std::to_string(opts.n_max);
    md["target"] = to_string(opts.target);
    md["units"] = "time in 1/G3, rates in G3";
    return table;
}

ComplexMatrix extract_gate(double m, const NoiseParams &noise, double dt, int k) {
    const GatePhases phases = gate_phases(m, k);
    const EffectiveModel model = build_canonical_model(m, noise, 1);
    const SystemLayout &layout = model.layout;

    ComplexMatrix generator = model.hamiltonian;
    for (const auto &l : model.collapse_ops) generator -= cplx(0.0, 0.5) * (l.adjoint() * l);
    generator *= cplx(0.0, -1.0);

    const auto &basis = computational_basis();
    const std::size_t ref = layout.basis_index(basis[0], 0);
    for (std::size_t r = 0; r < layout.dimension(); ++r) {
        if (generator(r, ref) != cplx(0)) throw ModelError("extract_gate: reference state is not stationary");
    }
    for (const auto &l : model.collapse_ops) {
        for (std::size_t r = 0; r < layout.dimension(); ++r) {
            if (l(r, ref) != cplx(0)) throw ModelError("extract_gate: reference state is not dark");
        }
    }

    struct Entry {
        std::size_t row, col;
        cplx value;
    };
    std::vector<Entry> nonzeros;
    for (std::size_t r = 0; r < layout.dimension(); ++r) {
        for (std::size_t c = 0; c < layout.dimension(); ++c) {
            if (generator(r, c) != cplx(0)) nonzeros.push_back({r, c, generator(r, c)});
        }
    }
    const OdeRightHandSide f = [&nonzeros](double, std::span<const cplx> y, std::span<cplx> dy) {
        std::fill(dy.begin(), dy.end(), cplx(0));
        for (const Entry &e : nonzeros) dy[e.row] += e.value * y[e.col];
    };

    ComplexMatrix gate(8, 8);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const StateVector psi0 = layout.basis_state(basis[col], 0);
        const StateVector psi = propagate_ode(f, psi0, 0.0, phases.t0, dt);
        for (std::size_t row = 0; row < basis.size(); ++row) gate(row, col) = psi[layout.basis_index(basis[row], 0)];
    }
    return gate;
}

}  // namespace nvcpf
