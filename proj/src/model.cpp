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

#include "nvcpf/model.hpp"

#include <cmath>
#include <string>

namespace nvcpf {

char level_char(Level l) {
    switch (l) {
        case Level::g:
            return 'g';
        case Level::e:
            return 'e';
        case Level::f:
            return 'f';
        case Level::E:
            return 'E';
    }
    return '?';
}

SystemLayout::SystemLayout(std::size_t n_sites, bool with_excited_level, std::size_t n_max)
    : n_sites_(n_sites), has_excited_(with_excited_level), n_max_(n_max), spin_dim_(1) {
    if (n_sites == 0) throw ArgumentError("SystemLayout: n_sites must be >= 1");
    if (n_max == 0) throw ArgumentError("SystemLayout: n_max must be >= 1");
    for (std::size_t i = 0; i < n_sites; ++i) spin_dim_ *= levels_per_site();
}

std::size_t SystemLayout::basis_index(std::span<const Level> levels, std::size_t photons) const {
    if (levels.size() != n_sites_) {
        throw ArgumentError("basis_index: expected " + std::to_string(n_sites_) + " site labels, got " +
                            std::to_string(levels.size()));
    }
    if (photons > n_max_) throw ArgumentError("basis_index: photon number above truncation");
    std::size_t idx = 0;
    for (Level l : levels) {
        const auto v = static_cast<std::size_t>(l);
        if (v >= levels_per_site()) throw ArgumentError("basis_index: level E not present in layout");
        idx = idx * levels_per_site() + v;
    }
    return idx * fock_dim() + photons;
}

SystemLayout::Label SystemLayout::basis_label(std::size_t index) const {
    if (index >= dimension()) throw ArgumentError("basis_label: index out of range");
    Label out;
    out.photons = index % fock_dim();
    std::size_t spin = index / fock_dim();
    out.levels.resize(n_sites_);
    for (std::size_t s = n_sites_; s-- > 0;) {
        out.levels[s] = static_cast<Level>(spin % levels_per_site());
        spin /= levels_per_site();
    }
    return out;
}

StateVector SystemLayout::basis_state(std::span<const Level> levels, std::size_t photons) const {
    StateVector v(dimension());
    v[basis_index(levels, photons)] = 1.0;
    return v;
}

std::string SystemLayout::describe(std::size_t index) const {
    const Label l = basis_label(index);
    std::string s = "|";
    for (std::size_t i = 0; i < l.levels.size(); ++i) {
        if (i) s += ',';
        s += level_char(l.levels[i]);
    }
    return s + ";" + std::to_string(l.photons) + ">";
}

SystemLayout build_layout(int n_sites, bool with_E_level, int n_max) {
    if (n_sites < 1) throw ArgumentError("build_layout: n_sites must be >= 1");
    if (n_max < 1) throw ArgumentError("build_layout: n_max must be >= 1");
    return SystemLayout(static_cast<std::size_t>(n_sites), with_E_level, static_cast<std::size_t>(n_max));
}

ModelParams ModelParams::canonical(double m, std::size_t n_sites) {
    if (!(m > 0)) throw ArgumentError("ModelParams::canonical: m must be positive");
    if (n_sites < 1) throw ArgumentError("ModelParams::canonical: need at least one site");
    ModelParams p;
    p.effective_coupling.assign(n_sites, 1.0 / m);
    p.effective_coupling.back() = 1.0;
    return p;
}

ModelParams ModelParams::from_raman(std::vector<double> coupling, std::vector<double> rabi,
                                    std::vector<double> detuning) {
    if (coupling.size() != rabi.size() || coupling.size() != detuning.size()) {
        throw ArgumentError("ModelParams::from_raman: per-site vectors differ in length");
    }
    ModelParams p;
    p.effective_coupling.resize(coupling.size());
    for (std::size_t j = 0; j < coupling.size(); ++j) {
        if (detuning[j] == 0.0) throw ArgumentError("ModelParams::from_raman: zero detuning");
        p.effective_coupling[j] = coupling[j] * rabi[j] / detuning[j];
    }
    p.cavity_coupling = std::move(coupling);
    p.laser_rabi = std::move(rabi);
    p.detuning = std::move(detuning);
    return p;
}

double ModelParams::asymmetry() const {
    if (effective_coupling.size() < 2 || effective_coupling.front() == 0.0) {
        throw ArgumentError("asymmetry: needs at least two sites and a nonzero first coupling");
    }
    return effective_coupling.back() / effective_coupling.front();
}

void ModelParams::validate(std::size_t n_sites) const {
    if (kappa < 0 || gamma_eg < 0 || gamma_fg < 0) throw ArgumentError("ModelParams: negative decay rate");
    if (!effective_coupling.empty() && effective_coupling.size() != n_sites) {
        throw ArgumentError("ModelParams: effective_coupling has wrong length");
    }
    if (!has_raman()) return;
    if (detuning.size() != n_sites || cavity_coupling.size() != n_sites || laser_rabi.size() != n_sites) {
        throw ArgumentError("ModelParams: Raman parameter vectors must have one entry per site");
    }
    for (std::size_t j = 0; j < n_sites; ++j) {
        if (detuning[j] == 0.0) throw ArgumentError("ModelParams: zero detuning at site " + std::to_string(j + 1));
        if (cavity_coupling[j] < 0 || laser_rabi[j] < 0) throw ArgumentError("ModelParams: negative coupling");
        if (!effective_coupling.empty()) {
            const double derived = cavity_coupling[j] * laser_rabi[j] / detuning[j];
            const double scale = std::max(std::abs(derived), std::abs(effective_coupling[j]));
            if (std::abs(derived - effective_coupling[j]) > 1e-12 * scale) {
                throw ArgumentError("ModelParams: effective coupling at site " + std::to_string(j + 1) +
                                    " disagrees with G*Omega/Delta");
            }
        }
    }
}

ComplexMatrix site_transition(const SystemLayout &layout, Level to, Level from) {
    const std::size_t L = layout.levels_per_site();
    const auto t = static_cast<std::size_t>(to);
    const auto f = static_cast<std::size_t>(from);
    if (t >= L || f >= L) throw ModelError("site_transition: level E not present in layout");
    ComplexMatrix m(L, L);
    m(t, f) = 1.0;
    return m;
}

ComplexMatrix embed(const SystemLayout &layout, int site, const ComplexMatrix &local_op) {
    const std::size_t L = layout.levels_per_site();
    if (local_op.rows() != L || local_op.cols() != L) {
        throw ArgumentError("embed: local operator must be " + std::to_string(L) + "x" + std::to_string(L));
    }
    if (site < 1 || static_cast<std::size_t>(site) > layout.n_sites()) {
        throw ArgumentError("embed: site " + std::to_string(site) + " out of range");
    }
    const std::size_t before = [&] {
        std::size_t d = 1;
        for (int s = 1; s < site; ++s) d *= L;
        return d;
    }();
    const std::size_t after = layout.spin_dim() / (before * L) * layout.fock_dim();
    return kron(kron(ComplexMatrix::identity(before), local_op), ComplexMatrix::identity(after));
}

ComplexMatrix cavity_op(const SystemLayout &layout, CavityOp which) {
    const std::size_t F = layout.fock_dim();
    ComplexMatrix local(F, F);
    for (std::size_t n = 1; n < F; ++n) {
        const double amp = std::sqrt(static_cast<double>(n));
        switch (which) {
            case CavityOp::annihilate:
                local(n - 1, n) = amp;
                break;
            case CavityOp::create:
                local(n, n - 1) = amp;
                break;
            case CavityOp::number:
                local(n, n) = static_cast<double>(n);
                break;
        }
    }
    return kron(ComplexMatrix::identity(layout.spin_dim()), local);
}

ComplexMatrix excitation_number(const SystemLayout &layout) {
    ComplexMatrix n = cavity_op(layout, CavityOp::number);
    for (std::size_t j = 1; j <= layout.n_sites(); ++j) {
        const int site = static_cast<int>(j);
        n += embed(layout, site, site_transition(layout, Level::e, Level::e));
        if (layout.has_excited_level()) n += embed(layout, site, site_transition(layout, Level::E, Level::E));
    }
    return n;
}

namespace {

// A + A† assembled so the result is exactly Hermitian.
ComplexMatrix plus_adjoint(const ComplexMatrix &a) { return a + a.adjoint(); }

}  // namespace

ComplexMatrix build_full_hamiltonian(const SystemLayout &layout, const ModelParams &params) {
    if (!layout.has_excited_level()) throw ModelError("build_full_hamiltonian: layout lacks the |E> level");
    if (!params.has_raman()) throw ModelError("build_full_hamiltonian: Raman parameters (G, Omega, Delta) required");
    params.validate(layout.n_sites());

    const ComplexMatrix a_dag = cavity_op(layout, CavityOp::create);
    const ComplexMatrix n_ph = cavity_op(layout, CavityOp::number);
    ComplexMatrix h(layout.dimension(), layout.dimension());
    for (std::size_t j = 0; j < layout.n_sites(); ++j) {
        const int site = static_cast<int>(j + 1);
        const double delta = params.detuning[j];
        const double g = params.cavity_coupling[j];
        const double omega = params.laser_rabi[j];

        h += delta * embed(layout, site, site_transition(layout, Level::E, Level::E));
        ComplexMatrix hop = g * (a_dag * embed(layout, site, site_transition(layout, Level::g, Level::E)));
        hop += omega * embed(layout, site, site_transition(layout, Level::E, Level::e));
        h += plus_adjoint(hop);

        if (params.compensate_shifts) {
            h += (omega * omega / delta) * embed(layout, site, site_transition(layout, Level::e, Level::e));
            h += (g * g / delta) * (n_ph * embed(layout, site, site_transition(layout, Level::g, Level::g)));
        }
    }
    return h;
}

ComplexMatrix build_effective_hamiltonian(const SystemLayout &layout, const ModelParams &params,
                                          bool with_shifts) {
    if (layout.has_excited_level()) throw ModelError("build_effective_hamiltonian: layout must not include |E>");
    params.validate(layout.n_sites());
    if (params.effective_coupling.size() != layout.n_sites()) {
        throw ArgumentError("build_effective_hamiltonian: need one effective coupling per site");
    }
    if (with_shifts && !params.has_raman()) {
        throw ArgumentError("build_effective_hamiltonian: dynamic shifts need G, Omega and Delta");
    }

    const ComplexMatrix a = cavity_op(layout, CavityOp::annihilate);
    const ComplexMatrix n_ph = cavity_op(layout, CavityOp::number);
    ComplexMatrix h(layout.dimension(), layout.dimension());
    for (std::size_t j = 0; j < layout.n_sites(); ++j) {
        const int site = static_cast<int>(j + 1);
        h += plus_adjoint(params.effective_coupling[j] *
                          (embed(layout, site, site_transition(layout, Level::e, Level::g)) * a));
        if (with_shifts) {
            const double delta = params.detuning[j];
            const double g = params.cavity_coupling[j];
            const double omega = params.laser_rabi[j];
            h += (omega * omega / delta) * embed(layout, site, site_transition(layout, Level::e, Level::e));
            h += (g * g / delta) * (n_ph * embed(layout, site, site_transition(layout, Level::g, Level::g)));
        }
    }
    return h;
}

std::vector<ComplexMatrix> build_collapse_ops(const SystemLayout &layout, const ModelParams &params) {
    if (params.kappa < 0 || params.gamma_eg < 0 || params.gamma_fg < 0) {
        throw ArgumentError("build_collapse_ops: decay rates must be non-negative");
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(1 + 2 * layout.n_sites());
    ops.push_back(std::sqrt(2.0 * params.kappa) * cavity_op(layout, CavityOp::annihilate));
    for (std::size_t j = 0; j < layout.n_sites(); ++j) {
        const int site = static_cast<int>(j + 1);
        ops.push_back(std::sqrt(2.0 * params.gamma_eg) *
                      embed(layout, site, site_transition(layout, Level::g, Level::e)));
        ops.push_back(std::sqrt(2.0 * params.gamma_fg) *
                      embed(layout, site, site_transition(layout, Level::g, Level::f)));
    }
    return ops;
}

}  // namespace nvcpf
