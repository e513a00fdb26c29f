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

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nvcpf/matrix.hpp"
#include "nvcpf/model.hpp"
#include "nvcpf/table.hpp"

namespace nvcpf {

/// Decay rates in units of G̃_3.
struct NoiseParams {
    double kappa = 0;
    double gamma_eg = 0;
    double gamma_fg = 0;

    void validate() const;
    bool is_zero() const { return kappa == 0 && gamma_eg == 0 && gamma_fg == 0; }
};

/// Rates used throughout the fidelity figure: Γ_eg = G̃_3/100, Γ_fg = G̃_3/1e6.
NoiseParams figure_noise(double kappa);

/// Tolerances a density matrix must satisfy during integration.
inline constexpr double kTraceTolerance = 1e-8;
inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kPositivityTolerance = 1e-10;

struct DensityState {
    ComplexMatrix rho;
    SystemLayout layout;

    static DensityState pure(const SystemLayout &layout, std::span<const cplx> psi);

    /// Throws IntegrationError naming `t` and the violated quantity.
    void check_invariants(double t) const;
};

/// expm(-iHt) psi0.
StateVector propagate_unitary(const ComplexMatrix &h, std::span<const cplx> psi0, double t);

/// Called with (grid index, time, state) at every requested time.
using DensityVisitor = std::function<void(std::size_t, double, const ComplexMatrix &)>;

/// Integrates ρ̇ = -i[H,ρ] + Σ_k (L_k ρ L_k† - ½{L_k†L_k, ρ}) with RK4 from
/// ρ0 at t = 0, visiting the state at each time of `t_grid` (non-decreasing,
/// non-negative). Only the block of ρ reachable from ρ0's support under H and
/// the L_k is integrated; every other entry is identically zero. Invariants
/// are checked at every grid time.
void for_each_lindblad_state(const ComplexMatrix &h, const std::vector<ComplexMatrix> &collapse_ops,
                             const DensityState &rho0, std::span<const double> t_grid, double dt,
                             const DensityVisitor &visit);

std::vector<DensityState> propagate_lindblad(const ComplexMatrix &h, const std::vector<ComplexMatrix> &collapse_ops,
                                             const DensityState &rho0, std::span<const double> t_grid, double dt);

/// <target|ρ|target>, clamped to [0, 1].
double state_fidelity(const DensityState &rho, std::span<const cplx> target);
double state_fidelity(const ComplexMatrix &rho, std::span<const cplx> target);

enum class GateTarget { ideal, realized };
std::string to_string(GateTarget t);

/// 0.002 / G̃'' with G̃'' = √(2/m² + 1): at least 500 RK4 steps per fastest
/// Rabi period of the effective model.
double default_dt(double m);

/// Effective-model Hamiltonian and collapse operators in canonical units.
struct EffectiveModel {
    SystemLayout layout;
    ComplexMatrix hamiltonian;
    std::vector<ComplexMatrix> collapse_ops;
};
EffectiveModel build_canonical_model(double m, const NoiseParams &noise, int n_max = 1);

/// Uniform superposition of the 8 computational states, cavity in vacuum.
StateVector gate_input_state(const SystemLayout &layout);
/// Gate applied to gate_input_state, renormalized.
StateVector gate_target_state(const SystemLayout &layout, GateTarget target, double m, int k = 0);

struct FidelityRunOptions {
    GateTarget target = GateTarget::ideal;
    int k = 0;
    int n_max = 1;
};

/// F(t) = <ψ_T|ρ(t)|ψ_T> on a grid of G̃_3 t values. Columns: g3_t, fidelity.
ResultTable gate_fidelity_run(double m, const NoiseParams &noise, std::span<const double> t_grid, double dt,
                              const FidelityRunOptions &opts = {});

/// 8x8 overlaps <b_j; 0|ψ_i(t0)> of each evolved computational state. With
/// noise, ψ_i evolves under H - (i/2) Σ L†L, which is the Lindblad evolution
/// of the coherence |b_i><g1g2g3;0| (the reference state is dark).
ComplexMatrix extract_gate(double m, const NoiseParams &noise, double dt, int k = 0);

enum class SweepParameter { time, kappa_ratio, m };
std::string to_string(SweepParameter p);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::time;
    std::vector<double> grid;
    NoiseParams noise;
    double m = 0.1;
    char panel = 'a';
    /// Curve family: each member gets its own column(s). Empty means one curve.
    SweepParameter family_parameter = SweepParameter::kappa_ratio;
    std::vector<double> family;
    double dt = 0;  // 0 selects default_dt per run
    FidelityRunOptions run;
    unsigned workers = 0;  // 0 selects hardware concurrency

    void validate() const;
};

inline constexpr std::size_t kDefaultTimePoints = 400;
inline constexpr std::size_t kDefaultScanPoints = 50;

/// The fidelity figure's four panels. `points` = 0 keeps the defaults
/// (400 times over [0, 1.5π] for a/c; 50 values for b/d).
SweepSpec panel_spec(char panel, std::size_t points = 0);

std::vector<double> linspace(double lo, double hi, std::size_t n);

ResultTable sweep(const SweepSpec &spec);

/// Couplings of the published operating point relative to G: Ω_1/G = 2.5/5.5.
inline constexpr double kPublishedRabiOverCoupling = 2.5 / 5.5;
/// Δ/G at the published operating point (25 GHz / 5.5 GHz).
inline constexpr double kPublishedDetuningRatio = 25.0 / 5.5;

/// Full (with |E>) versus effective model for each Δ/G ratio. Columns:
/// delta_over_g, eps, e_pop_peak, e_pop_mean. `t` is in units of 1/G̃_3, `dt`
/// is the sampling step for the |E> population statistics.
ResultTable compare_full_effective(double m, std::span<const double> delta_over_g, double t, double dt);

}  // namespace nvcpf
