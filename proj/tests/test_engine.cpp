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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nvcpf/analytic.hpp"
#include "nvcpf/engine.hpp"

using namespace nvcpf;

namespace {

using L = Level;
constexpr double kPi = std::numbers::pi;

DensityState basis_density(const SystemLayout &layout, std::vector<L> levels, std::size_t photons) {
    return DensityState::pure(layout, layout.basis_state(levels, photons));
}

}  // namespace

TEST(Unitary, Basics) {
    const ComplexMatrix h = ComplexMatrix::diagonal(std::vector<cplx>{0.7, -1.1});
    const StateVector psi0{1.0, 0.0};
    EXPECT_EQ(propagate_unitary(h, psi0, 0.0), psi0);
    const StateVector psi = propagate_unitary(h, psi0, 2.0);
    EXPECT_NEAR(std::abs(psi[0] - std::exp(cplx(0, -1.4))), 0.0, 1e-14);
    EXPECT_EQ(psi[1], cplx(0));
    EXPECT_THROW(propagate_unitary(h, StateVector{1.0}, 1.0), DimensionError);
}

TEST(Unitary, QuarterPeriodOfSlowSite) {
    const EffectiveModel model = build_canonical_model(0.1, {});
    const StateVector psi =
        propagate_unitary(model.hamiltonian, model.layout.basis_state(std::vector<L>{L::f, L::f, L::e}, 0), kPi / 2);
    EXPECT_NEAR(std::abs(psi[model.layout.basis_index(std::vector<L>{L::f, L::f, L::g}, 1)] - cplx(0, -1)), 0.0, 1e-9);
    EXPECT_NEAR(norm2(psi), 1.0, 1e-10);
}

TEST(Lindblad, CavityDecayFactorTwo) {
    const SystemLayout layout = build_layout(1, false, 1);
    ModelParams p = ModelParams::canonical(1.0, 1);
    p.kappa = 0.35;
    const auto ops = build_collapse_ops(layout, p);
    const ComplexMatrix h(layout.dimension(), layout.dimension());
    const auto grid = linspace(0.0, 3.0, 13);
    const auto states = propagate_lindblad(h, ops, basis_density(layout, {L::g}, 1), grid, 1e-3);
    const std::size_t one = layout.basis_index(std::vector<L>{L::g}, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(states[i].rho(one, one).real(), std::exp(-2 * 0.35 * grid[i]), 1e-6);
    }
}

TEST(Lindblad, TwoLevelDecay) {
    const SystemLayout layout = build_layout(1, false, 1);
    ModelParams p = ModelParams::canonical(1.0, 1);
    p.gamma_eg = 0.2;
    const auto ops = build_collapse_ops(layout, p);
    const ComplexMatrix h(layout.dimension(), layout.dimension());
    const auto grid = linspace(0.0, 4.0, 9);
    const auto states = propagate_lindblad(h, ops, basis_density(layout, {L::e}, 0), grid, 1e-3);
    const std::size_t g = layout.basis_index(std::vector<L>{L::g}, 0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(states[i].rho(g, g).real(), 1 - std::exp(-2 * 0.2 * grid[i]), 1e-9);
    }
}

TEST(Lindblad, ClosedSystemMatchesConjugation) {
    const EffectiveModel model = build_canonical_model(0.1, {});
    const StateVector psi0 = gate_input_state(model.layout);
    const DensityState rho0 = DensityState::pure(model.layout, psi0);
    const auto grid = linspace(0.0, kPi, 20);
    const auto states = propagate_lindblad(model.hamiltonian, model.collapse_ops, rho0, grid, default_dt(0.1));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const ComplexMatrix u = expm(cplx(0, -grid[i]) * model.hamiltonian);
        const ComplexMatrix expected = u * rho0.rho * u.adjoint();
        EXPECT_LT(max_abs_diff(states[i].rho, expected), 1e-8) << "t = " << grid[i];
    }
}

TEST(Lindblad, InvariantsAndExcitationMonotonicity) {
    const EffectiveModel model = build_canonical_model(0.1, {0.05, 0.03, 0.01});
    const DensityState rho0 = DensityState::pure(model.layout, gate_input_state(model.layout));
    const ComplexMatrix nex = excitation_number(model.layout);
    const double dt = default_dt(0.1);
    // One grid point every 5 RK4 steps.
    const auto grid = linspace(0.0, 5 * dt * 400, 401);
    double prev = 2.0;
    for_each_lindblad_state(model.hamiltonian, model.collapse_ops, rho0, grid, dt,
                            [&](std::size_t, double t, const ComplexMatrix &rho) {
                                EXPECT_LE(std::abs(rho.trace() - cplx(1)), kTraceTolerance);
                                EXPECT_TRUE(rho.is_hermitian(kHermiticityTolerance));
                                const double n = (nex * rho).trace().real();
                                EXPECT_LE(n, prev + 1e-9) << "t = " << t;
                                prev = n;
                            });
}

TEST(Lindblad, InvariantViolationNamesTimeAndQuantity) {
    // Non-Hermitian H: the norm leaks and the trace check trips.
    const SystemLayout layout = build_layout(1, false, 1);
    ComplexMatrix h(layout.dimension(), layout.dimension());
    h(0, 0) = cplx(0, -0.5);
    const auto grid = linspace(0.0, 1.0, 5);
    try {
        propagate_lindblad(h, {}, basis_density(layout, {L::g}, 0), grid, 1e-2);
        FAIL() << "expected IntegrationError";
    } catch (const IntegrationError &e) {
        EXPECT_EQ(e.quantity, "trace deviation");
        EXPECT_DOUBLE_EQ(e.time, 0.25);
        EXPECT_NE(std::string(e.what()).find("t = 0.25"), std::string::npos);
    }
}

TEST(Lindblad, PositivityGuard) {
    const SystemLayout layout = build_layout(1, false, 1);
    DensityState bad = basis_density(layout, {L::g}, 0);
    bad.rho(1, 1) = -1e-6;
    bad.rho(0, 0) = 1.0 + 1e-6;
    try {
        bad.check_invariants(0.5);
        FAIL() << "expected IntegrationError";
    } catch (const IntegrationError &e) {
        EXPECT_EQ(e.quantity, "negative population");
    }
    DensityState skew = basis_density(layout, {L::g}, 0);
    skew.rho(0, 1) = 1e-6;
    EXPECT_THROW(skew.check_invariants(0.0), IntegrationError);
}

TEST(Lindblad, ArgumentChecks) {
    const EffectiveModel model = build_canonical_model(0.1, {});
    const DensityState rho0 = DensityState::pure(model.layout, gate_input_state(model.layout));
    const std::vector<double> bad_grid{0.0, 1.0, 0.5};
    EXPECT_THROW(propagate_lindblad(model.hamiltonian, model.collapse_ops, rho0, bad_grid, 0.01), ArgumentError);
    const std::vector<double> grid{0.0, 1.0};
    EXPECT_THROW(propagate_lindblad(model.hamiltonian, model.collapse_ops, rho0, grid, 0.0), ArgumentError);
    EXPECT_THROW(propagate_lindblad(ComplexMatrix(3, 3), {}, rho0, grid, 0.01), DimensionError);
}

TEST(Fidelity, StateFidelityBasics) {
    const StateVector target{1 / std::sqrt(2.0), cplx(0, 1 / std::sqrt(2.0))};
    const StateVector orth{1 / std::sqrt(2.0), cplx(0, -1 / std::sqrt(2.0))};
    EXPECT_NEAR(state_fidelity(ComplexMatrix::outer(target, target), target), 1.0, 1e-15);
    EXPECT_NEAR(state_fidelity(ComplexMatrix::outer(orth, orth), target), 0.0, 1e-15);
    const ComplexMatrix mix =
        cplx(0.5) * ComplexMatrix::outer(target, target) + cplx(0.5) * ComplexMatrix::outer(orth, orth);
    EXPECT_NEAR(state_fidelity(mix, target), 0.5, 1e-15);
    EXPECT_THROW(state_fidelity(mix, StateVector{1.0}), DimensionError);
}

TEST(Fidelity, InitialOverlap) {
    const std::vector<double> grid{0.0};
    const ResultTable t = gate_fidelity_run(0.1, figure_noise(0.01), grid, default_dt(0.1));
    EXPECT_NEAR(t.rows.at(0).at(1), 0.5625, 1e-15);
    EXPECT_EQ(t.columns, (std::vector<std::string>{"g3_t", "fidelity"}));
    EXPECT_EQ(t.metadata.at("target"), "ideal");
}

TEST(Fidelity, ClosedSystemAtGateTime) {
    const std::vector<double> grid{kPi};
    const ResultTable t = gate_fidelity_run(0.1, {}, grid, default_dt(0.1));
    EXPECT_GE(t.rows.at(0).at(1), 0.999);
}

TEST(Fidelity, RealizedTargetIsCloserWithoutNoise) {
    const std::vector<double> grid{kPi};
    FidelityRunOptions opts;
    opts.target = GateTarget::realized;
    const double realized = gate_fidelity_run(0.1, {}, grid, default_dt(0.1), opts).rows[0][1];
    const double ideal = gate_fidelity_run(0.1, {}, grid, default_dt(0.1)).rows[0][1];
    EXPECT_GE(realized, ideal);
}

TEST(Fidelity, NmaxIndependence) {
    const auto grid = linspace(0.0, kPi, 5);
    FidelityRunOptions two;
    two.n_max = 2;
    const ResultTable a = gate_fidelity_run(0.1, figure_noise(0.01), grid, default_dt(0.1));
    const ResultTable b = gate_fidelity_run(0.1, figure_noise(0.01), grid, default_dt(0.1), two);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(a.rows[i][1], b.rows[i][1], 1e-12);
}

TEST(Fidelity, DtHalvingConvergence) {
    const auto grid = linspace(0.0, 1.5 * kPi, 13);
    const double dt = default_dt(0.1);
    const ResultTable a = gate_fidelity_run(0.1, figure_noise(0.01), grid, dt);
    const ResultTable b = gate_fidelity_run(0.1, figure_noise(0.01), grid, dt / 2);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_LT(std::abs(a.rows[i][1] - b.rows[i][1]), 1e-8);
}

TEST(ExtractGate, ClosedSystemMatchesRealizedGate) {
    const ComplexMatrix u = extract_gate(0.1, {}, default_dt(0.1));
    const ComplexMatrix r = realized_gate(0.1);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(std::abs(u(i, i) - r(i, i)), 0.0, 1e-9) << i;
        for (std::size_t j = 0; j < 8; ++j) {
            if (i != j) EXPECT_LT(std::abs(u(i, j)), 0.02);
        }
    }
    for (std::size_t c = 0; c < 8; ++c) {
        double s = 0;
        for (std::size_t r2 = 0; r2 < 8; ++r2) s += std::norm(u(r2, c));
        EXPECT_LE(std::sqrt(s), 1 + 1e-10);
    }
}

TEST(ExtractGate, SmallMIsIdeal) {
    const double m = 1e-4;
    // default_dt(1e-4) means ~2e7 steps; 3e-6 still keeps G'' dt near 0.04.
    const ComplexMatrix u = extract_gate(m, {}, 3e-6);
    EXPECT_LT(max_abs_diff(u, ideal_gate()), 1e-6);
}

TEST(ExtractGate, NoiseOnlyShrinks) {
    const ComplexMatrix clean = extract_gate(0.1, {}, default_dt(0.1));
    const ComplexMatrix noisy = extract_gate(0.1, figure_noise(0.05), default_dt(0.1));
    for (std::size_t i = 0; i < 8; ++i) EXPECT_LE(std::abs(noisy(i, i)), std::abs(clean(i, i)) + 1e-12);
    EXPECT_EQ(noisy(0, 0), cplx(1));
}

TEST(Sweep, PanelSpecs) {
    const SweepSpec a = panel_spec('a');
    EXPECT_EQ(a.grid.size(), kDefaultTimePoints);
    EXPECT_DOUBLE_EQ(a.grid.back(), 1.5 * kPi);
    EXPECT_EQ(a.family, (std::vector<double>{0.01, 0.02, 0.05}));
    const SweepSpec b = panel_spec('b');
    EXPECT_EQ(b.grid.size(), kDefaultScanPoints);
    EXPECT_DOUBLE_EQ(b.grid.front(), 0.005);
    EXPECT_DOUBLE_EQ(b.grid.back(), 0.1);
    const SweepSpec d = panel_spec('d');
    EXPECT_DOUBLE_EQ(d.grid.front(), 0.02);
    EXPECT_DOUBLE_EQ(d.grid.back(), 0.2);
    EXPECT_THROW(panel_spec('e'), ArgumentError);
}

TEST(Sweep, KappaOrdering) {
    SweepSpec s = panel_spec('b');
    s.grid = {0.01, 0.05};
    const ResultTable t = sweep(s);
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_GT(t.rows[0][1], t.rows[1][1]);
}

TEST(Sweep, SmallMBeatsLargeM) {
    SweepSpec s = panel_spec('d');
    s.grid = {0.02, 0.1};
    const ResultTable t = sweep(s);
    EXPECT_GE(t.rows[0][1], t.rows[1][1]);
}

TEST(Sweep, SinglePointGridAndValidation) {
    SweepSpec s = panel_spec('b');
    s.grid = {0.02};
    EXPECT_EQ(sweep(s).rows.size(), 1u);
    s.grid = {0.02, 0.01};
    EXPECT_THROW(sweep(s), ArgumentError);
    s.grid = {};
    EXPECT_THROW(sweep(s), ArgumentError);
}

TEST(Sweep, WorkerCountDoesNotChangeOutput) {
    SweepSpec s = panel_spec('a', 9);
    s.workers = 1;
    const ResultTable one = sweep(s);
    s.workers = 4;
    EXPECT_EQ(sweep(s), one);
}

TEST(Sweep, PanelCHasBothTimeAxes) {
    SweepSpec s = panel_spec('c', 3);
    const ResultTable t = sweep(s);
    const auto gi = t.column_values("gi_t_m=0.04");
    const auto g3 = t.column_values("g3_t");
    for (std::size_t i = 0; i < g3.size(); ++i) EXPECT_NEAR(gi[i], g3[i] / 0.04, 1e-12);
}

TEST(Validate, ErrorDecreasesWithDetuning) {
    const std::vector<double> ratios{10, 20, 40, 200};
    const ResultTable t = compare_full_effective(0.1, ratios, kPi, 0.01);
    const auto eps = t.column_values("eps");
    EXPECT_GT(eps[0], eps[1]);
    EXPECT_GT(eps[1], eps[2]);
    EXPECT_LT(eps[3], eps[0] / 10);
    const std::vector<double> bad{0.5};
    EXPECT_THROW(compare_full_effective(0.1, bad, kPi, 0.01), ArgumentError);
}
