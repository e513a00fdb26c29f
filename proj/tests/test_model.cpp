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

#include "nvcpf/model.hpp"
#include "nvcpf/physical.hpp"

using namespace nvcpf;

namespace {

using L = Level;

ComplexMatrix local(const SystemLayout &layout, L to, L from) {
    const std::size_t n = layout.levels_per_site();
    ComplexMatrix m(n, n);
    m(static_cast<std::size_t>(to), static_cast<std::size_t>(from)) = 1.0;
    return m;
}

ModelParams raman_params() {
    return ModelParams::from_raman({1.0, 1.3, 0.7}, {0.4, 0.5, 0.9}, {-9.0, -11.0, -13.0});
}

std::vector<std::vector<L>> all_labels(const SystemLayout &layout) {
    std::vector<std::vector<L>> out;
    for (std::size_t i = 0; i < layout.dimension(); i += layout.fock_dim()) out.push_back(layout.basis_label(i).levels);
    return out;
}

}  // namespace

TEST(Layout, Dimensions) {
    EXPECT_EQ(build_layout(3, false, 1).dimension(), 54u);
    EXPECT_EQ(build_layout(3, true, 1).dimension(), 128u);
    EXPECT_EQ(build_layout(1, false, 2).dimension(), 9u);
}

TEST(Layout, BadArguments) {
    EXPECT_THROW(build_layout(0, false, 1), ArgumentError);
    EXPECT_THROW(build_layout(-2, false, 1), ArgumentError);
    EXPECT_THROW(build_layout(3, false, 0), ArgumentError);
}

TEST(Layout, IndexRoundTripAndConvention) {
    const SystemLayout layout = build_layout(3, true, 2);
    for (std::size_t i = 0; i < layout.dimension(); ++i) {
        const auto lab = layout.basis_label(i);
        EXPECT_EQ(layout.basis_index(lab.levels, lab.photons), i);
    }
    // Site 1 slowest, cavity fastest.
    const std::vector<L> lv{L::e, L::f, L::E};
    EXPECT_EQ(layout.basis_index(lv, 2), ((1u * 4 + 2) * 4 + 3) * 3 + 2);
    EXPECT_EQ(layout.describe(layout.basis_index(lv, 1)), "|e,f,E;1>");
}

TEST(Layout, RejectsEInThreeLevelLayout) {
    const SystemLayout layout = build_layout(2, false, 1);
    const std::vector<L> lv{L::E, L::g};
    EXPECT_THROW(layout.basis_index(lv, 0), ArgumentError);
    const std::vector<L> short_label{L::g};
    EXPECT_THROW(layout.basis_index(short_label, 0), ArgumentError);
}

TEST(Embed, IdentityAndTrace) {
    const SystemLayout layout = build_layout(3, false, 1);
    for (int site = 1; site <= 3; ++site) {
        EXPECT_EQ(embed(layout, site, ComplexMatrix::identity(3)), ComplexMatrix::identity(54));
    }
    ComplexMatrix op(3, 3, {cplx(1, 2), 0, 3, 0, cplx(0.5, -1), 0, 1, 1, 2});
    EXPECT_NEAR(std::abs(embed(layout, 2, op).trace() - op.trace() * 9.0 * 2.0), 0.0, 1e-12);
}

TEST(Embed, BasisAction) {
    const SystemLayout layout = build_layout(3, false, 1);
    const ComplexMatrix op = embed(layout, 2, local(layout, L::g, L::e));
    const std::vector<L> in{L::f, L::e, L::g}, out{L::f, L::g, L::g};
    const StateVector r = op.apply(layout.basis_state(in, 0));
    EXPECT_EQ(r, layout.basis_state(out, 0));
}

TEST(Embed, BadArguments) {
    const SystemLayout layout = build_layout(3, false, 1);
    EXPECT_THROW(embed(layout, 0, ComplexMatrix::identity(3)), ArgumentError);
    EXPECT_THROW(embed(layout, 4, ComplexMatrix::identity(3)), ArgumentError);
    EXPECT_THROW(embed(layout, 1, ComplexMatrix::identity(4)), ArgumentError);
}

TEST(Cavity, Operators) {
    const SystemLayout l1 = build_layout(1, false, 1);
    const ComplexMatrix n1 = cavity_op(l1, CavityOp::number);
    const std::vector<L> g{L::g};
    EXPECT_EQ(n1(l1.basis_index(g, 0), l1.basis_index(g, 0)), cplx(0));
    EXPECT_EQ(n1(l1.basis_index(g, 1), l1.basis_index(g, 1)), cplx(1));
    const ComplexMatrix a = cavity_op(l1, CavityOp::annihilate);
    EXPECT_EQ(a.apply(l1.basis_state(g, 1)), l1.basis_state(g, 0));

    const SystemLayout l2 = build_layout(1, false, 2);
    const ComplexMatrix n2 = cavity_op(l2, CavityOp::number);
    EXPECT_NEAR(std::abs(n2(l2.basis_index(g, 2), l2.basis_index(g, 2)) - 2.0), 0.0, 1e-15);
    const ComplexMatrix a2 = cavity_op(l2, CavityOp::annihilate);
    EXPECT_NEAR(std::abs(a2(l2.basis_index(g, 1), l2.basis_index(g, 2)) - std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_LT(max_abs_diff(cavity_op(l2, CavityOp::create) * a2, n2), 1e-15);
    EXPECT_EQ(cavity_op(l2, CavityOp::create), a2.adjoint());
}

TEST(FullHamiltonian, HermitianExactly) {
    for (bool comp : {true, false}) {
        ModelParams p = raman_params();
        p.compensate_shifts = comp;
        const ComplexMatrix h = build_full_hamiltonian(build_layout(3, true, 1), p);
        EXPECT_TRUE(h.is_hermitian(0.0));
    }
}

TEST(FullHamiltonian, CavityMatrixElement) {
    const SystemLayout layout = build_layout(3, true, 1);
    const ModelParams p = raman_params();
    const ComplexMatrix h = build_full_hamiltonian(layout, p);
    for (L s2 : {L::g, L::e, L::f}) {
        for (L s3 : {L::g, L::f, L::E}) {
            const std::vector<L> bra{L::g, s2, s3}, ket{L::E, s2, s3};
            EXPECT_EQ(h(layout.basis_index(bra, 1), layout.basis_index(ket, 0)), cplx(p.cavity_coupling[0]));
        }
    }
    const std::vector<L> bra{L::E, L::g, L::g}, ket{L::e, L::g, L::g};
    EXPECT_EQ(h(layout.basis_index(bra, 0), layout.basis_index(ket, 0)), cplx(p.laser_rabi[0]));
}

TEST(FullHamiltonian, TwoLevelEigenvalueOracle) {
    // One site, Ω = 0: the {|g;1>, |E;0>} block is [[0, G], [G, Δ]].
    const SystemLayout layout = build_layout(1, true, 1);
    const double g = 0.8, delta = 2.5;
    ModelParams p = ModelParams::from_raman({g}, {0.0}, {delta});
    p.compensate_shifts = false;
    const ComplexMatrix h = build_full_hamiltonian(layout, p);
    const std::vector<L> lg{L::g}, le{L::E};
    const std::size_t i = layout.basis_index(lg, 1), j = layout.basis_index(le, 0);
    ComplexMatrix block(2, 2, {h(i, i), h(i, j), h(j, i), h(j, j)});
    const double tr = block.trace().real();
    const double det = (block(0, 0) * block(1, 1) - block(0, 1) * block(1, 0)).real();
    const double lam_plus = tr / 2 + std::sqrt(tr * tr / 4 - det);
    const double lam_minus = tr / 2 - std::sqrt(tr * tr / 4 - det);
    EXPECT_NEAR(lam_plus, delta / 2 + std::sqrt(delta * delta / 4 + g * g), 1e-14);
    EXPECT_NEAR(lam_minus, delta / 2 - std::sqrt(delta * delta / 4 + g * g), 1e-14);
    // The block is closed: no other entries in rows i, j.
    for (std::size_t c = 0; c < layout.dimension(); ++c) {
        if (c != i && c != j) {
            EXPECT_EQ(h(i, c), cplx(0));
            EXPECT_EQ(h(j, c), cplx(0));
        }
    }
}

TEST(FullHamiltonian, NeedsExcitedLevel) {
    EXPECT_THROW(build_full_hamiltonian(build_layout(3, false, 1), raman_params()), ModelError);
    EXPECT_THROW(build_full_hamiltonian(build_layout(3, true, 1), ModelParams::canonical(0.1)), ModelError);
}

TEST(FullHamiltonian, CompensationTerms) {
    const SystemLayout layout = build_layout(3, true, 1);
    ModelParams p = raman_params();
    const ComplexMatrix on = build_full_hamiltonian(layout, p);
    p.compensate_shifts = false;
    const ComplexMatrix off = build_full_hamiltonian(layout, p);
    const ComplexMatrix diff = on - off;
    const std::vector<L> e1{L::e, L::f, L::f}, g1{L::g, L::f, L::f};
    const double expect_e = p.laser_rabi[0] * p.laser_rabi[0] / p.detuning[0];
    const double expect_g = p.cavity_coupling[0] * p.cavity_coupling[0] / p.detuning[0];
    EXPECT_NEAR(diff(layout.basis_index(e1, 0), layout.basis_index(e1, 0)).real(), expect_e, 1e-15);
    EXPECT_EQ(diff(layout.basis_index(g1, 0), layout.basis_index(g1, 0)), cplx(0));
    EXPECT_NEAR(diff(layout.basis_index(g1, 1), layout.basis_index(g1, 1)).real(), expect_g, 1e-15);
}

TEST(EffectiveHamiltonian, MatrixElementsAndSpectator) {
    const SystemLayout layout = build_layout(3, false, 1);
    const ModelParams p = ModelParams::canonical(0.1);
    const ComplexMatrix h = build_effective_hamiltonian(layout, p, false);
    EXPECT_TRUE(h.is_hermitian(0.0));
    const std::vector<L> bra{L::g, L::f, L::f}, ket{L::e, L::f, L::f};
    EXPECT_EQ(h(layout.basis_index(bra, 1), layout.basis_index(ket, 0)), cplx(p.effective_coupling[0]));
    // Elements between different f-patterns vanish.
    for (std::size_t r = 0; r < layout.dimension(); ++r) {
        for (std::size_t c = 0; c < layout.dimension(); ++c) {
            if (h(r, c) == cplx(0)) continue;
            const auto lr = layout.basis_label(r).levels, lc = layout.basis_label(c).levels;
            for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(lr[s] == L::f, lc[s] == L::f);
        }
    }
}

TEST(EffectiveHamiltonian, ShiftTerms) {
    const SystemLayout layout = build_layout(3, false, 1);
    const ModelParams p = raman_params();
    const ComplexMatrix diff = build_effective_hamiltonian(layout, p, true) - build_effective_hamiltonian(layout, p, false);
    for (const auto &lab : all_labels(layout)) {
        double expect0 = 0, expect1 = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            if (lab[j] == L::e) expect0 += p.laser_rabi[j] * p.laser_rabi[j] / p.detuning[j];
            if (lab[j] == L::g) expect1 += p.cavity_coupling[j] * p.cavity_coupling[j] / p.detuning[j];
        }
        const std::size_t i0 = layout.basis_index(lab, 0), i1 = layout.basis_index(lab, 1);
        EXPECT_NEAR(diff(i0, i0).real(), expect0, 1e-14);
        EXPECT_NEAR(diff(i1, i1).real(), expect0 + expect1, 1e-14);
    }
}

TEST(EffectiveHamiltonian, Errors) {
    EXPECT_THROW(build_effective_hamiltonian(build_layout(3, true, 1), ModelParams::canonical(0.1), false), ModelError);
    EXPECT_THROW(build_effective_hamiltonian(build_layout(3, false, 1), ModelParams::canonical(0.1), true),
                 ArgumentError);
}

TEST(Invariants, ExcitationConservation) {
    const SystemLayout full = build_layout(3, true, 2);
    const ComplexMatrix hf = build_full_hamiltonian(full, raman_params());
    EXPECT_LE(commutator(hf, excitation_number(full)).max_abs(), 1e-12);
    const SystemLayout eff = build_layout(3, false, 2);
    for (bool shifts : {false, true}) {
        const ComplexMatrix he = build_effective_hamiltonian(eff, raman_params(), shifts);
        EXPECT_LE(commutator(he, excitation_number(eff)).max_abs(), 1e-12);
    }
}

TEST(Invariants, NmaxIndependence) {
    const SystemLayout l1 = build_layout(3, false, 1), l2 = build_layout(3, false, 2);
    const ModelParams p = ModelParams::canonical(0.1);
    const ComplexMatrix u1 = expm(cplx(0, -1.7) * build_effective_hamiltonian(l1, p, false));
    const ComplexMatrix u2 = expm(cplx(0, -1.7) * build_effective_hamiltonian(l2, p, false));
    const ComplexMatrix n1 = excitation_number(l1);
    for (std::size_t i = 0; i < l1.dimension(); ++i) {
        if (n1(i, i).real() > 1.0) continue;
        const auto lab = l1.basis_label(i);
        const StateVector a = u1.apply(l1.basis_state(lab.levels, lab.photons));
        const StateVector b = u2.apply(l2.basis_state(lab.levels, lab.photons));
        for (std::size_t j = 0; j < l1.dimension(); ++j) {
            const auto lj = l1.basis_label(j);
            EXPECT_NEAR(std::abs(a[j] - b[l2.basis_index(lj.levels, lj.photons)]), 0.0, 1e-12);
        }
    }
}

TEST(Params, ConsistencyCheck) {
    ModelParams p = raman_params();
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_NEAR(p.effective_coupling[j], p.cavity_coupling[j] * p.laser_rabi[j] / p.detuning[j],
                    1e-12 * std::abs(p.effective_coupling[j]));
    }
    EXPECT_NO_THROW(p.validate(3));
    p.effective_coupling[1] *= 1.0 + 1e-9;
    EXPECT_THROW(p.validate(3), ArgumentError);
    ModelParams q = ModelParams::canonical(0.1);
    EXPECT_DOUBLE_EQ(q.asymmetry(), 0.1);
    q.kappa = -1;
    EXPECT_THROW(q.validate(3), ArgumentError);
    EXPECT_THROW(ModelParams::from_raman({1}, {1}, {0}), ArgumentError);
}

TEST(Collapse, Conventions) {
    const SystemLayout layout = build_layout(3, false, 1);
    ModelParams p = ModelParams::canonical(0.1);
    auto zero = build_collapse_ops(layout, p);
    ASSERT_EQ(zero.size(), 7u);
    for (const auto &l : zero) EXPECT_EQ(l.max_abs(), 0.0);

    p.kappa = 0.3;
    p.gamma_eg = 0.05;
    p.gamma_fg = 0.002;
    const auto ops = build_collapse_ops(layout, p);
    const std::vector<L> ggg{L::g, L::g, L::g};
    EXPECT_NEAR(std::abs(ops[0](layout.basis_index(ggg, 0), layout.basis_index(ggg, 1)) - std::sqrt(0.6)), 0.0,
                1e-15);
    for (std::size_t j = 0; j < 3; ++j) {
        const ComplexMatrix &leg = ops[1 + 2 * j];
        for (std::size_t i = 0; i < layout.dimension(); ++i) {
            const auto lab = layout.basis_label(i);
            const double norm = norm2(leg.apply(layout.basis_state(lab.levels, lab.photons)));
            if (lab.levels[j] == L::e) {
                EXPECT_NEAR(norm, std::sqrt(0.1), 1e-15);
            } else {
                EXPECT_EQ(norm, 0.0);
            }
        }
    }
    p.gamma_fg = -1;
    EXPECT_THROW(build_collapse_ops(layout, p), ArgumentError);
}

TEST(Physical, PublishedEstimates) {
    const double two_pi = 2 * std::numbers::pi;
    const PhysicalReport r =
        derive_physical_params(published_inputs(), two_pi * 2.5e9, two_pi * 25e9, two_pi * 55e6);
    EXPECT_NEAR(r.derived.kappa / two_pi, 0.4706e6, 0.0001e6);
    EXPECT_LT(std::abs(r.derived.kappa / (two_pi * 0.5e6) - 1), 0.06);
    EXPECT_NEAR(r.derived.gate_time, 1.0 / 110e6, 1e-20);
    EXPECT_NEAR(r.derived.interaction_volume,
                3 * kSpeedOfLight * 637e-9 * 637e-9 / (4 * std::numbers::pi * two_pi * 83e6), 1e-25);
    bool found_pe = false;
    for (const auto &c : r.comparisons) {
        if (c.quantity == "excited_population_quoted_coupling") {
            EXPECT_NEAR(c.computed, 0.022, 1e-15);
            found_pe = true;
        }
        if (c.quantity == "g_max") EXPECT_FALSE(c.agrees());
        if (c.quantity == "gamma_eg_omega_squared") EXPECT_TRUE(c.agrees());
        if (c.quantity == "kappa") EXPECT_TRUE(c.agrees());
    }
    EXPECT_TRUE(found_pe);
    PhysicalInputs bad = published_inputs();
    bad.quality = 0;
    EXPECT_THROW(derive_physical_params(bad, 1, 1, 1), ArgumentError);
}
