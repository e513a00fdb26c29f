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

#include <array>
#include <span>

#include "nvcpf/matrix.hpp"
#include "nvcpf/model.hpp"

namespace nvcpf {

/// Closed-form three-qubit gate mathematics in the effective model.

using CompLabel = std::array<Level, 3>;

/// The 8 computational states in gate-matrix order:
/// g1g2g3, g1g2e3, g1f2g3, g1f2e3, f1g2g3, f1g2e3, f1f2g3, f1f2e3.
const std::array<CompLabel, 8> &computational_basis();

/// Position of a label in computational_basis(); ArgumentError if the label
/// is not one of the 8 computational states.
std::size_t computational_index(std::span<const Level> label);

/// Layout the closed-form states live in: 3 sites, no |E>, n_max = 1.
SystemLayout analytic_layout();

struct AnalyticParams {
    double g1 = 0;  // G̃_1
    double g2 = 0;  // G̃_2
    double g3 = 1;  // G̃_3

    /// G̃_1 = G̃_2 = g3 / m.
    static AnalyticParams from_ratio(double m, double g3 = 1.0);

    double ratio() const { return g3 / g1; }
    /// G̃'_k = √(G̃_k² + G̃_3²), k ∈ {1, 2}.
    double g_prime(int k) const;
    /// G̃'' = √(G̃_1² + G̃_2² + G̃_3²).
    double g_double_prime() const;
    /// Throws ArgumentError unless couplings are positive, G̃_1 = G̃_2 and m ≤ 1.
    void validate() const;
};

struct GatePhases {
    cplx alpha;  // real-valued by construction
    double beta = 0;
    double t0 = 0;  // (2k+1)π / G̃_3
    int k = 0;
};

/// α = [m² cos((2k+1)√(m²+2)π/m) + 2]/(m²+2),
/// β = [m² cos((2k+1)√(m²+1)π/m) + 1]/(m²+1), t0 = (2k+1)π/g3.
/// Requires 0 < m ≤ 1 and k ≥ 0.
GatePhases gate_phases(double m, int k = 0, double g3 = 1.0);

/// Closed-form H_eff evolution of a computational state with the cavity in
/// vacuum, returned in analytic_layout() ordering.
StateVector analytic_evolve(std::span<const Level> label, double t, const AnalyticParams &p);

/// diag(1,1,1,1,1,1,1,-1)
ComplexMatrix ideal_gate();

/// diag(1, α, 1, β, 1, β, 1, -1)
ComplexMatrix realized_gate(double m, int k = 0);

}  // namespace nvcpf
