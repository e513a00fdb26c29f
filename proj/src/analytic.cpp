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

#include "nvcpf/analytic.hpp"

#include <cmath>
#include <numbers>

namespace nvcpf {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_ratio(double m, int k) {
    if (!(m > 0)) throw ArgumentError("gate_phases: m must be positive");
    if (m > 1) throw ArgumentError("gate_phases: m > 1 contradicts the weak third coupling");
    if (k < 0) throw ArgumentError("gate_phases: k must be non-negative");
}

}  // namespace

const std::array<CompLabel, 8> &computational_basis() {
    using enum Level;
    static const std::array<CompLabel, 8> basis = {{
        {g, g, g},
        {g, g, e},
        {g, f, g},
        {g, f, e},
        {f, g, g},
        {f, g, e},
        {f, f, g},
        {f, f, e},
    }};
    return basis;
}

std::size_t computational_index(std::span<const Level> label) {
    if (label.size() == 3) {
        const auto &basis = computational_basis();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (label[0] == basis[i][0] && label[1] == basis[i][1] && label[2] == basis[i][2]) return i;
        }
    }
    throw ArgumentError("label is not one of the 8 computational states");
}

SystemLayout analytic_layout() { return SystemLayout(3, false, 1); }

AnalyticParams AnalyticParams::from_ratio(double m, double g3) {
    if (!(m > 0) || !(g3 > 0)) throw ArgumentError("AnalyticParams: m and g3 must be positive");
    return {g3 / m, g3 / m, g3};
}

double AnalyticParams::g_prime(int k) const {
    if (k != 1 && k != 2) throw ArgumentError("g_prime: k must be 1 or 2");
    const double gk = k == 1 ? g1 : g2;
    return std::sqrt(gk * gk + g3 * g3);
}

double AnalyticParams::g_double_prime() const { return std::sqrt(g1 * g1 + g2 * g2 + g3 * g3); }

void AnalyticParams::validate() const {
    if (!(g1 > 0 && g2 > 0 && g3 > 0)) throw ArgumentError("AnalyticParams: couplings must be positive");
    if (std::abs(g1 - g2) > 1e-12 * g1) throw ArgumentError("AnalyticParams: requires G1 = G2");
    if (g3 > g1 * (1 + 1e-12)) throw ArgumentError("AnalyticParams: m = G3/G1 must not exceed 1");
}

GatePhases gate_phases(double m, int k, double g3) {
    check_ratio(m, k);
    if (!(g3 > 0)) throw ArgumentError("gate_phases: g3 must be positive");
    const double odd = 2.0 * k + 1.0;
    const double m2 = m * m;
    GatePhases out;
    out.alpha = (m2 * std::cos(odd * std::sqrt(m2 + 2.0) * std::numbers::pi / m) + 2.0) / (m2 + 2.0);
    out.beta = (m2 * std::cos(odd * std::sqrt(m2 + 1.0) * std::numbers::pi / m) + 1.0) / (m2 + 1.0);
    out.t0 = odd * std::numbers::pi / g3;
    out.k = k;
    return out;
}

StateVector analytic_evolve(std::span<const Level> label, double t, const AnalyticParams &p) {
    using enum Level;
    p.validate();
    if (t < 0) throw ArgumentError("analytic_evolve: t must be non-negative");
    computational_index(label);
    const SystemLayout layout = analytic_layout();
    StateVector psi(layout.dimension());
    auto at = [&](Level a, Level b, Level c, std::size_t n) -> cplx & {
        const std::array<Level, 3> l{a, b, c};
        return psi[layout.basis_index(l, n)];
    };

    const Level s1 = label[0], s2 = label[1], s3 = label[2];
    if (s3 == g) {
        at(s1, s2, s3, 0) = 1.0;
        return psi;
    }

    const double g3 = p.g3;
    if (s1 == f && s2 == f) {
        at(f, f, e, 0) = std::cos(g3 * t);
        at(f, f, g, 1) = -kI * std::sin(g3 * t);
        return psi;
    }

    if (s1 == g && s2 == g) {
        const double gpp = p.g_double_prime();
        const double norm = 1.0 / (gpp * gpp);
        const double c = std::cos(gpp * t);
        at(g, g, e, 0) = norm * (g3 * g3 * c + p.g1 * p.g1 + p.g2 * p.g2);
        at(e, g, g, 0) = norm * g3 * (c - 1.0) * p.g1;
        at(g, e, g, 0) = norm * g3 * (c - 1.0) * p.g2;
        at(g, g, g, 1) = -kI * norm * g3 * gpp * std::sin(gpp * t);
        return psi;
    }

    // One of sites 1, 2 is g (index kk), the other f.
    const int kk = (s1 == g) ? 1 : 2;
    const double gk = kk == 1 ? p.g1 : p.g2;
    const double gp = p.g_prime(kk);
    const double norm = 1.0 / (gp * gp);
    const double c = std::cos(gp * t);
    at(s1, s2, e, 0) = norm * (g3 * g3 * c + gk * gk);
    const Level e1 = kk == 1 ? e : s1;
    const Level e2 = kk == 2 ? e : s2;
    at(e1, e2, g, 0) = norm * g3 * gk * (c - 1.0);
    at(s1, s2, g, 1) = -kI * norm * g3 * gp * std::sin(gp * t);
    return psi;
}

ComplexMatrix ideal_gate() {
    std::array<cplx, 8> d{1, 1, 1, 1, 1, 1, 1, -1};
    return ComplexMatrix::diagonal(d);
}

ComplexMatrix realized_gate(double m, int k) {
    const GatePhases ph = gate_phases(m, k);
    std::array<cplx, 8> d{1, ph.alpha, 1, ph.beta, 1, ph.beta, 1, -1};
    return ComplexMatrix::diagonal(d);
}

}  // namespace nvcpf
