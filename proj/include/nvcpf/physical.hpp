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

#include <string>
#include <vector>

namespace nvcpf {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// SI inputs. Rates are angular frequencies (rad/s).
struct PhysicalInputs {
    double wavelength = 0;   // m
    double gamma0 = 0;       // excited-state spontaneous decay, rad/s
    double mode_volume = 0;  // m^3
    double quality = 0;      // cavity Q
    double c = kSpeedOfLight;
};

struct PhysicalDerived {
    double interaction_volume = 0;  // V_a = 3 c λ² / (4π Γ0), m^3
    double g_max = 0;               // Γ0 √(V_a / V_m) / 2, rad/s
    double kappa = 0;               // ω_cavity / Q with ω_cavity = 2π c / λ, rad/s
    double gamma_eg_est = 0;        // Γ0 Ω_max G_max / Δ², rad/s
    double excited_population = 0;  // G_max Ω_max / Δ²
    double gate_time = 0;           // π / G̃_3, s
};

/// One computed-vs-published line. `agrees` is true when the computed value,
/// expressed in `unit` (2π for angular rates quoted in Hz), rounds to the
/// published one at the published number of significant digits.
struct QuotedComparison {
    std::string quantity;
    double computed = 0;
    double quoted = 0;
    int quoted_digits = 0;
    std::string note;
    double unit = 1.0;

    double relative_deviation() const;
    bool agrees() const;
};

struct PhysicalReport {
    PhysicalDerived derived;
    std::vector<QuotedComparison> comparisons;
    /// How κ = c/(λQ) is read: recorded so outputs state the interpretation.
    std::string kappa_convention;
};

/// Evaluates the cavity/NV parameter formulas. omega_max, delta and
/// g3_effective are angular frequencies. Throws ArgumentError for
/// non-positive inputs.
PhysicalReport derive_physical_params(const PhysicalInputs &inputs, double omega_max, double delta,
                                      double g3_effective);

/// Operating point used in the published estimates: λ = 637 nm, Γ0 = 2π×83 MHz,
/// V_m = 20 μm³, Q = 1e9.
PhysicalInputs published_inputs();

}  // namespace nvcpf
