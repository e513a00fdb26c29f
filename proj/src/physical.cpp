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

#include "nvcpf/physical.hpp"

#include <cmath>
#include <numbers>

#include "nvcpf/errors.hpp"

namespace nvcpf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Published values the report is compared against.
constexpr double kQuotedGMax = kTwoPi * 5.5e9;
constexpr double kQuotedKappa = kTwoPi * 0.5e6;
constexpr double kQuotedGammaEg = kTwoPi * 0.83e6;
constexpr double kQuotedExcitedPopulation = 0.022;
constexpr double kQuotedGateTime = 0.009e-6;

double round_sig(double x, int digits) {
    if (x == 0.0) return 0.0;
    const double mag = std::floor(std::log10(std::abs(x)));
    const double scale = std::pow(10.0, digits - 1 - mag);
    return std::round(x * scale) / scale;
}

}  // namespace

double QuotedComparison::relative_deviation() const { return (computed - quoted) / quoted; }

bool QuotedComparison::agrees() const {
    const double r = round_sig(computed / unit, quoted_digits);
    return std::abs(r - quoted / unit) <= 1e-9 * std::abs(quoted / unit);
}

PhysicalInputs published_inputs() {
    PhysicalInputs in;
    in.wavelength = 637e-9;
    in.gamma0 = kTwoPi * 83e6;
    in.mode_volume = 20e-18;
    in.quality = 1e9;
    return in;
}

PhysicalReport derive_physical_params(const PhysicalInputs &in, double omega_max, double delta,
                                      double g3_effective) {
    if (!(in.wavelength > 0 && in.gamma0 > 0 && in.mode_volume > 0 && in.quality > 0 && in.c > 0)) {
        throw ArgumentError("derive_physical_params: physical inputs must be positive");
    }
    if (!(omega_max > 0 && delta > 0 && g3_effective > 0)) {
        throw ArgumentError("derive_physical_params: omega_max, delta and g3 must be positive");
    }

    PhysicalReport rep;
    PhysicalDerived &d = rep.derived;
    d.interaction_volume = 3.0 * in.c * in.wavelength * in.wavelength / (4.0 * std::numbers::pi * in.gamma0);
    d.g_max = in.gamma0 * std::sqrt(d.interaction_volume / in.mode_volume) / 2.0;
    d.kappa = kTwoPi * in.c / (in.wavelength * in.quality);
    d.gamma_eg_est = in.gamma0 * omega_max * d.g_max / (delta * delta);
    d.excited_population = d.g_max * omega_max / (delta * delta);
    d.gate_time = std::numbers::pi / g3_effective;
    rep.kappa_convention = "kappa = 2*pi*c/(lambda*Q) (cavity angular frequency over Q)";

    auto &c = rep.comparisons;
    c.push_back({"g_max", d.g_max, kQuotedGMax, 2, "formula Gamma0*sqrt(V_a/V_m)/2", kTwoPi});
    c.push_back({"kappa", d.kappa, kQuotedKappa, 1, "read as 2*pi*c/(lambda*Q)", kTwoPi});
    c.push_back({"gamma_eg", d.gamma_eg_est, kQuotedGammaEg, 2,
                 "Gamma0*Omega_max*G/Delta^2 with the formula G_max", kTwoPi});
    c.push_back({"gamma_eg_quoted_coupling", in.gamma0 * omega_max * kQuotedGMax / (delta * delta),
                 kQuotedGammaEg, 2, "Gamma0*Omega_max*G/Delta^2 with the published G_max", kTwoPi});
    c.push_back({"gamma_eg_omega_squared", in.gamma0 * omega_max * omega_max / (delta * delta), kQuotedGammaEg,
                 2, "Gamma0*Omega_max^2/Delta^2", kTwoPi});
    c.push_back({"excited_population", d.excited_population, kQuotedExcitedPopulation, 2,
                 "G_max*Omega_max/Delta^2 with the formula G_max"});
    c.push_back({"excited_population_quoted_coupling", kQuotedGMax * omega_max / (delta * delta),
                 kQuotedExcitedPopulation, 2, "G_max*Omega_max/Delta^2 with the published G_max"});
    c.push_back({"gate_time", d.gate_time, kQuotedGateTime, 1, "pi/G3"});
    return rep;
}

}  // namespace nvcpf
