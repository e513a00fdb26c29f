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

#include "nvcpf/ode.hpp"

#include <cmath>
#include <string>

namespace nvcpf {

std::size_t rk4_step_count(double t0, double t1, double dt) {
    if (!(dt > 0)) throw ArgumentError("propagate_ode: dt must be positive");
    if (!(t1 >= t0)) throw ArgumentError("propagate_ode: t1 must not precede t0");
    const double q = (t1 - t0) / dt;
    const double nearest = std::round(q);
    if (std::abs(q - nearest) <= 1e-9 * std::max(1.0, q)) return static_cast<std::size_t>(nearest);
    return static_cast<std::size_t>(std::ceil(q));
}

StateVector propagate_ode(const OdeRightHandSide &f, std::span<const cplx> y0, double t0, double t1,
                          double dt) {
    const std::size_t steps = rk4_step_count(t0, t1, dt);
    const std::size_t n = y0.size();
    StateVector y(y0.begin(), y0.end());
    StateVector k1(n), k2(n), k3(n), k4(n), tmp(n);

    for (std::size_t s = 0; s < steps; ++s) {
        const double t = t0 + static_cast<double>(s) * dt;
        const double h = (s + 1 == steps) ? t1 - t : dt;

        f(t, y, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + (0.5 * h) * k1[i];
        f(t + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + (0.5 * h) * k2[i];
        f(t + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
        f(t + h, tmp, k4);

        const double w = h / 6.0;
        bool finite = true;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += w * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
            finite = finite && std::isfinite(y[i].real()) && std::isfinite(y[i].imag());
        }
        if (!finite) {
            throw DivergenceError(s, "propagate_ode: non-finite state at step " + std::to_string(s) +
                                         " (t = " + std::to_string(t + h) + ")");
        }
    }
    return y;
}

}  // namespace nvcpf
