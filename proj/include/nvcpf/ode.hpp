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

#include "nvcpf/matrix.hpp"

namespace nvcpf {

/// dy/dt = f(t, y). Implementations write into `dydt`, which has the same
/// length as `y`, and must not keep state between calls.
using OdeRightHandSide = std::function<void(double t, std::span<const cplx> y, std::span<cplx> dydt)>;

/// Number of fixed steps of size dt needed to cover [t0, t1]. An interval that
/// is an integer multiple of dt (up to rounding) gets no sliver step.
std::size_t rk4_step_count(double t0, double t1, double dt);

/// Classical fixed-step RK4 from t0 to t1. The last step is shortened so t1 is
/// hit exactly. Throws DivergenceError if a non-finite value shows up.
StateVector propagate_ode(const OdeRightHandSide &f, std::span<const cplx> y0, double t0, double t1,
                          double dt);

}  // namespace nvcpf
