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
#include <stdexcept>
#include <string>
#include <utility>

namespace nvcpf {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested Hamiltonian does not fit the layout (e.g. missing |E>).
struct ModelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Non-finite values appeared during ODE stepping.
struct DivergenceError : std::runtime_error {
    DivergenceError(std::size_t step, const std::string &what)
        : std::runtime_error(what), step_index(step) {}
    std::size_t step_index;
};

/// A density-matrix invariant was violated mid-integration.
struct IntegrationError : std::runtime_error {
    IntegrationError(double t, std::string quantity, const std::string &what)
        : std::runtime_error(what), time(t), quantity(std::move(quantity)) {}
    double time;
    std::string quantity;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nvcpf
