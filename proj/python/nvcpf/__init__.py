# Copyright 2026 The nvcpf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Three-qubit conditional phase flip gate simulator."""

from ._nvcpf import (
    ArgumentError,
    ConfigError,
    DimensionError,
    __version__,
    analytic_evolve,
    compare_full_effective,
    effective_hamiltonian,
    expm,
    extract_gate,
    gate_fidelity_run,
    gate_phases,
    ideal_gate,
    kron,
    parse_config,
    physical_params,
    realized_gate,
    sweep_panel,
)

__all__ = [
    "ArgumentError",
    "ConfigError",
    "DimensionError",
    "__version__",
    "analytic_evolve",
    "compare_full_effective",
    "effective_hamiltonian",
    "expm",
    "extract_gate",
    "gate_fidelity_run",
    "gate_phases",
    "ideal_gate",
    "kron",
    "parse_config",
    "physical_params",
    "realized_gate",
    "sweep_panel",
]
