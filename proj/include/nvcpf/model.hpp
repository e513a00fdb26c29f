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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nvcpf/matrix.hpp"

namespace nvcpf {

/// NV-center levels. g = |3A, ms=0>, e = |3A, ms=-1>, f = |1A>, E = |3E, ms=0>.
/// The numeric value is the level's index inside one site factor.
enum class Level : std::uint8_t { g = 0, e = 1, f = 2, E = 3 };

char level_char(Level l);

/// Tensor layout of n NV sites times a truncated cavity mode. Site 1 is the
/// slowest index and the cavity photon number the fastest, so
///   index = ((l_1 * L + l_2) * L + ... + l_n) * (n_max + 1) + n.
class SystemLayout {
   public:
    struct Label {
        std::vector<Level> levels;
        std::size_t photons = 0;
        friend bool operator==(const Label &, const Label &) = default;
    };

    SystemLayout(std::size_t n_sites, bool with_excited_level, std::size_t n_max);

    std::size_t n_sites() const { return n_sites_; }
    std::size_t levels_per_site() const { return has_excited_ ? 4 : 3; }
    bool has_excited_level() const { return has_excited_; }
    std::size_t n_max() const { return n_max_; }
    std::size_t fock_dim() const { return n_max_ + 1; }
    std::size_t spin_dim() const { return spin_dim_; }
    std::size_t dimension() const { return spin_dim_ * fock_dim(); }

    std::size_t basis_index(std::span<const Level> levels, std::size_t photons) const;
    Label basis_label(std::size_t index) const;
    StateVector basis_state(std::span<const Level> levels, std::size_t photons) const;
    /// e.g. "|g,e,f;0>"
    std::string describe(std::size_t index) const;

    friend bool operator==(const SystemLayout &, const SystemLayout &) = default;

   private:
    std::size_t n_sites_;
    bool has_excited_;
    std::size_t n_max_;
    std::size_t spin_dim_;
};

/// Validating factory; zero or negative sizes raise ArgumentError.
SystemLayout build_layout(int n_sites, bool with_E_level, int n_max);

/// Per-site couplings and global decay rates. All rates are angular
/// frequencies in one common unit; the simulations use units of the third
/// site's effective coupling (G̃_3 = 1).
struct ModelParams {
    std::vector<double> detuning;            // Δ_j
    std::vector<double> cavity_coupling;     // G_j
    std::vector<double> laser_rabi;          // Ω_j
    std::vector<double> effective_coupling;  // G̃_j = G_j Ω_j / Δ_j
    double kappa = 0.0;
    double gamma_eg = 0.0;
    double gamma_fg = 0.0;
    bool compensate_shifts = true;

    /// Effective couplings (1/m, ..., 1/m, 1): the last site is the slow one.
    static ModelParams canonical(double m, std::size_t n_sites = 3);
    /// Raman parameters with G̃_j filled in from G_j Ω_j / Δ_j.
    static ModelParams from_raman(std::vector<double> coupling, std::vector<double> rabi,
                                  std::vector<double> detuning);

    bool has_raman() const { return !detuning.empty(); }
    /// m = G̃_last / G̃_first.
    double asymmetry() const;
    /// Throws ArgumentError on length mismatch, negative rates, zero detuning,
    /// or G̃_j inconsistent with G_j Ω_j / Δ_j beyond 1e-12 relative.
    void validate(std::size_t n_sites) const;
};

/// |to><from| on a single site of the layout.
ComplexMatrix site_transition(const SystemLayout &layout, Level to, Level from);

/// local_op on `site` (1-based), identity on every other factor.
ComplexMatrix embed(const SystemLayout &layout, int site, const ComplexMatrix &local_op);

enum class CavityOp { annihilate, create, number };
ComplexMatrix cavity_op(const SystemLayout &layout, CavityOp which);

/// Σ_j (|e_j><e_j| + |E_j><E_j|) + a†a.
ComplexMatrix excitation_number(const SystemLayout &layout);

/// H_I = Σ_j [Δ_j |E_j><E_j| + (G_j a† |g_j><E_j| + Ω_j |E_j><e_j| + h.c.)].
///
/// With compensate_shifts, the second-order level shifts that adiabatic
/// elimination of |E_j> produces in this Hamiltonian, -Ω_j²/Δ_j |e_j><e_j| and
/// -G_j²/Δ_j a†a |g_j><g_j|, are cancelled by adding their negatives.
ComplexMatrix build_full_hamiltonian(const SystemLayout &layout, const ModelParams &params);

/// H_eff = Σ_j G̃_j (|e_j><g_j| a + |g_j><e_j| a†). With with_shifts the
/// dynamic shifts Ω_j²/Δ_j |e_j><e_j| + G_j²/Δ_j a†a |g_j><g_j| are added,
/// giving H'_eff; this requires the Raman parameters.
ComplexMatrix build_effective_hamiltonian(const SystemLayout &layout, const ModelParams &params,
                                          bool with_shifts);

/// Collapse operators {√(2κ) a, √(2Γ_eg) σ_ge^j, √(2Γ_fg) σ_gf^j for each j}.
/// With these, Σ (L ρ L† - ½{L†L, ρ}) equals the master equation's
/// κ(2aρa† - a†aρ - ρa†a) + ... terms. Zero rates give zero matrices.
std::vector<ComplexMatrix> build_collapse_ops(const SystemLayout &layout, const ModelParams &params);

}  // namespace nvcpf
