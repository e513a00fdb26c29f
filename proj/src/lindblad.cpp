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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "nvcpf/engine.hpp"
#include "nvcpf/ode.hpp"

namespace nvcpf {

void NoiseParams::validate() const {
    if (!(kappa >= 0 && gamma_eg >= 0 && gamma_fg >= 0)) {
        throw ArgumentError("NoiseParams: decay rates must be non-negative");
    }
}

NoiseParams figure_noise(double kappa) { return {kappa, 1e-2, 1e-6}; }

DensityState DensityState::pure(const SystemLayout &layout, std::span<const cplx> psi) {
    if (psi.size() != layout.dimension()) throw DimensionError("DensityState::pure: state/layout mismatch");
    return {ComplexMatrix::outer(psi, psi), layout};
}

void DensityState::check_invariants(double t) const {
    auto fail = [&](const std::string &quantity, double value) {
        std::ostringstream os;
        os << "density matrix invariant violated at t = " << t << ": " << quantity << " = " << value;
        throw IntegrationError(t, quantity, os.str());
    };
    const double trace_dev = std::abs(rho.trace() - cplx(1.0));
    if (!(trace_dev <= kTraceTolerance)) fail("trace deviation", trace_dev);
    const double herm = max_abs_diff(rho, rho.adjoint());
    if (!(herm <= kHermiticityTolerance)) fail("hermiticity defect", herm);
    for (std::size_t i = 0; i < rho.rows(); ++i) {
        if (rho(i, i).real() < -kPositivityTolerance) fail("negative population", rho(i, i).real());
    }
}

StateVector propagate_unitary(const ComplexMatrix &h, std::span<const cplx> psi0, double t) {
    if (!h.is_square() || h.rows() != psi0.size()) throw DimensionError("propagate_unitary: dimension mismatch");
    return expm(cplx(0.0, -t) * h).apply(psi0);
}

namespace {

struct Term {
    std::uint32_t row;
    std::uint32_t col;
    cplx value;
};

struct JumpTerm {
    std::uint32_t out_row, out_col, in_row, in_col;
    cplx value;
};

// Lindblad generator restricted to the reachable block of ρ, written as
// ρ̇ = A + A† + Σ L ρ L† with A = -i K ρ and K = H - (i/2) Σ L†L.
class ReducedLindblad {
   public:
    ReducedLindblad(const ComplexMatrix &h, const std::vector<ComplexMatrix> &ops, const ComplexMatrix &rho0) {
        const std::size_t d = h.rows();
        ComplexMatrix k = h;
        for (const auto &l : ops) k -= cplx(0.0, 0.5) * (l.adjoint() * l);

        // Reachability: start from the support of ρ0 and close under K and the jumps.
        std::vector<std::vector<std::size_t>> next(d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                if (k(r, c) != cplx(0)) next[c].push_back(r);
            }
        }
        for (const auto &l : ops) {
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < d; ++c) {
                    if (l(r, c) != cplx(0)) next[c].push_back(r);
                }
            }
        }
        std::vector<char> seen(d, 0);
        std::vector<std::size_t> stack;
        for (std::size_t i = 0; i < d; ++i) {
            bool used = false;
            for (std::size_t j = 0; j < d && !used; ++j) used = rho0(i, j) != cplx(0) || rho0(j, i) != cplx(0);
            if (used) {
                seen[i] = 1;
                stack.push_back(i);
            }
        }
        while (!stack.empty()) {
            const std::size_t c = stack.back();
            stack.pop_back();
            for (std::size_t r : next[c]) {
                if (!seen[r]) {
                    seen[r] = 1;
                    stack.push_back(r);
                }
            }
        }
        std::vector<std::int64_t> local(d, -1);
        for (std::size_t i = 0; i < d; ++i) {
            if (seen[i]) {
                local[i] = static_cast<std::int64_t>(keep_.size());
                keep_.push_back(i);
            }
        }
        n_ = keep_.size();

        for (std::size_t r : keep_) {
            for (std::size_t c : keep_) {
                if (k(r, c) != cplx(0)) {
                    minus_i_k_.push_back({static_cast<std::uint32_t>(local[r]), static_cast<std::uint32_t>(local[c]),
                                          cplx(0.0, -1.0) * k(r, c)});
                }
            }
        }
        for (const auto &l : ops) {
            std::vector<Term> nz;
            for (std::size_t r : keep_) {
                for (std::size_t c : keep_) {
                    if (l(r, c) != cplx(0)) {
                        nz.push_back({static_cast<std::uint32_t>(local[r]), static_cast<std::uint32_t>(local[c]), l(r, c)});
                    }
                }
            }
            for (const Term &x : nz) {
                for (const Term &y : nz) {
                    jumps_.push_back({x.row, y.row, x.col, y.col, x.value * std::conj(y.value)});
                }
            }
        }
        scratch_.resize(n_ * n_);
    }

    std::size_t size() const { return n_; }

    StateVector compress(const ComplexMatrix &rho) const {
        StateVector y(n_ * n_);
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) y[a * n_ + b] = rho(keep_[a], keep_[b]);
        }
        return y;
    }

    void expand(std::span<const cplx> y, ComplexMatrix &rho) const {
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) rho(keep_[a], keep_[b]) = y[a * n_ + b];
        }
    }

    void rhs(std::span<const cplx> rho, std::span<cplx> out) const {
        const std::size_t n = n_;
        std::fill(scratch_.begin(), scratch_.end(), cplx(0));
        for (const Term &t : minus_i_k_) {
            cplx *dst = &scratch_[t.row * n];
            const cplx *src = &rho[t.col * n];
            for (std::size_t j = 0; j < n; ++j) dst[j] += t.value * src[j];
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) out[a * n + b] = scratch_[a * n + b] + std::conj(scratch_[b * n + a]);
        }
        for (const JumpTerm &j : jumps_) out[j.out_row * n + j.out_col] += j.value * rho[j.in_row * n + j.in_col];
    }

   private:
    std::vector<std::size_t> keep_;
    std::size_t n_ = 0;
    std::vector<Term> minus_i_k_;
    std::vector<JumpTerm> jumps_;
    mutable std::vector<cplx> scratch_;
};

}  // namespace

void for_each_lindblad_state(const ComplexMatrix &h, const std::vector<ComplexMatrix> &collapse_ops,
                             const DensityState &rho0, std::span<const double> t_grid, double dt,
                             const DensityVisitor &visit) {
    const std::size_t d = rho0.layout.dimension();
    if (!h.is_square() || h.rows() != d || rho0.rho.rows() != d || rho0.rho.cols() != d) {
        throw DimensionError("propagate_lindblad: Hamiltonian, state and layout dimensions disagree");
    }
    for (const auto &l : collapse_ops) {
        if (l.rows() != d || l.cols() != d) throw DimensionError("propagate_lindblad: collapse operator dimension");
    }
    if (!(dt > 0)) throw ArgumentError("propagate_lindblad: dt must be positive");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0) || (i > 0 && t_grid[i] < t_grid[i - 1])) {
            throw ArgumentError("propagate_lindblad: t_grid must be non-negative and non-decreasing");
        }
    }
    rho0.check_invariants(0.0);

    const ReducedLindblad gen(h, collapse_ops, rho0.rho);
    const OdeRightHandSide f = [&gen](double, std::span<const cplx> y, std::span<cplx> dy) { gen.rhs(y, dy); };

    StateVector y = gen.compress(rho0.rho);
    ComplexMatrix rho(d, d);
    DensityState current{rho, rho0.layout};
    double t_prev = 0.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        if (t > t_prev) y = propagate_ode(f, y, t_prev, t, dt);
        t_prev = t;
        gen.expand(y, current.rho);
        current.check_invariants(t);
        visit(i, t, current.rho);
    }
}

std::vector<DensityState> propagate_lindblad(const ComplexMatrix &h, const std::vector<ComplexMatrix> &collapse_ops,
                                             const DensityState &rho0, std::span<const double> t_grid, double dt) {
    std::vector<DensityState> out;
    out.reserve(t_grid.size());
    for_each_lindblad_state(h, collapse_ops, rho0, t_grid, dt,
                            [&](std::size_t, double, const ComplexMatrix &rho) { out.push_back({rho, rho0.layout}); });
    return out;
}

double state_fidelity(const ComplexMatrix &rho, std::span<const cplx> target) {
    if (rho.rows() != target.size() || rho.cols() != target.size()) {
        throw DimensionError("state_fidelity: dimension mismatch");
    }
    const double f = inner(target, rho.apply(target)).real();
    return std::clamp(f, 0.0, 1.0);
}

double state_fidelity(const DensityState &rho, std::span<const cplx> target) { return state_fidelity(rho.rho, target); }

}  // namespace nvcpf
