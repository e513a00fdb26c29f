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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nvcpf/errors.hpp"

namespace nvcpf {

using cplx = std::complex<double>;
using StateVector = std::vector<cplx>;

/// Dense row-major complex matrix. Every operator and density matrix in the
/// simulator is one of these; the largest system is a few hundred states, so
/// no sparse storage is used.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(std::span<const cplx> diag);
    /// |ket><bra|
    static ComplexMatrix outer(std::span<const cplx> ket, std::span<const cplx> bra);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<cplx> entries() { return data_; }
    std::span<const cplx> entries() const { return data_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    /// Largest entry magnitude.
    double max_abs() const;
    /// Maximum absolute row sum.
    double norm_inf() const;
    /// Maximum absolute column sum; drives the expm scaling.
    double norm_one() const;
    bool is_hermitian(double tol) const;

    StateVector apply(std::span<const cplx> v) const;

    ComplexMatrix &operator+=(const ComplexMatrix &o);
    ComplexMatrix &operator-=(const ComplexMatrix &o);
    ComplexMatrix &operator*=(cplx s);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

/// a ⊗ b, with entry (i*b.rows + k, j*b.cols + l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// [a, b] = ab - ba
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// Max-entry distance between two equally shaped matrices.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Matrix exponential by scaling and squaring with a degree-13 Padé
/// approximant. Throws DimensionError for non-square input.
ComplexMatrix expm(const ComplexMatrix &a);

/// Solves a x = b for square a with partial-pivot LU. b may have several columns.
ComplexMatrix solve(const ComplexMatrix &a, const ComplexMatrix &b);

double norm2(std::span<const cplx> v);
cplx inner(std::span<const cplx> bra, std::span<const cplx> ket);

}  // namespace nvcpf
