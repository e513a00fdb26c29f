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

#include "nvcpf/matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace nvcpf {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("ComplexMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                             std::to_string(data_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> ket, std::span<const cplx> bra) {
    ComplexMatrix m(ket.size(), bra.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    }
    return m;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw DimensionError("trace: matrix is not square");
    cplx t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const auto &z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::norm_inf() const {
    double best = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double ComplexMatrix::norm_one() const {
    std::vector<double> sums(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) sums[j] += std::abs((*this)(i, j));
    }
    return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        }
    }
    return true;
}

StateVector ComplexMatrix::apply(std::span<const cplx> v) const {
    if (v.size() != cols_) {
        throw DimensionError("apply: vector of length " + std::to_string(v.size()) + " against " +
                             std::to_string(cols_) + " columns");
    }
    StateVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        cplx s = 0;
        const cplx *row = &data_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j) s += row[j] * v[j];
        out[i] = s;
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
    require_same_shape(*this, o, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
    require_same_shape(*this, o, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
    for (auto &z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) { return a * b - b * a; }

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
    return m;
}

ComplexMatrix solve(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (!a.is_square() || a.rows() != b.rows()) throw DimensionError("solve: incompatible shapes");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    ComplexMatrix lu = a;
    ComplexMatrix x = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(lu(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(lu(r, col)) > best) {
                best = std::abs(lu(r, col));
                piv = r;
            }
        }
        if (best == 0.0) throw ArgumentError("solve: singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(piv, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(x(col, j), x(piv, j));
        }
        const cplx inv = 1.0 / lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx factor = lu(r, col) * inv;
            if (factor == cplx(0)) continue;
            lu(r, col) = factor;
            for (std::size_t j = col + 1; j < n; ++j) lu(r, j) -= factor * lu(col, j);
            for (std::size_t j = 0; j < m; ++j) x(r, j) -= factor * x(col, j);
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = 0; j < m; ++j) {
            cplx s = x(ii, j);
            for (std::size_t k = ii + 1; k < n; ++k) s -= lu(ii, k) * x(k, j);
            x(ii, j) = s / lu(ii, ii);
        }
    }
    return x;
}

ComplexMatrix expm(const ComplexMatrix &a) {
    if (!a.is_square()) throw DimensionError("expm: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return a;

    // Higham (2005) degree-13 coefficients and its theta_13 threshold.
    static constexpr std::array<double, 14> b = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;

    const double norm = a.norm_one();
    int squarings = 0;
    if (norm > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    ComplexMatrix s = a;
    if (squarings > 0) s *= std::ldexp(1.0, -squarings);

    const ComplexMatrix ident = ComplexMatrix::identity(n);
    const ComplexMatrix a2 = s * s;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a4 * a2;

    ComplexMatrix u_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
    ComplexMatrix u = a6 * u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
    u = s * u;
    ComplexMatrix v_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
    ComplexMatrix v = a6 * v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;

    ComplexMatrix r = solve(v - u, v + u);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

double norm2(std::span<const cplx> v) {
    double s = 0;
    for (const auto &z : v) s += std::norm(z);
    return std::sqrt(s);
}

cplx inner(std::span<const cplx> bra, std::span<const cplx> ket) {
    if (bra.size() != ket.size()) throw DimensionError("inner: length mismatch");
    cplx s = 0;
    for (std::size_t i = 0; i < bra.size(); ++i) s += std::conj(bra[i]) * ket[i];
    return s;
}

}  // namespace nvcpf
