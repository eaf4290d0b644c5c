// Copyright 2026 The arrcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARRCC_NUMKERNEL_HPP
#define ARRCC_NUMKERNEL_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "arrcc/error.hpp"

namespace arrcc {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

/// Dense row-major complex matrix. Small by construction (at most 64x64 for
/// the density-matrix code, 4096-dimensional state vectors in the simulator).
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(std::span<const Complex> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexVector column(std::size_t c) const;

    ComplexMatrix &operator+=(const ComplexMatrix &o);
    ComplexMatrix &operator-=(const ComplexMatrix &o);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexVector operator*(const ComplexMatrix &m, std::span<const Complex> v);

/// Kronecker product: (a (x) b)[i*m+k, j*n+l] = a[i,j] * b[k,l].
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

Complex trace(const ComplexMatrix &m);

/// Tr(a b) without forming the product.
Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

double frobenius_norm(const ComplexMatrix &m);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_hermitian(const ComplexMatrix &m, double tol = default_tolerances().hermitian);
bool is_unitary(const ComplexMatrix &m, double tol = default_tolerances().unitary);

struct HermitianEigen {
    RealVector values;      // ascending
    ComplexMatrix vectors;  // column j is the eigenvector of values[j]
};

/// Cyclic complex Jacobi. Rejects non-Hermitian input.
HermitianEigen hermitian_eigen(const ComplexMatrix &m, const Tolerances &tol = default_tolerances());

/// Real eigenvalues of a Hermitian matrix, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix &m, const Tolerances &tol = default_tolerances());

/// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const ComplexMatrix &m, double tol);

/// exp(i H) for Hermitian H by scaling and squaring a truncated Taylor series.
/// The result is unitary to working precision.
ComplexMatrix exp_i_hermitian(const ComplexMatrix &h);

/// Applies f to the eigenvalues of a Hermitian matrix: V f(D) V^dagger.
template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix &m, F &&f) {
    const HermitianEigen eig = hermitian_eigen(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(eig.values[k]);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = eig.vectors(i, k) * fk;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
        }
    }
    return out;
}

/// Extends orthonormal columns to a full unitary by Gram-Schmidt against the
/// standard basis. Columns must already be orthonormal within tol.unitary.
ComplexMatrix complete_unitary(const std::vector<ComplexVector> &columns, std::size_t dim);

double norm(std::span<const Complex> v);
Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a|b>, conjugate-linear in a

}  // namespace arrcc

#endif  // ARRCC_NUMKERNEL_HPP
