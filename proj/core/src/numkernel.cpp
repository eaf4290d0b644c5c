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

#include "arrcc/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace arrcc {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(entries_.size() == rows_ * cols_, ErrorCode::kShapeMismatch,
            "matrix entry count " + std::to_string(entries_.size()) + " != " + std::to_string(rows_) + "x" +
                std::to_string(cols_));
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        require(r.size() == cols_, ErrorCode::kShapeMismatch, "ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    ComplexVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::kShapeMismatch, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::kShapeMismatch, "matrix difference shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &e : entries_) e *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.cols_ == b.rows_, ErrorCode::kShapeMismatch, "matrix product shape mismatch");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexVector operator*(const ComplexMatrix &m, std::span<const Complex> v) {
    require(m.cols() == v.size(), ErrorCode::kShapeMismatch, "matrix-vector shape mismatch");
    ComplexVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t m = b.rows(), n = b.cols();
    ComplexMatrix out(a.rows() * m, a.cols() * n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < n; ++l) out(i * m + k, j * n + l) = aij * b(k, l);
        }
    return out;
}

Complex trace(const ComplexMatrix &m) {
    require(m.is_square(), ErrorCode::kShapeMismatch, "trace of non-square matrix");
    Complex t{};
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.cols() == b.rows() && b.cols() == a.rows(), ErrorCode::kShapeMismatch,
            "trace_product shape mismatch");
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    return t;
}

double frobenius_norm(const ComplexMatrix &m) {
    double s = 0.0;
    for (const auto &e : m.entries()) s += std::norm(e);
    return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::kShapeMismatch, "max_abs_diff shape mismatch");
    double d = 0.0;
    auto ea = a.entries(), eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) d = std::max(d, std::abs(ea[i] - eb[i]));
    return d;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) return false;
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) <= tol;
}

namespace {

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi step on the (p, q) plane: a diagonal phase makes a(p,q)
// real and non-negative, then a real Givens rotation annihilates it.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex u = apq / mag;
    const Complex uc = std::conj(u);
    for (std::size_t k = 0; k < n; ++k) {
        a(q, k) *= u;
        a(k, q) *= uc;
        v(k, q) *= uc;
    }

    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();
    const double theta = (gamma - alpha) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
    a(p, q) = a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix &m, const Tolerances &tol) {
    require(m.is_square(), ErrorCode::kShapeMismatch, "eigenproblem on non-square matrix");
    require(is_hermitian(m, tol.hermitian), ErrorCode::kPrecondition, "matrix is not Hermitian");
    const std::size_t n = m.rows();

    ComplexMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = tol.jacobi_off * std::max(1.0, frobenius_norm(a));
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep)
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    require(off_diagonal_norm(a) < threshold, ErrorCode::kNumerical, "Jacobi iteration did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigen out{RealVector(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix &m, const Tolerances &tol) {
    return hermitian_eigen(m, tol).values;
}

bool is_psd(const ComplexMatrix &m, double tol) {
    const RealVector ev = hermitian_eigenvalues(m);
    return ev.empty() || ev.front() >= -tol;
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix &h) {
    require(is_hermitian(h), ErrorCode::kPrecondition, "exp_i_hermitian needs a Hermitian generator");
    const std::size_t n = h.rows();
    ComplexMatrix a = h * Complex{0.0, 1.0};
    const double nrm = frobenius_norm(a);
    int squarings = 0;
    if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
    a *= Complex{std::ldexp(1.0, -squarings), 0.0};

    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = term * a;
        term *= Complex{1.0 / k, 0.0};
        result += term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

double norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto &e : v) s += std::norm(e);
    return std::sqrt(s);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    require(a.size() == b.size(), ErrorCode::kShapeMismatch, "inner product length mismatch");
    Complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

ComplexMatrix complete_unitary(const std::vector<ComplexVector> &columns, std::size_t dim) {
    require(columns.size() <= dim, ErrorCode::kShapeMismatch, "more columns than dimension");
    std::vector<ComplexVector> basis;
    basis.reserve(dim);
    for (const auto &c : columns) {
        require(c.size() == dim, ErrorCode::kShapeMismatch, "column length mismatch");
        for (const auto &b : basis)
            require(std::abs(inner(b, c)) <= default_tolerances().unitary, ErrorCode::kPrecondition,
                    "columns are not orthogonal");
        require(std::abs(norm(c) - 1.0) <= default_tolerances().unitary, ErrorCode::kPrecondition,
                "column is not normalized");
        basis.push_back(c);
    }
    auto residual = [&](std::size_t e) {
        ComplexVector cand(dim);
        cand[e] = 1.0;
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto &b : basis) {
                const Complex proj = inner(b, cand);
                for (std::size_t i = 0; i < dim; ++i) cand[i] -= proj * b[i];
            }
        return cand;
    };
    while (basis.size() < dim) {
        // Greedy: take the standard basis vector with the largest residual.
        ComplexVector best;
        double best_norm = 0.0;
        for (std::size_t e = 0; e < dim; ++e) {
            ComplexVector cand = residual(e);
            const double nrm = norm(cand);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = std::move(cand);
            }
        }
        if (best_norm < 1e-6) break;
        for (auto &x : best) x /= best_norm;
        basis.push_back(std::move(best));
    }
    require(basis.size() == dim, ErrorCode::kNumerical, "failed to complete unitary");
    ComplexMatrix u(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) u(i, j) = basis[j][i];
    return u;
}

}  // namespace arrcc
