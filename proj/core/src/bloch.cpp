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

#include "arrcc/bloch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <string>

#include "arrcc/error.hpp"

namespace arrcc {

namespace {

std::array<ComplexMatrix, 4> single_qubit_paulis() {
    const Complex i{0.0, 1.0};
    return {
        ComplexMatrix::identity(2),
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, -i}, {i, 0.0}},
    };
}

GeneratorBasis build_basis(int n) {
    const auto paulis = single_qubit_paulis();
    const std::size_t N = std::size_t{1} << n;
    const double prefactor = std::sqrt(2.0 / static_cast<double>(N));
    GeneratorBasis basis{n, N, {}};
    basis.matrices.reserve(N * N - 1);
    for (std::size_t j = 1; j < N * N; ++j) {
        ComplexMatrix m = ComplexMatrix::identity(1);
        for (int pos = n - 1; pos >= 0; --pos) {
            const std::size_t digit = (j >> (2 * pos)) & 3U;
            m = tensor(m, paulis[digit]);
        }
        m *= Complex{prefactor, 0.0};
        basis.matrices.push_back(std::move(m));
    }
    return basis;
}

ComplexMatrix combine(std::span<const double> coefficients, std::size_t N, double identity_coeff, double scale) {
    const GeneratorBasis &basis = generator_basis(qubits_for_levels(N));
    ComplexMatrix m = ComplexMatrix::identity(N) * Complex{identity_coeff, 0.0};
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] == 0.0) continue;
        m += basis[i] * Complex{scale * coefficients[i], 0.0};
    }
    return m;
}

void certify_state(const ComplexMatrix &rho, const char *what) {
    const Tolerances &tol = default_tolerances();
    require(is_hermitian(rho, tol.hermitian), ErrorCode::kNumerical, std::string(what) + ": not Hermitian");
    require(std::abs(trace(rho) - 1.0) <= tol.trace, ErrorCode::kNumerical, std::string(what) + ": trace != 1");
    const double lo = hermitian_eigenvalues(rho).front();
    require(lo >= -tol.psd, ErrorCode::kNumerical,
            std::string(what) + ": negative eigenvalue " + std::to_string(lo));
}

double l2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

const GeneratorBasis &generator_basis(int n) {
    require(n >= 1 && n <= kMaxQubits, ErrorCode::kOutOfRange,
            "generator basis supports 1..3 qubits, got " + std::to_string(n));
    static std::array<GeneratorBasis, kMaxQubits> cache;
    static std::array<std::once_flag, kMaxQubits> once;
    std::call_once(once[n - 1], [n] { cache[n - 1] = build_basis(n); });
    return cache[n - 1];
}

int qubits_for_levels(std::size_t N) {
    for (int n = 1; n <= kMaxQubits; ++n)
        if (N == (std::size_t{1} << n)) return n;
    fail(ErrorCode::kOutOfRange, "level count must be 2, 4 or 8, got " + std::to_string(N));
}

double state_scale(std::size_t N) {
    const double n = static_cast<double>(N);
    return std::sqrt(n * (n - 1.0) / 2.0);
}

double closed_form_scale(std::size_t N) {
    const double n = static_cast<double>(N);
    return std::sqrt(2.0 * (n - 1.0) / n);
}

BlochState state_from_coefficients(std::span<const double> coefficients, std::size_t N) {
    qubits_for_levels(N);
    require(coefficients.size() <= N * N - 1, ErrorCode::kShapeMismatch,
            "too many Bloch coefficients for N=" + std::to_string(N));
    BlochState s;
    s.N = N;
    s.bloch.assign(N * N - 1, 0.0);
    std::copy(coefficients.begin(), coefficients.end(), s.bloch.begin());
    s.rho = combine(s.bloch, N, 1.0 / static_cast<double>(N), state_scale(N) / static_cast<double>(N));
    certify_state(s.rho, "density matrix");
    return s;
}

BlochState state_from_vector(std::span<const double> r, std::size_t N) { return shrink_state(r, 1.0, N); }

BlochState shrink_state(std::span<const double> r, double gamma, std::size_t N) {
    require(gamma >= 0.0 && gamma <= 1.0, ErrorCode::kOutOfRange, "shrink factor must lie in [0, 1]");
    qubits_for_levels(N);
    require(N * N >= r.size() + 1, ErrorCode::kPrecondition,
            "need N^2 >= k+1: N=" + std::to_string(N) + ", k=" + std::to_string(r.size()));
    const double len = l2(r);
    require(len > 0.0, ErrorCode::kPrecondition, "Bloch embedding of the zero vector");
    const double scale = gamma / (len * (static_cast<double>(N) - 1.0));
    RealVector c(r.begin(), r.end());
    for (double &v : c) v *= scale;
    return state_from_coefficients(c, N);
}

BlochState maximally_mixed(std::size_t N) { return state_from_coefficients({}, N); }

double povm_condition_ratio(std::span<const double> e, std::size_t N) {
    qubits_for_levels(N);
    require(e.size() == N * N, ErrorCode::kShapeMismatch, "POVM vector must have length N^2");
    double lhs = 0.0;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) lhs += e[i] * e[i];
    const double last = e.back();
    const double n = static_cast<double>(N);
    const double rhs = n / (2.0 * (n - 1.0)) * std::min(last * last, (1.0 - last) * (1.0 - last));
    if (lhs == 0.0) return 0.0;
    return rhs > 0.0 ? lhs / rhs : INFINITY;
}

BlochPOVM povm_from_vector(std::span<const double> e, std::size_t N) {
    const Tolerances &tol = default_tolerances();
    qubits_for_levels(N);
    require(e.size() == N * N, ErrorCode::kShapeMismatch, "POVM vector must have length N^2");
    double lhs = 0.0;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) lhs += e[i] * e[i];
    const double last = e.back();
    const double n = static_cast<double>(N);
    const double rhs = n / (2.0 * (n - 1.0)) * std::min(last * last, (1.0 - last) * (1.0 - last));
    require(lhs <= rhs + tol.povm_slack, ErrorCode::kPrecondition,
            "POVM sufficient condition violated: ratio " + std::to_string(povm_condition_ratio(e, N)));

    BlochPOVM m;
    m.N = N;
    m.e.assign(e.begin(), e.end());
    m.E = combine(e.first(e.size() - 1), N, last, 1.0);
    require(is_psd(m.E, tol.psd), ErrorCode::kNumerical, "POVM element E is not PSD");
    require(is_psd(ComplexMatrix::identity(N) - m.E, tol.psd), ErrorCode::kNumerical, "POVM element I-E is not PSD");
    return m;
}

ComplexMatrix reconstruct_state(std::span<const double> r, std::size_t N) {
    require(r.size() <= N * N - 1, ErrorCode::kShapeMismatch, "too many Bloch coefficients");
    return combine(r, N, 1.0 / static_cast<double>(N), state_scale(N) / static_cast<double>(N));
}

RealVector bloch_decompose(const ComplexMatrix &rho) {
    require(rho.is_square(), ErrorCode::kShapeMismatch, "density matrix must be square");
    const std::size_t N = rho.rows();
    const GeneratorBasis &basis = generator_basis(qubits_for_levels(N));
    const Tolerances &tol = default_tolerances();
    require(is_hermitian(rho, tol.hermitian), ErrorCode::kPrecondition, "invalid state: not Hermitian");
    require(std::abs(trace(rho) - 1.0) <= tol.trace, ErrorCode::kPrecondition, "invalid state: trace != 1");
    require(is_psd(rho, tol.psd), ErrorCode::kPrecondition, "invalid state: not PSD");
    const double factor = std::sqrt(static_cast<double>(N) / (2.0 * (static_cast<double>(N) - 1.0)));
    RealVector r(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) r[i] = trace_product(rho, basis[i]).real() * factor;
    return r;
}

AcceptanceProbability acceptance_probability(const BlochState &s, const BlochPOVM &m) {
    require(s.N == m.N, ErrorCode::kShapeMismatch,
            "state has N=" + std::to_string(s.N) + " but POVM has N=" + std::to_string(m.N));
    double dot = 0.0;
    for (std::size_t i = 0; i < s.bloch.size(); ++i) dot += s.bloch[i] * m.e[i];
    return {trace_product(s.rho, m.E).real(), m.e.back() + closed_form_scale(s.N) * dot};
}

}  // namespace arrcc
