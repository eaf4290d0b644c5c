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

#ifndef ARRCC_BLOCH_HPP
#define ARRCC_BLOCH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "arrcc/numkernel.hpp"

namespace arrcc {

inline constexpr int kMaxQubits = 3;

/// Pauli-string generators of SU(N), N = 2^n, in base-4 order: lambda_j is
/// sqrt(2/N) * sigma_{d_1} (x) ... (x) sigma_{d_n} where d_1..d_n are the base-4
/// digits of j (most significant first, 0 = identity). Here sigma_1 =
/// diag(1,-1), sigma_2 is the real off-diagonal and sigma_3 the imaginary one.
struct GeneratorBasis {
    int n = 0;
    std::size_t N = 0;
    std::vector<ComplexMatrix> matrices;  // lambda_1 .. lambda_{N^2-1}

    std::size_t size() const noexcept { return matrices.size(); }
    const ComplexMatrix &operator[](std::size_t i) const { return matrices[i]; }
};

/// Cached per n; initialization is thread-safe.
const GeneratorBasis &generator_basis(int n);

/// Qubit count for a level count N in {2, 4, 8}.
int qubits_for_levels(std::size_t N);

/// sqrt(N(N-1)/2): the scale in rho = (1/N)(I + c * sum r_i lambda_i).
double state_scale(std::size_t N);

/// sqrt(2(N-1)/N): Tr(rho E) = e_{N^2} + closed_form_scale * <r, e>.
double closed_form_scale(std::size_t N);

/// Certified N-level density matrix rho = (1/N)(I + state_scale * sum r_i lambda_i).
/// `bloch` has length N^2-1 (effective coefficients, zero-padded).
struct BlochState {
    std::size_t N = 0;
    RealVector bloch;
    ComplexMatrix rho;
};

/// Certified two-outcome POVM {E, I-E}, E = e_{N^2} I + sum e_i lambda_i.
struct BlochPOVM {
    std::size_t N = 0;
    RealVector e;  // length N^2, identity coefficient last
    ComplexMatrix E;
};

/// Builds rho from effective coefficients and certifies it (Hermitian,
/// unit trace, PSD by eigenvalues). Throws kNumerical if certification fails.
BlochState state_from_coefficients(std::span<const double> coefficients, std::size_t N);

/// rho(r) with coefficients r_i / (|r| (N-1)) on the first k generators.
/// Requires N^2 >= k+1 and r != 0.
BlochState state_from_vector(std::span<const double> r, std::size_t N);

/// The state whose effective coefficients are gamma times those of rho(r).
BlochState shrink_state(std::span<const double> r, double gamma, std::size_t N);

BlochState maximally_mixed(std::size_t N);

/// Ratio sum_{i<N^2} e_i^2 / (N/(2(N-1)) * min(e_{N^2}^2, (1-e_{N^2})^2)).
/// Values <= 1 satisfy the sufficient POVM condition.
double povm_condition_ratio(std::span<const double> e, std::size_t N);

/// Requires the sufficient condition (with a 1e-12 slack) and certifies
/// both E and I-E PSD by eigenvalues.
BlochPOVM povm_from_vector(std::span<const double> e, std::size_t N);

/// r_i = Tr(rho lambda_i) * sqrt(N / (2(N-1))); rejects invalid states.
RealVector bloch_decompose(const ComplexMatrix &rho);

/// Inverse of bloch_decompose: (1/N)(I + state_scale * sum r_i lambda_i), no
/// certification.
ComplexMatrix reconstruct_state(std::span<const double> r, std::size_t N);

struct AcceptanceProbability {
    double trace;        // Re Tr(rho E)
    double closed_form;  // e_{N^2} + sqrt(2(N-1)/N) * <r, e>
};

AcceptanceProbability acceptance_probability(const BlochState &s, const BlochPOVM &m);

}  // namespace arrcc

#endif  // ARRCC_BLOCH_HPP
