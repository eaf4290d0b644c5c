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

#include <gtest/gtest.h>

#include <cmath>

#include "arrcc/bloch.hpp"
#include "arrcc/error.hpp"
#include "arrcc/numkernel.hpp"
#include "arrcc/random.hpp"
#include "oracles.hpp"

namespace arrcc {
namespace {

const ComplexMatrix kSigmaDiag{{1.0, 0.0}, {0.0, -1.0}};
const ComplexMatrix kSigmaOff{{0.0, 1.0}, {1.0, 0.0}};

TEST(Tensor, IdentityTimesIdentity) {
    EXPECT_EQ(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
}

TEST(Tensor, DiagonalCase) {
    const RealVector d{1, -1, -1, 1};
    EXPECT_EQ(tensor(kSigmaDiag, kSigmaDiag), ComplexMatrix::diagonal(d));
}

TEST(Tensor, MatchesIndexFormula) {
    Rng rng(5);
    const ComplexMatrix a = rng.hermitian(3);
    const ComplexMatrix b = rng.unitary(2);
    EXPECT_EQ(tensor(kSigmaDiag, kSigmaOff), oracle::kron(kSigmaDiag, kSigmaOff));
    EXPECT_LE(max_abs_diff(tensor(a, b), oracle::kron(a, b)), 0.0);
}

TEST(HermitianEigenvalues, Diagonal) {
    const RealVector d{1, 0};
    const RealVector ev = hermitian_eigenvalues(ComplexMatrix::diagonal(d));
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_NEAR(ev[0], 0.0, 1e-15);
    EXPECT_NEAR(ev[1], 1.0, 1e-15);
}

TEST(HermitianEigenvalues, HalfIdentityPlusOffDiagonal) {
    const ComplexMatrix m = (ComplexMatrix::identity(2) + kSigmaOff) * Complex(0.5);
    // 2x2 closed form: (tr +- sqrt(tr^2 - 4 det)) / 2.
    const double tr = 1.0, det = 0.25 - 0.25;
    const RealVector ev = hermitian_eigenvalues(m);
    EXPECT_NEAR(ev[0], (tr - std::sqrt(tr * tr - 4 * det)) / 2, 1e-14);
    EXPECT_NEAR(ev[1], (tr + std::sqrt(tr * tr - 4 * det)) / 2, 1e-14);
}

TEST(HermitianEigenvalues, RandomMatchesCharacteristicPolynomial) {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix h = rng.hermitian(4);
        const RealVector ev = hermitian_eigenvalues(h);
        const std::vector<double> ref = oracle::charpoly_eigenvalues(h);
        ASSERT_EQ(ref.size(), 4u) << "oracle lost a root on trial " << trial;
        for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], ref[i], 1e-8);
    }
}

TEST(HermitianEigen, VectorsDiagonalize) {
    Rng rng(3);
    for (std::size_t n : {1u, 2u, 5u, 8u, 16u}) {
        const ComplexMatrix h = rng.hermitian(n);
        const HermitianEigen e = hermitian_eigen(h);
        EXPECT_TRUE(is_unitary(e.vectors, 1e-10));
        const ComplexMatrix d = e.vectors.adjoint() * h * e.vectors;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                EXPECT_NEAR(std::abs(d(i, j) - (i == j ? Complex(e.values[i]) : Complex{})), 0.0, 1e-9);
        const std::vector<double> ref = oracle::eigenvalues(h);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(e.values[i], ref[i], 1e-9);
    }
}

TEST(HermitianEigen, InvariantUnderUnitaryConjugation) {
    Rng rng(8);
    const ComplexMatrix h = rng.hermitian(6);
    const ComplexMatrix u = rng.unitary(6);
    const RealVector a = hermitian_eigenvalues(h);
    const RealVector b = hermitian_eigenvalues(u * h * u.adjoint());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
}

TEST(HermitianEigen, RejectsNonHermitian) {
    const ComplexMatrix m{{0.0, 1.0}, {0.0, 0.0}};
    EXPECT_THROW(hermitian_eigen(m), Error);
}

TEST(IsPsd, Examples) {
    EXPECT_TRUE(is_psd(ComplexMatrix::diagonal(RealVector{1, 0}), 1e-10));
    EXPECT_FALSE(is_psd(ComplexMatrix::diagonal(RealVector{1, -0.5}), 1e-10));
    const ComplexMatrix m = (ComplexMatrix::identity(2) + kSigmaDiag * Complex(0.999)) * Complex(0.5);
    EXPECT_TRUE(is_psd(m, 1e-10));
}

TEST(TraceProduct, Examples) {
    EXPECT_EQ(trace_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), Complex(2.0));
    for (int n = 1; n <= 3; ++n) {
        const GeneratorBasis &b = generator_basis(n);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                EXPECT_NEAR(std::abs(trace_product(b[i], b[j]) - Complex(i == j ? 2.0 : 0.0)), 0.0, 1e-12);
    }
}

TEST(TraceProduct, PureStatesHaveUnitPurity) {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        RealVector r = rng.gaussian_vector(3);
        const BlochState s = state_from_vector(r, 2);
        EXPECT_NEAR(trace_product(s.rho, s.rho).real(), 1.0, 1e-12);
        const std::vector<double> ev = oracle::eigenvalues(s.rho);
        EXPECT_NEAR(ev[0], 0.0, 1e-12);
        EXPECT_NEAR(ev[1], 1.0, 1e-12);
    }
}

TEST(TraceProduct, MatchesReferenceSum) {
    Rng rng(2);
    const ComplexMatrix a = rng.hermitian(5), b = rng.unitary(5);
    EXPECT_NEAR(std::abs(trace_product(a, b) - oracle::trace_of_product(a, b)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(trace(a * b) - trace_product(a, b)), 0.0, 1e-12);
}

TEST(ExpIHermitian, IsUnitaryAndMatchesSpectralForm) {
    Rng rng(4);
    for (std::size_t n : {2u, 4u, 8u}) {
        const ComplexMatrix h = rng.hermitian(n);
        const ComplexMatrix u = exp_i_hermitian(h);
        EXPECT_TRUE(is_unitary(u, 1e-10));
        // exp(iH) = V exp(i D) V^dagger via the eigen-decomposition.
        const HermitianEigen e = hermitian_eigen(h);
        ComplexMatrix ref(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    ref(i, j) += e.vectors(i, k) * std::exp(Complex(0, e.values[k])) * std::conj(e.vectors(j, k));
        EXPECT_LE(max_abs_diff(u, ref), 1e-9);
    }
}

TEST(CompleteUnitary, KeepsGivenColumns) {
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexVector v{s, Complex(0, s), 0.0, 0.0};
    const ComplexMatrix u = complete_unitary({v}, 4);
    EXPECT_TRUE(is_unitary(u));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(u(i, 0), v[i]);
}

TEST(CompleteUnitary, RejectsNonOrthonormal) {
    EXPECT_THROW(complete_unitary({ComplexVector{1.0, 1.0}}, 2), Error);
}

TEST(Inner, ConjugateLinearInFirst) {
    const ComplexVector a{Complex(0, 1), 0.0}, b{1.0, 0.0};
    EXPECT_EQ(inner(a, b), Complex(0, -1));
    EXPECT_DOUBLE_EQ(norm(ComplexVector{3.0, Complex(0, 4)}), 5.0);
}

TEST(ComplexMatrix, ShapeErrors) {
    EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
    EXPECT_THROW(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), Error);
}

}  // namespace
}  // namespace arrcc
