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

#include "arrcc/error.hpp"
#include "arrcc/kremer.hpp"
#include "oracles.hpp"

namespace arrcc {
namespace {

const ComplexMatrix kFlip{{0.0, 1.0}, {1.0, 0.0}};

TwoWayQuantumProtocol single_alice_round(const ComplexMatrix &u_on_channel, std::size_t alice_dim) {
    TwoWayQuantumProtocol p;
    p.x_size = p.y_size = 1;
    p.alice_dim = alice_dim;
    p.rounds.push_back(TwoWayRound{Party::kAlice, {tensor(ComplexMatrix::identity(alice_dim), u_on_channel)}});
    return p;
}

double vec_norm(const ComplexVector &v) { return norm(v); }

TEST(BranchVectors, IdentityRound) {
    const BranchVectors a = branch_vectors(single_alice_round(ComplexMatrix::identity(2), 3), Party::kAlice, 0);
    ASSERT_EQ(a.size(), 2u);
    ASSERT_EQ(a[0].size(), 3u);
    EXPECT_NEAR(std::abs(a[0][0] - 1.0), 0.0, 1e-15);
    EXPECT_EQ(vec_norm(a[0]), 1.0);
    EXPECT_EQ(vec_norm(a[1]), 0.0);
}

TEST(BranchVectors, FlipRound) {
    const BranchVectors a = branch_vectors(single_alice_round(kFlip, 2), Party::kAlice, 0);
    EXPECT_EQ(vec_norm(a[0]), 0.0);
    EXPECT_NEAR(std::abs(a[1][0] - 1.0), 0.0, 1e-15);
    EXPECT_EQ(vec_norm(a[1]), 1.0);
    const BranchVectors b = branch_vectors(single_alice_round(kFlip, 2), Party::kBob, 0);
    ASSERT_EQ(b.size(), 2u);
    // Bob never acts: his branch is |0> for every transcript.
    EXPECT_EQ(vec_norm(b[0]), 1.0);
    EXPECT_EQ(vec_norm(b[1]), 1.0);
}

TEST(Decompose, ReconstructsRandomThreeRoundProtocols) {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const Party first = seed % 2 ? Party::kBob : Party::kAlice;
        const TwoWayQuantumProtocol p = oracle::random_alternating_protocol(seed, 3, 2, 3, first);
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y) {
                const BranchDecomposition d = decompose(p, x, y);
                EXPECT_EQ(d.n, 3u);
                ASSERT_EQ(d.alice.size(), 8u);
                for (const auto &v : d.alice) EXPECT_LE(vec_norm(v), 1.0 + 1e-10);
                for (const auto &v : d.bob) EXPECT_LE(vec_norm(v), 1.0 + 1e-10);
                const ComplexVector rec = reconstruct_final_state(p, d);
                const Eigen::VectorXcd ref = oracle::two_way_final_state(p, x, y);
                ASSERT_EQ(static_cast<Eigen::Index>(rec.size()), ref.size());
                double err = 0.0;
                for (std::size_t i = 0; i < rec.size(); ++i)
                    err += std::norm(rec[i] - ref[static_cast<Eigen::Index>(i)]);
                EXPECT_LE(std::sqrt(err), 1e-9);
            }
    }
}

TEST(Decompose, RejectsNonAlternating) {
    TwoWayQuantumProtocol p = single_alice_round(kFlip, 1);
    p.rounds.push_back(p.rounds[0]);
    EXPECT_FALSE(p.alternating());
    EXPECT_NO_THROW(simulate_two_way(p, 0, 0));
    EXPECT_THROW(decompose(p, 0, 0), Error);
    EXPECT_THROW(branch_vectors(p, Party::kAlice, 0), Error);
}

TEST(ExtractedDimension, Formula) {
    EXPECT_EQ(extracted_dimension(1), 1u);
    EXPECT_EQ(extracted_dimension(2), 6u);
    EXPECT_EQ(extracted_dimension(3), 28u);
    EXPECT_EQ(extracted_dimension(4), 120u);
}

TEST(Extract, RandomProtocolsRealizeInducedFunction) {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 40 && checked < 8; ++seed) {
        const std::size_t rounds = 1 + seed % 3;
        const TwoWayQuantumProtocol p = oracle::random_alternating_protocol(
            seed, rounds, 2, 2, seed % 2 ? Party::kAlice : Party::kBob);
        const PartialBoolFn f = oracle::induced_function(p);
        if (!f.is_total()) continue;
        const SuccessProfile prof = success_profile(Protocol{p}, f);
        if (prof.bias <= 0.01) continue;
        ++checked;
        const Extraction ex = extract_arrangement(p, f);
        EXPECT_EQ(ex.raw.dim(), extracted_dimension(rounds));
        EXPECT_EQ(ex.report.dimension, extracted_dimension(rounds));
        const RealizeVerdict v = realizes(ex.raw, f);
        ASSERT_TRUE(v.realizes);
        EXPECT_GE(v.margin, prof.bias - 1e-9);
        EXPECT_NEAR(ex.report.margin_raw, v.margin, 1e-15);
        EXPECT_LE(ex.report.max_trace_identity_error, 1e-9);
        EXPECT_TRUE(realizes(ex.normalized, f).realizes);
        EXPECT_LE(magnitude(ex.normalized), 1.0 + 1e-12);
        for (std::size_t y = 0; y < 2; ++y) EXPECT_EQ(ex.raw.threshold(y), 0.5);
        // The pre-threshold part reproduces P[output 0].
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y)
                EXPECT_NEAR(evaluate(ex.raw, x, y) + 0.5, prof.p_zero[x][y], 1e-9);
    }
    EXPECT_GE(checked, 4);
}

TEST(Extract, RequiresComputingProtocol) {
    const TwoWayQuantumProtocol p = oracle::random_alternating_protocol(3, 2, 2, 2, Party::kAlice);
    PartialBoolFn f = oracle::induced_function(p);
    // Flip every defined entry so the protocol computes the complement.
    std::vector<Entry> t;
    for (std::size_t x = 0; x < f.x_size(); ++x)
        for (std::size_t y = 0; y < f.y_size(); ++y)
            t.push_back(f.at(x, y) == Entry::kZero ? Entry::kOne : f.at(x, y) == Entry::kOne ? Entry::kZero : Entry::kUndefined);
    EXPECT_THROW(extract_arrangement(p, PartialBoolFn(f.x_size(), f.y_size(), t)), Error);
}

}  // namespace
}  // namespace arrcc
