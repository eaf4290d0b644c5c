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

#include "arrcc/kremer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arrcc/error.hpp"

namespace arrcc {

namespace {

// i_t for t in 1..n; i_0 is the initial |0> channel.
std::size_t transcript_bit(std::size_t transcript, std::size_t n, std::size_t t) {
    if (t == 0) return 0;
    return (transcript >> (n - t)) & 1U;
}

}  // namespace

BranchVectors branch_vectors(const TwoWayQuantumProtocol &p, Party side, std::size_t input) {
    p.validate();
    require(p.alternating(), ErrorCode::kPrecondition,
            "branch decomposition needs alternating rounds (consecutive rounds by one party found)");
    const std::size_t n = p.num_rounds();
    require(n <= kMaxTranscriptRounds, ErrorCode::kCapExceeded,
            "branch decomposition supports at most 8 rounds, got " + std::to_string(n));
    const bool alice = side == Party::kAlice;
    require(input < (alice ? p.x_size : p.y_size), ErrorCode::kOutOfRange, "input index out of range");
    const std::size_t dim = alice ? p.alice_dim : p.bob_dim;

    BranchVectors out(std::size_t{1} << n);
    ComplexVector next(dim);
    for (std::size_t tr = 0; tr < out.size(); ++tr) {
        ComplexVector v(dim);
        v[0] = 1.0;
        for (std::size_t t = 1; t <= n; ++t) {
            const TwoWayRound &round = p.rounds[t - 1];
            if (round.owner != side) continue;
            const ComplexMatrix &u = round.unitaries[input];
            const std::size_t cin = transcript_bit(tr, n, t - 1);
            const std::size_t cout = transcript_bit(tr, n, t);
            for (std::size_t r = 0; r < dim; ++r) {
                Complex acc{};
                for (std::size_t s = 0; s < dim; ++s) acc += u(r * 2 + cout, s * 2 + cin) * v[s];
                next[r] = acc;
            }
            v.swap(next);
        }
        out[tr] = std::move(v);
    }
    return out;
}

BranchDecomposition decompose(const TwoWayQuantumProtocol &p, std::size_t x, std::size_t y) {
    return BranchDecomposition{p.num_rounds(), x, y, branch_vectors(p, Party::kAlice, x),
                               branch_vectors(p, Party::kBob, y)};
}

ComplexVector reconstruct_final_state(const TwoWayQuantumProtocol &p, const BranchDecomposition &d) {
    const std::size_t A = p.alice_dim, B = p.bob_dim;
    ComplexVector state(p.total_dimension());
    for (std::size_t tr = 0; tr < d.alice.size(); ++tr) {
        const std::size_t c = d.n == 0 ? 0 : (tr & 1U);
        const ComplexVector &av = d.alice[tr];
        const ComplexVector &bv = d.bob[tr];
        for (std::size_t a = 0; a < A; ++a) {
            if (av[a] == Complex{}) continue;
            for (std::size_t b = 0; b < B; ++b) state[(a * 2 + c) * B + b] += av[a] * bv[b];
        }
    }
    return state;
}

std::size_t extracted_dimension(std::size_t rounds) {
    require(rounds >= 1 && rounds <= kMaxTranscriptRounds, ErrorCode::kOutOfRange, "rounds must be in 1..8");
    return (std::size_t{1} << (2 * rounds - 1)) - (std::size_t{1} << (rounds - 1));
}

namespace {

// Gram entries G[i][j] = <v_{j0} | v_{i0}> over transcripts ending in 0.
std::vector<ComplexVector> output_zero_gram(const BranchVectors &branches, std::size_t half) {
    std::vector<ComplexVector> g(half, ComplexVector(half));
    for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = 0; j < half; ++j) g[i][j] = inner(branches[2 * j], branches[2 * i]);
    return g;
}

// Interleaved realification over k = (i, j) in lexicographic order; diagonal
// pairs keep only their real part.
RealVector realify(const std::vector<ComplexVector> &g, bool conjugate_sign) {
    const std::size_t half = g.size();
    RealVector out;
    out.reserve(2 * half * half - half);
    for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = 0; j < half; ++j) {
            out.push_back(g[i][j].real());
            if (i != j) out.push_back(conjugate_sign ? -g[i][j].imag() : g[i][j].imag());
        }
    return out;
}

Arrangement normalize_or_keep(const Arrangement &a) {
    for (const auto &p : a.points())
        for (double v : p)
            if (v != 0.0) return normalize(a);
    return a;
}

}  // namespace

Extraction extract_arrangement(const TwoWayQuantumProtocol &p, const PartialBoolFn &f) {
    const SuccessProfile prof = success_profile(p, f);
    require(prof.computes_f && prof.bias > 0.0, ErrorCode::kPrecondition,
            "protocol does not compute the function with positive bias");
    const std::size_t n = p.num_rounds();
    const std::size_t dim = extracted_dimension(n);
    const std::size_t half = std::size_t{1} << (n - 1);

    std::vector<RealVector> points;
    std::vector<std::vector<ComplexVector>> gram_a;
    for (std::size_t x = 0; x < p.x_size; ++x) {
        gram_a.push_back(output_zero_gram(branch_vectors(p, Party::kAlice, x), half));
        points.push_back(realify(gram_a.back(), true));
    }
    std::vector<RealVector> hyperplanes;
    for (std::size_t y = 0; y < p.y_size; ++y) {
        RealVector h = realify(output_zero_gram(branch_vectors(p, Party::kBob, y), half), false);
        h.push_back(0.5);
        hyperplanes.push_back(std::move(h));
    }
    Arrangement raw(dim, std::move(points), std::move(hyperplanes));

    ExtractionReport rep;
    rep.dimension = dim;
    rep.protocol_bias = prof.bias;
    for (std::size_t x = 0; x < p.x_size; ++x)
        for (std::size_t y = 0; y < p.y_size; ++y) {
            const double inner_sum = evaluate(raw, x, y) + 0.5;
            rep.max_trace_identity_error =
                std::max(rep.max_trace_identity_error, std::abs(inner_sum - prof.p_zero[x][y]));
        }
    require(rep.max_trace_identity_error <= default_tolerances().reconstruction, ErrorCode::kNumerical,
            "trace identity check failed: error " + std::to_string(rep.max_trace_identity_error));

    const RealizeVerdict v_raw = realizes(raw, f);
    require(v_raw.realizes, ErrorCode::kNumerical, "extracted arrangement does not realize the function");
    rep.margin_raw = v_raw.margin;
    rep.magnitude_raw = v_raw.magnitude;
    rep.magnitude_violation = v_raw.magnitude > 1.0 + default_tolerances().magnitude;

    Arrangement normalized = normalize_or_keep(raw);
    const RealizeVerdict v_norm = realizes(normalized, f);
    require(v_norm.realizes, ErrorCode::kNumerical, "normalized extraction lost the sign pattern");
    rep.margin_normalized = v_norm.margin;

    return Extraction{std::move(raw), std::move(normalized), rep};
}

}  // namespace arrcc
