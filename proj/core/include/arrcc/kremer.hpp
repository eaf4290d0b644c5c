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

#ifndef ARRCC_KREMER_HPP
#define ARRCC_KREMER_HPP

#include <cstddef>
#include <vector>

#include "arrcc/arrangement.hpp"
#include "arrcc/protocols.hpp"

namespace arrcc {

inline constexpr std::size_t kMaxTranscriptRounds = 8;

/// Transcripts i = (i_1..i_n) are encoded as integers with i_1 most
/// significant, so lexicographic order is numeric order and i_n = i & 1.
/// Bit i_t is the channel basis index right after round t.
using BranchVectors = std::vector<ComplexVector>;  // [transcript] -> vector over the party's register

/// Per-transcript branch vectors of one party: at each of its rounds t the
/// channel is fed |i_{t-1}> (|0> at t = 1), U_t is applied and the channel is
/// projected onto |i_t>. Rejects non-alternating protocols.
BranchVectors branch_vectors(const TwoWayQuantumProtocol &p, Party side, std::size_t input);

struct BranchDecomposition {
    std::size_t n = 0;
    std::size_t x = 0;
    std::size_t y = 0;
    BranchVectors alice;
    BranchVectors bob;
};

BranchDecomposition decompose(const TwoWayQuantumProtocol &p, std::size_t x, std::size_t y);

/// sum_i A_i (x) |i_n> (x) B_i in the simulator's (Alice, channel, Bob) order.
ComplexVector reconstruct_final_state(const TwoWayQuantumProtocol &p, const BranchDecomposition &d);

/// 2^{2n-1} - 2^{n-1}.
std::size_t extracted_dimension(std::size_t rounds);

struct ExtractionReport {
    std::size_t dimension = 0;
    double margin_raw = 0.0;
    double margin_normalized = 0.0;
    double magnitude_raw = 0.0;
    bool magnitude_violation = false;  // magnitude_raw > 1 + tol
    double max_trace_identity_error = 0.0;
    double protocol_bias = 0.0;
};

struct Extraction {
    Arrangement raw;
    Arrangement normalized;
    ExtractionReport report;
};

/// Converts a two-way protocol computing f with bias eps > 0 into an
/// arrangement of dimension 2^{2n-1} - 2^{n-1} realizing f with margin eps.
/// Points are the realified Gram vectors of Alice's output-0 branches,
/// hyperplanes those of Bob's with threshold 1/2.
Extraction extract_arrangement(const TwoWayQuantumProtocol &p, const PartialBoolFn &f);

}  // namespace arrcc

#endif  // ARRCC_KREMER_HPP
