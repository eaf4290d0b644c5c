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

#ifndef ARRCC_PROTOCOLS_HPP
#define ARRCC_PROTOCOLS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arrcc/bloch.hpp"
#include "arrcc/boolfn.hpp"
#include "arrcc/numkernel.hpp"

// Protocol IRs for the five communication models and exact evaluators of
// P[output 0]. Nothing here samples; every probability is an enumeration or a
// trace.

namespace arrcc {

enum class Party { kAlice, kBob };

std::string_view party_name(Party p);

/// Alice sends one message m ~ alice_dist[x]; Bob outputs 0 with probability
/// bob_accept[m][y].
struct ClassicalOneWayProtocol {
    int message_bits = 0;
    std::vector<RealVector> alice_dist;  // [x][m]
    std::vector<RealVector> bob_accept;  // [m][y]

    std::size_t num_messages() const { return bob_accept.size(); }
    void validate() const;
};

struct QuantumOneWayProtocol {
    int qubits = 0;
    std::vector<BlochState> alice_states;  // per x
    std::vector<BlochPOVM> bob_povms;      // per y; E is the "output 0" element

    void validate() const;
};

/// Both parties send a state to the referee, who runs the C-SWAP test with
/// probability mix_alpha and otherwise outputs 1.
struct QuantumSMPProtocol {
    std::vector<BlochState> alice_states;  // per x
    std::vector<BlochState> bob_states;    // per y
    double mix_alpha = 1.0;

    void validate() const;
};

struct ClassicalSMPProtocol {
    int alice_bits = 0;
    int bob_bits = 0;
    std::vector<RealVector> alice_dist;      // [x][m]
    std::vector<RealVector> bob_dist;        // [y][m']
    std::vector<RealVector> referee_accept;  // [m][m']

    void validate() const;
};

/// One channel qubit per round. The owner applies unitaries[input] to
/// (owner private register) (x) (channel), index = private * 2 + channel.
/// The global state is ordered Alice (x) channel (x) Bob and starts in |0..0>.
/// The output is the channel qubit after the last round.
struct TwoWayRound {
    Party owner = Party::kAlice;
    std::vector<ComplexMatrix> unitaries;  // per owner's input
};

inline constexpr std::size_t kMaxTwoWayDimension = std::size_t{1} << 12;

struct TwoWayQuantumProtocol {
    std::size_t x_size = 0;
    std::size_t y_size = 0;
    std::size_t alice_dim = 1;
    std::size_t bob_dim = 1;
    std::vector<TwoWayRound> rounds;

    std::size_t num_rounds() const noexcept { return rounds.size(); }
    std::size_t total_dimension() const noexcept { return alice_dim * 2 * bob_dim; }
    bool alternating() const;
    void validate() const;
};

using Protocol = std::variant<ClassicalOneWayProtocol, QuantumOneWayProtocol, QuantumSMPProtocol,
                              ClassicalSMPProtocol, TwoWayQuantumProtocol>;

std::string_view protocol_kind(const Protocol &p);

double eval_classical_oneway(const ClassicalOneWayProtocol &p, std::size_t x, std::size_t y);
double eval_quantum_oneway(const QuantumOneWayProtocol &p, std::size_t x, std::size_t y);
/// 1/2 + 1/2 Re Tr(rho sigma).
double eval_cswap(const ComplexMatrix &rho, const ComplexMatrix &sigma);
double eval_quantum_smp(const QuantumSMPProtocol &p, std::size_t x, std::size_t y);
double eval_classical_smp(const ClassicalSMPProtocol &p, std::size_t x, std::size_t y);

struct TwoWayResult {
    ComplexVector state;  // index (a * 2 + c) * bob_dim + b
    double p_zero = 0.0;
};

TwoWayResult simulate_two_way(const TwoWayQuantumProtocol &p, std::size_t x, std::size_t y);

double probability_zero(const Protocol &p, std::size_t x, std::size_t y);

struct ProtocolCost {
    int amount = 0;
    bool quantum = false;
    std::string unit() const { return quantum ? "qubits" : "bits"; }
};

/// One-way: message size. SMP: sum of both messages. Two-way: rounds.
ProtocolCost cost(const Protocol &p);

struct SuccessProfile {
    std::vector<RealVector> p_zero;  // [x][y], every pair
    double bias = 0.0;               // min over defined pairs of |P0 - 1/2|
    bool computes_f = false;         // P0 > 1/2 iff f = 0, strictly, on defined pairs
    ProtocolCost cost;
};

SuccessProfile success_profile(const Protocol &p, const PartialBoolFn &f);

}  // namespace arrcc

#endif  // ARRCC_PROTOCOLS_HPP
