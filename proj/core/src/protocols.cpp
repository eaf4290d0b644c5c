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

#include "arrcc/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "arrcc/error.hpp"

namespace arrcc {

std::string_view party_name(Party p) { return p == Party::kAlice ? "alice" : "bob"; }

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_distribution(const RealVector &d, const std::string &what) {
    double sum = 0.0;
    for (double v : d) {
        require(v >= 0.0 && std::isfinite(v), ErrorCode::kInvalidInput, what + ": negative or non-finite probability");
        sum += v;
    }
    require(std::abs(sum - 1.0) <= default_tolerances().distribution, ErrorCode::kInvalidInput,
            what + ": probabilities sum to " + std::to_string(sum));
}

void check_accept_table(const std::vector<RealVector> &t, std::size_t cols, const std::string &what) {
    for (const auto &row : t) {
        require(row.size() == cols, ErrorCode::kShapeMismatch, what + ": ragged table");
        for (double v : row)
            require(v >= 0.0 && v <= 1.0, ErrorCode::kInvalidInput, what + ": acceptance probability outside [0,1]");
    }
}

void check_message_space(std::size_t messages, int bits, const std::string &what) {
    require(bits >= 0 && bits < 63, ErrorCode::kInvalidInput, what + ": bad message size");
    require(messages >= 1 && messages <= (std::size_t{1} << bits), ErrorCode::kInvalidInput,
            what + ": " + std::to_string(messages) + " messages do not fit in " + std::to_string(bits) + " bits");
}

void check_index(std::size_t i, std::size_t n, const char *what) {
    require(i < n, ErrorCode::kOutOfRange, std::string(what) + " index " + std::to_string(i) + " out of range");
}

std::pair<std::size_t, std::size_t> input_shape(const Protocol &p) {
    return std::visit(
        overloaded{
            [](const ClassicalOneWayProtocol &q) {
                return std::make_pair(q.alice_dist.size(), q.bob_accept.empty() ? 0 : q.bob_accept.front().size());
            },
            [](const QuantumOneWayProtocol &q) { return std::make_pair(q.alice_states.size(), q.bob_povms.size()); },
            [](const QuantumSMPProtocol &q) { return std::make_pair(q.alice_states.size(), q.bob_states.size()); },
            [](const ClassicalSMPProtocol &q) { return std::make_pair(q.alice_dist.size(), q.bob_dist.size()); },
            [](const TwoWayQuantumProtocol &q) { return std::make_pair(q.x_size, q.y_size); },
        },
        p);
}

}  // namespace

void ClassicalOneWayProtocol::validate() const {
    check_message_space(bob_accept.size(), message_bits, "classical one-way");
    require(!alice_dist.empty() && !bob_accept.front().empty(), ErrorCode::kInvalidInput,
            "classical one-way: empty input set");
    for (const auto &d : alice_dist) {
        require(d.size() == bob_accept.size(), ErrorCode::kShapeMismatch,
                "classical one-way: distribution length != message count");
        check_distribution(d, "classical one-way Alice distribution");
    }
    check_accept_table(bob_accept, bob_accept.front().size(), "classical one-way Bob");
}

void QuantumOneWayProtocol::validate() const {
    require(qubits >= 1 && qubits <= kMaxQubits, ErrorCode::kOutOfRange, "quantum one-way: qubits outside 1..3");
    const std::size_t N = std::size_t{1} << qubits;
    require(!alice_states.empty() && !bob_povms.empty(), ErrorCode::kInvalidInput, "quantum one-way: empty input set");
    for (const auto &s : alice_states) require(s.N == N, ErrorCode::kShapeMismatch, "quantum one-way: state level mismatch");
    for (const auto &m : bob_povms) require(m.N == N, ErrorCode::kShapeMismatch, "quantum one-way: POVM level mismatch");
}

void QuantumSMPProtocol::validate() const {
    require(!alice_states.empty() && !bob_states.empty(), ErrorCode::kInvalidInput, "quantum SMP: empty input set");
    require(mix_alpha >= 0.0 && mix_alpha <= 1.0, ErrorCode::kInvalidInput, "quantum SMP: alpha outside [0,1]");
    const std::size_t N = alice_states.front().N;
    for (const auto &s : alice_states) require(s.N == N, ErrorCode::kShapeMismatch, "quantum SMP: level mismatch");
    for (const auto &s : bob_states) require(s.N == N, ErrorCode::kShapeMismatch, "quantum SMP: level mismatch");
}

void ClassicalSMPProtocol::validate() const {
    require(!alice_dist.empty() && !bob_dist.empty(), ErrorCode::kInvalidInput, "classical SMP: empty input set");
    const std::size_t ma = referee_accept.size();
    require(ma >= 1, ErrorCode::kInvalidInput, "classical SMP: empty referee table");
    const std::size_t mb = referee_accept.front().size();
    check_message_space(ma, alice_bits, "classical SMP Alice");
    check_message_space(mb, bob_bits, "classical SMP Bob");
    for (const auto &d : alice_dist) {
        require(d.size() == ma, ErrorCode::kShapeMismatch, "classical SMP: Alice distribution length");
        check_distribution(d, "classical SMP Alice distribution");
    }
    for (const auto &d : bob_dist) {
        require(d.size() == mb, ErrorCode::kShapeMismatch, "classical SMP: Bob distribution length");
        check_distribution(d, "classical SMP Bob distribution");
    }
    check_accept_table(referee_accept, mb, "classical SMP referee");
}

bool TwoWayQuantumProtocol::alternating() const {
    for (std::size_t t = 1; t < rounds.size(); ++t)
        if (rounds[t].owner == rounds[t - 1].owner) return false;
    return true;
}

void TwoWayQuantumProtocol::validate() const {
    require(x_size >= 1 && y_size >= 1, ErrorCode::kInvalidInput, "two-way: empty input set");
    require(alice_dim >= 1 && bob_dim >= 1, ErrorCode::kInvalidInput, "two-way: private dimensions must be positive");
    require(total_dimension() <= kMaxTwoWayDimension, ErrorCode::kCapExceeded,
            "two-way: total dimension " + std::to_string(total_dimension()) + " exceeds 4096");
    for (std::size_t t = 0; t < rounds.size(); ++t) {
        const TwoWayRound &r = rounds[t];
        const bool alice = r.owner == Party::kAlice;
        const std::size_t inputs = alice ? x_size : y_size;
        const std::size_t dim = 2 * (alice ? alice_dim : bob_dim);
        require(r.unitaries.size() == inputs, ErrorCode::kShapeMismatch,
                "two-way: round " + std::to_string(t) + " needs one unitary per input");
        for (const auto &u : r.unitaries) {
            require(u.rows() == dim && u.cols() == dim, ErrorCode::kShapeMismatch,
                    "two-way: round " + std::to_string(t) + " unitary has wrong size");
            require(is_unitary(u), ErrorCode::kPrecondition,
                    "two-way: round " + std::to_string(t) + " matrix is not unitary");
        }
    }
}

std::string_view protocol_kind(const Protocol &p) {
    return std::visit(overloaded{
                          [](const ClassicalOneWayProtocol &) { return std::string_view("classical_oneway"); },
                          [](const QuantumOneWayProtocol &) { return std::string_view("quantum_oneway"); },
                          [](const QuantumSMPProtocol &) { return std::string_view("quantum_smp"); },
                          [](const ClassicalSMPProtocol &) { return std::string_view("classical_smp"); },
                          [](const TwoWayQuantumProtocol &) { return std::string_view("two_way_quantum"); },
                      },
                      p);
}

double eval_classical_oneway(const ClassicalOneWayProtocol &p, std::size_t x, std::size_t y) {
    check_index(x, p.alice_dist.size(), "x");
    check_index(y, p.bob_accept.empty() ? 0 : p.bob_accept.front().size(), "y");
    double s = 0.0;
    for (std::size_t m = 0; m < p.num_messages(); ++m) s += p.alice_dist[x][m] * p.bob_accept[m][y];
    return s;
}

double eval_quantum_oneway(const QuantumOneWayProtocol &p, std::size_t x, std::size_t y) {
    check_index(x, p.alice_states.size(), "x");
    check_index(y, p.bob_povms.size(), "y");
    return acceptance_probability(p.alice_states[x], p.bob_povms[y]).trace;
}

double eval_cswap(const ComplexMatrix &rho, const ComplexMatrix &sigma) {
    require(rho.rows() == sigma.rows() && rho.is_square() && sigma.is_square(), ErrorCode::kShapeMismatch,
            "C-SWAP test needs two states of the same dimension");
    return 0.5 + 0.5 * trace_product(rho, sigma).real();
}

double eval_quantum_smp(const QuantumSMPProtocol &p, std::size_t x, std::size_t y) {
    check_index(x, p.alice_states.size(), "x");
    check_index(y, p.bob_states.size(), "y");
    return p.mix_alpha * eval_cswap(p.alice_states[x].rho, p.bob_states[y].rho);
}

double eval_classical_smp(const ClassicalSMPProtocol &p, std::size_t x, std::size_t y) {
    check_index(x, p.alice_dist.size(), "x");
    check_index(y, p.bob_dist.size(), "y");
    double s = 0.0;
    for (std::size_t i = 0; i < p.referee_accept.size(); ++i) {
        const double pa = p.alice_dist[x][i];
        if (pa == 0.0) continue;
        for (std::size_t j = 0; j < p.referee_accept[i].size(); ++j) s += pa * p.bob_dist[y][j] * p.referee_accept[i][j];
    }
    return s;
}

TwoWayResult simulate_two_way(const TwoWayQuantumProtocol &p, std::size_t x, std::size_t y) {
    p.validate();
    check_index(x, p.x_size, "x");
    check_index(y, p.y_size, "y");
    const std::size_t A = p.alice_dim, B = p.bob_dim;
    ComplexVector state(p.total_dimension());
    state[0] = 1.0;
    ComplexVector scratch;

    for (std::size_t t = 0; t < p.rounds.size(); ++t) {
        const TwoWayRound &r = p.rounds[t];
        if (r.owner == Party::kAlice) {
            // (a*2 + c) is the slow index: apply U to each Bob column.
            const ComplexMatrix &u = r.unitaries[x];
            const std::size_t d = 2 * A;
            scratch.assign(d, Complex{});
            for (std::size_t b = 0; b < B; ++b) {
                for (std::size_t i = 0; i < d; ++i) {
                    Complex acc{};
                    for (std::size_t j = 0; j < d; ++j) acc += u(i, j) * state[j * B + b];
                    scratch[i] = acc;
                }
                for (std::size_t i = 0; i < d; ++i) state[i * B + b] = scratch[i];
            }
        } else {
            // Bob's local index is b*2 + c.
            const ComplexMatrix &u = r.unitaries[y];
            const std::size_t d = 2 * B;
            scratch.assign(d, Complex{});
            for (std::size_t a = 0; a < A; ++a) {
                auto global = [&](std::size_t local) { return (a * 2 + local % 2) * B + local / 2; };
                for (std::size_t i = 0; i < d; ++i) {
                    Complex acc{};
                    for (std::size_t j = 0; j < d; ++j) acc += u(i, j) * state[global(j)];
                    scratch[i] = acc;
                }
                for (std::size_t i = 0; i < d; ++i) state[global(i)] = scratch[i];
            }
        }
        require(std::abs(norm(state) - 1.0) <= default_tolerances().unitary, ErrorCode::kNumerical,
                "two-way simulation lost normalization at round " + std::to_string(t));
    }

    TwoWayResult out;
    double p0 = 0.0;
    for (std::size_t a = 0; a < A; ++a)
        for (std::size_t b = 0; b < B; ++b) p0 += std::norm(state[(a * 2) * B + b]);
    out.state = std::move(state);
    out.p_zero = p0;
    return out;
}

double probability_zero(const Protocol &p, std::size_t x, std::size_t y) {
    return std::visit(overloaded{
                          [&](const ClassicalOneWayProtocol &q) { return eval_classical_oneway(q, x, y); },
                          [&](const QuantumOneWayProtocol &q) { return eval_quantum_oneway(q, x, y); },
                          [&](const QuantumSMPProtocol &q) { return eval_quantum_smp(q, x, y); },
                          [&](const ClassicalSMPProtocol &q) { return eval_classical_smp(q, x, y); },
                          [&](const TwoWayQuantumProtocol &q) { return simulate_two_way(q, x, y).p_zero; },
                      },
                      p);
}

ProtocolCost cost(const Protocol &p) {
    auto qubits_of = [](std::size_t N) { return qubits_for_levels(N); };
    return std::visit(
        overloaded{
            [](const ClassicalOneWayProtocol &q) { return ProtocolCost{q.message_bits, false}; },
            [](const QuantumOneWayProtocol &q) { return ProtocolCost{q.qubits, true}; },
            [&](const QuantumSMPProtocol &q) {
                return ProtocolCost{qubits_of(q.alice_states.front().N) + qubits_of(q.bob_states.front().N), true};
            },
            [](const ClassicalSMPProtocol &q) { return ProtocolCost{q.alice_bits + q.bob_bits, false}; },
            [](const TwoWayQuantumProtocol &q) { return ProtocolCost{static_cast<int>(q.num_rounds()), true}; },
        },
        p);
}

SuccessProfile success_profile(const Protocol &p, const PartialBoolFn &f) {
    std::visit([](const auto &q) { q.validate(); }, p);
    const auto [xs, ys] = input_shape(p);
    require(xs == f.x_size() && ys == f.y_size(), ErrorCode::kShapeMismatch,
            "protocol is " + std::to_string(xs) + "x" + std::to_string(ys) + " but function is " +
                std::to_string(f.x_size()) + "x" + std::to_string(f.y_size()));
    SuccessProfile prof;
    prof.cost = cost(p);
    prof.p_zero.assign(xs, RealVector(ys));
    prof.bias = INFINITY;
    prof.computes_f = true;
    for (std::size_t x = 0; x < xs; ++x)
        for (std::size_t y = 0; y < ys; ++y) {
            const double p0 = probability_zero(p, x, y);
            prof.p_zero[x][y] = p0;
            const Entry e = f.at(x, y);
            if (e == Entry::kUndefined) continue;
            prof.bias = std::min(prof.bias, std::abs(p0 - 0.5));
            const bool correct = e == Entry::kZero ? p0 > 0.5 : p0 < 0.5;
            prof.computes_f = prof.computes_f && correct;
        }
    return prof;
}

}  // namespace arrcc
