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

#ifndef ARRCC_CONVERSIONS_HPP
#define ARRCC_CONVERSIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrcc/arrangement.hpp"
#include "arrcc/kremer.hpp"
#include "arrcc/protocols.hpp"
#include "arrcc/search.hpp"

namespace arrcc {

/// Smallest n with 2^n >= m (m >= 1).
int ceil_log2(std::size_t m);
/// Smallest n with 4^n >= m, i.e. ceil(log2(sqrt(m))).
int ceil_log2_sqrt(std::size_t m);

// ---------------------------------------------------------------------------
// Arrangement -> protocol compilers. Each has a closed-form companion giving
// the exact P[output 0] from the arrangement alone; tests compare the two.

/// Sampled-coordinate protocol over the folded vectors q_x = (p_x, -1),
/// g_y = (h_y, h_{N+1}^y). Alice sends (i, sign q_i) w.p. |q_i| / |q_x|_1 in
/// ceil(log(N+1)) + 1 bits; Bob outputs 0 w.p. 1/2 + sign(q_i) g_i / 2.
/// Message index is 2*i + (sign < 0). Needs magnitude <= 1 and positive margin.
ClassicalOneWayProtocol arr_to_classical_oneway(const Arrangement &a, const PartialBoolFn &f);
double classical_oneway_closed_form(const Arrangement &a, std::size_t x, std::size_t y);

/// n = ceil(log sqrt(d+1)) qubits. States carry s * p_x with a uniform shrink
/// s = 1 / ((N-1) max|p_x|); POVMs carry t * h_y and put the threshold in the
/// identity coefficient. P[0] = 1/2 + delta * evaluate(x, y).
struct QuantumOneWayDesign {
    int qubits = 0;
    std::size_t N = 0;
    double shrink = 0.0;      // s
    double povm_scale = 0.0;  // t
    double delta = 0.0;       // sqrt(2(N-1)/N) * s * t
};
QuantumOneWayDesign quantum_oneway_design(const Arrangement &a);
QuantumOneWayProtocol arr_to_quantum_oneway(const Arrangement &a, const PartialBoolFn &f);
double quantum_oneway_closed_form(const Arrangement &a, std::size_t x, std::size_t y);

/// Fingerprinting protocol: rho(q_x), rho(h_y) with per-vector normalization,
/// referee runs C-SWAP with probability alpha = 1/2 (1/2 + 1/(2N))^{-1}.
QuantumSMPProtocol arr_to_quantum_smp(const Arrangement &a, const PartialBoolFn &f);
/// The displayed probability 1/2 + (p.h - h_{d+1}) / (4N|q||h|(N-1)) * (1/2 + 1/(2N))^{-1}.
double quantum_smp_closed_form(const Arrangement &a, std::size_t x, std::size_t y);
double fingerprint_alpha(std::size_t N);

/// Both parties send sampled coordinates of the folded vectors; the referee
/// outputs 0 w.p. 1/2 + [i == j] sign_i sign_j / 2.
ClassicalSMPProtocol arr_to_classical_smp(const Arrangement &a, const PartialBoolFn &f);
double classical_smp_closed_form(const Arrangement &a, std::size_t x, std::size_t y);

/// Runs a quantum one-way protocol as an alternating shared-output two-way
/// protocol with 2n rounds: Alice prepares a purification of rho_x and ships
/// one system qubit per round, Bob stores them (returning |0>) and finally
/// measures {E, I-E} by a Naimark unitary that writes the outcome on the
/// channel.
TwoWayQuantumProtocol quantum_oneway_to_two_way(const QuantumOneWayProtocol &q);

// ---------------------------------------------------------------------------
// Reports.

/// A numeric claim: `value` compared against `bound` with `relation`
/// ("<=", ">=", "==", "in{0,1}"). Asserted rows gate exit status; the others
/// are reported only.
struct ClaimRow {
    std::string label;
    double value = 0.0;
    double bound = 0.0;
    std::string relation;
    std::string source;  // "reference" or "construction"
    bool asserted = false;
    bool pass = false;
};

ClaimRow make_claim(std::string label, double value, std::string relation, double bound, std::string source,
                    bool asserted, double tol = 0.0);

struct LedgerEntry {
    std::string model;
    std::string unit;
    int cost = 0;
    double bias = 0.0;
    int weakly_unbounded_cost = 0;  // cost + ceil(log 1/bias)
    std::string provenance;
};

struct CostLedger {
    int C_P = 0;
    double eps_P = 0.0;
    int log_inv_eps = 0;     // ceil(log 1/eps_P)
    std::size_t dimension = 0;  // 2^{2C_P-1} - 2^{C_P-1}
    std::vector<LedgerEntry> entries;
    std::vector<ClaimRow> claims;

    const LedgerEntry &entry(const std::string &model) const;
    bool all_asserted_pass() const;
};

int weakly_unbounded_cost(int cost, double bias);

/// Weakly-unbounded cost arithmetic for a C_P-qubit two-way protocol with
/// bias eps_P, following protocol -> arrangement -> {one-way, SMP} protocols.
CostLedger wucc_ledger(int C_P, double eps_P);

struct EndToEndCheck {
    CostLedger ledger;
    ExtractionReport extraction;
    int oneway_cost = 0;
    double oneway_bias = 0.0;
    std::vector<ClaimRow> claims;
    bool all_asserted_pass() const;
};

/// Extracts an arrangement from `p`, compiles it with the classical one-way
/// construction and checks the result against wucc_ledger(rounds, bias).
EndToEndCheck end_to_end_check(const TwoWayQuantumProtocol &p, const PartialBoolFn &f);

struct BoundsReport {
    std::size_t k_f = 0;
    std::size_t k_ft = 0;
    bool k_f_exact = false;
    bool k_ft_exact = false;
    std::vector<ClaimRow> rows;
    bool all_asserted_pass() const;
};

int qubit_bound_lower(std::size_t k);  // ceil(log sqrt(k + 1/8) - 1/2)
int qubit_bound_upper(std::size_t k);  // ceil(log sqrt(k + 1))

/// Evaluates the dimension formulas at certified upper bounds for f and f^t.
BoundsReport bounds_report(const DimBound &for_f, const DimBound &for_ft);

}  // namespace arrcc

#endif  // ARRCC_CONVERSIONS_HPP
