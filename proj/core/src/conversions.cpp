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

#include "arrcc/conversions.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "arrcc/bloch.hpp"
#include "arrcc/error.hpp"

namespace arrcc {

int ceil_log2(std::size_t m) {
    require(m >= 1, ErrorCode::kInvalidInput, "ceil_log2 needs m >= 1");
    int n = 0;
    while ((std::size_t{1} << n) < m) ++n;
    return n;
}

int ceil_log2_sqrt(std::size_t m) {
    require(m >= 1, ErrorCode::kInvalidInput, "ceil_log2_sqrt needs m >= 1");
    int n = 0;
    while ((std::size_t{1} << (2 * n)) < m) ++n;
    return n;
}

namespace {

double l1(const RealVector &v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

double l2(const RealVector &v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

RealVector folded_point(const Arrangement &a, std::size_t x) {
    RealVector q = a.point(x);
    q.push_back(-1.0);
    return q;
}

// (h_1..h_k, h_{k+1}); evaluate(x, y) = <folded_point, full_hyperplane>.
const RealVector &full_hyperplane(const Arrangement &a, std::size_t y) { return a.hyperplane(y); }

double realizing_margin(const Arrangement &a, const PartialBoolFn &f, const char *what) {
    const RealizeVerdict v = realizes(a, f);
    require(v.realizes && v.margin > 0.0, ErrorCode::kPrecondition,
            std::string(what) + ": arrangement does not realize the function with positive margin");
    return v.margin;
}

void require_magnitude_one(const Arrangement &a, const char *what) {
    const double m = magnitude(a);
    require(m <= 1.0 + default_tolerances().magnitude, ErrorCode::kPrecondition,
            std::string(what) + ": arrangement magnitude " + std::to_string(m) + " exceeds 1 (normalize first)");
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Sampled-coordinate message distribution: index 2*i + (v_i < 0) w.p. |v_i| / |v|_1.
// A zero vector splits evenly between (0, +) and (0, -) so every sign product cancels.
RealVector coordinate_distribution(const RealVector &v) {
    RealVector d(2 * v.size(), 0.0);
    const double n1 = l1(v);
    if (n1 == 0.0) {
        d[0] = d[1] = 0.5;
        return d;
    }
    for (std::size_t i = 0; i < v.size(); ++i) d[2 * i + (v[i] < 0.0 ? 1 : 0)] = std::abs(v[i]) / n1;
    return d;
}

double message_sign(std::size_t m) { return (m & 1U) ? -1.0 : 1.0; }

}  // namespace

// ---------------------------------------------------------------------------

ClassicalOneWayProtocol arr_to_classical_oneway(const Arrangement &a, const PartialBoolFn &f) {
    realizing_margin(a, f, "classical one-way");
    require_magnitude_one(a, "classical one-way");
    const std::size_t coords = a.dim() + 1;
    ClassicalOneWayProtocol p;
    p.message_bits = ceil_log2(coords) + 1;
    for (std::size_t x = 0; x < a.num_points(); ++x) p.alice_dist.push_back(coordinate_distribution(folded_point(a, x)));
    p.bob_accept.assign(2 * coords, RealVector(a.num_hyperplanes()));
    for (std::size_t m = 0; m < 2 * coords; ++m)
        for (std::size_t y = 0; y < a.num_hyperplanes(); ++y)
            p.bob_accept[m][y] = clamp01(0.5 + message_sign(m) * full_hyperplane(a, y)[m / 2] / 2.0);
    p.validate();
    return p;
}

double classical_oneway_closed_form(const Arrangement &a, std::size_t x, std::size_t y) {
    return 0.5 + evaluate(a, x, y) / (2.0 * l1(folded_point(a, x)));
}

QuantumOneWayDesign quantum_oneway_design(const Arrangement &a) {
    QuantumOneWayDesign d;
    d.qubits = ceil_log2_sqrt(a.dim() + 1);
    require(d.qubits <= kMaxQubits, ErrorCode::kCapExceeded,
            "quantum one-way: dimension " + std::to_string(a.dim()) + " needs more than 3 qubits");
    d.N = std::size_t{1} << d.qubits;
    double max_norm = 0.0;
    for (const auto &p : a.points()) max_norm = std::max(max_norm, l2(p));
    if (max_norm == 0.0) max_norm = 1.0;
    const double K = closed_form_scale(d.N);
    d.shrink = 1.0 / (static_cast<double>(d.N - 1) * max_norm);
    // Largest t meeting the POVM condition for every |h| <= 1, |h_{d+1}| <= 1.
    d.povm_scale = 1.0 / (2.0 * K * (1.0 + d.shrink));
    d.delta = K * d.shrink * d.povm_scale;
    return d;
}

QuantumOneWayProtocol arr_to_quantum_oneway(const Arrangement &a, const PartialBoolFn &f) {
    realizing_margin(a, f, "quantum one-way");
    require_magnitude_one(a, "quantum one-way");
    const QuantumOneWayDesign d = quantum_oneway_design(a);
    const std::size_t N = d.N;
    const double K = closed_form_scale(N);

    double max_norm = 0.0;
    for (const auto &p : a.points()) max_norm = std::max(max_norm, l2(p));

    QuantumOneWayProtocol q;
    q.qubits = d.qubits;
    for (const auto &p : a.points()) {
        const double r = l2(p);
        q.alice_states.push_back(r == 0.0 ? maximally_mixed(N) : shrink_state(p, r / max_norm, N));
    }
    for (std::size_t y = 0; y < a.num_hyperplanes(); ++y) {
        const RealVector &h = a.hyperplane(y);
        RealVector e(N * N, 0.0);
        for (std::size_t i = 0; i < a.dim(); ++i) e[i] = d.povm_scale * h[i];
        e[N * N - 1] = 0.5 - K * d.shrink * d.povm_scale * h[a.dim()];
        q.bob_povms.push_back(povm_from_vector(e, N));
    }
    q.validate();
    return q;
}

double quantum_oneway_closed_form(const Arrangement &a, std::size_t x, std::size_t y) {
    return 0.5 + quantum_oneway_design(a).delta * evaluate(a, x, y);
}

double fingerprint_alpha(std::size_t N) {
    const double n = static_cast<double>(N);
    return 0.5 / (0.5 + 1.0 / (2.0 * n));
}

namespace {

int smp_qubits(const Arrangement &a) {
    const int n = ceil_log2_sqrt(a.dim() + 2);
    require(n <= kMaxQubits, ErrorCode::kCapExceeded,
            "quantum SMP: dimension " + std::to_string(a.dim()) + " needs more than 3 qubits");
    return n;
}

}  // namespace

QuantumSMPProtocol arr_to_quantum_smp(const Arrangement &a, const PartialBoolFn &f) {
    realizing_margin(a, f, "quantum SMP");
    const std::size_t N = std::size_t{1} << smp_qubits(a);
    QuantumSMPProtocol q;
    q.mix_alpha = fingerprint_alpha(N);
    for (std::size_t x = 0; x < a.num_points(); ++x) q.alice_states.push_back(state_from_vector(folded_point(a, x), N));
    for (std::size_t y = 0; y < a.num_hyperplanes(); ++y) {
        const RealVector &h = full_hyperplane(a, y);
        q.bob_states.push_back(l2(h) == 0.0 ? maximally_mixed(N) : state_from_vector(h, N));
    }
    q.validate();
    return q;
}

double quantum_smp_closed_form(const Arrangement &a, std::size_t x, std::size_t y) {
    const double N = static_cast<double>(std::size_t{1} << smp_qubits(a));
    const double hq = l2(folded_point(a, x));
    const double hh = l2(full_hyperplane(a, y));
    if (hh == 0.0) return 0.5;
    return 0.5 + evaluate(a, x, y) / (4.0 * N * hq * hh * (N - 1.0)) / (0.5 + 1.0 / (2.0 * N));
}

ClassicalSMPProtocol arr_to_classical_smp(const Arrangement &a, const PartialBoolFn &f) {
    realizing_margin(a, f, "classical SMP");
    require_magnitude_one(a, "classical SMP");
    const std::size_t coords = a.dim() + 1;
    ClassicalSMPProtocol p;
    p.alice_bits = p.bob_bits = ceil_log2(coords) + 1;
    for (std::size_t x = 0; x < a.num_points(); ++x) p.alice_dist.push_back(coordinate_distribution(folded_point(a, x)));
    for (std::size_t y = 0; y < a.num_hyperplanes(); ++y)
        p.bob_dist.push_back(coordinate_distribution(full_hyperplane(a, y)));
    p.referee_accept.assign(2 * coords, RealVector(2 * coords, 0.5));
    for (std::size_t i = 0; i < coords; ++i)
        for (std::size_t si = 0; si < 2; ++si)
            for (std::size_t sj = 0; sj < 2; ++sj)
                p.referee_accept[2 * i + si][2 * i + sj] = si == sj ? 1.0 : 0.0;
    p.validate();
    return p;
}

double classical_smp_closed_form(const Arrangement &a, std::size_t x, std::size_t y) {
    const double g1 = l1(full_hyperplane(a, y));
    if (g1 == 0.0) return 0.5;
    return 0.5 + evaluate(a, x, y) / (2.0 * l1(folded_point(a, x)) * g1);
}

// ---------------------------------------------------------------------------

namespace {

// Permutation on (private (x) channel) swapping channel bit 0 with bit `bit`.
ComplexMatrix swap_with_channel(std::size_t dim, std::size_t bit) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t c = i & 1U;
        const std::size_t b = (i >> bit) & 1U;
        std::size_t j = i & ~(std::size_t{1} | (std::size_t{1} << bit));
        j |= b | (c << bit);
        m(j, i) = 1.0;
    }
    return m;
}

// Purification sum_k sqrt(l_k) |k>_ref |v_k>_sys, index ref * N + sys.
ComplexVector purification(const ComplexMatrix &rho) {
    const std::size_t N = rho.rows();
    const HermitianEigen eig = hermitian_eigen(rho);
    ComplexVector psi(N * N);
    for (std::size_t k = 0; k < N; ++k) {
        const double w = std::sqrt(std::max(eig.values[k], 0.0));
        for (std::size_t s = 0; s < N; ++s) psi[k * N + s] = w * eig.vectors(s, k);
    }
    const double nrm = norm(psi);
    for (auto &v : psi) v /= nrm;
    return psi;
}

// psi (x) |0>_C -> sqrt(E) psi (x) |0>_C + sqrt(I-E) psi (x) |1>_C on index b * 2 + c.
ComplexMatrix naimark(const ComplexMatrix &E) {
    const std::size_t N = E.rows();
    const auto root = [](double v) { return std::sqrt(std::max(v, 0.0)); };
    const ComplexMatrix se = hermitian_function(E, root);
    const ComplexMatrix sf = hermitian_function(ComplexMatrix::identity(N) - E, root);
    std::vector<ComplexVector> cols;
    for (std::size_t b = 0; b < N; ++b) {
        ComplexVector c(2 * N);
        for (std::size_t r = 0; r < N; ++r) {
            c[2 * r] = se(r, b);
            c[2 * r + 1] = sf(r, b);
        }
        cols.push_back(std::move(c));
    }
    const ComplexMatrix u = complete_unitary(cols, 2 * N);
    ComplexMatrix v(2 * N, 2 * N);
    for (std::size_t b = 0; b < N; ++b)
        for (std::size_t r = 0; r < 2 * N; ++r) {
            v(r, 2 * b) = u(r, b);
            v(r, 2 * b + 1) = u(r, N + b);
        }
    return v;
}

}  // namespace

TwoWayQuantumProtocol quantum_oneway_to_two_way(const QuantumOneWayProtocol &q) {
    q.validate();
    const std::size_t n = static_cast<std::size_t>(q.qubits);
    const std::size_t N = std::size_t{1} << n;
    TwoWayQuantumProtocol p;
    p.x_size = q.alice_states.size();
    p.y_size = q.bob_povms.size();
    p.alice_dim = N * N;  // ref (x) sys
    p.bob_dim = N;
    const std::size_t da = 2 * p.alice_dim, db = 2 * p.bob_dim;
    // Qubit slot t (1-based, most significant first) of an n-qubit register
    // sits at bit n - t of the private index, bit n - t + 1 of the round index.
    const auto slot_bit = [n](std::size_t t) { return n - t + 1; };

    for (std::size_t t = 1; t <= n; ++t) {
        TwoWayRound ra{Party::kAlice, {}};
        const ComplexMatrix sw_a = swap_with_channel(da, slot_bit(t));
        for (std::size_t x = 0; x < p.x_size; ++x) {
            if (t == 1) {
                const ComplexMatrix prep = complete_unitary({purification(q.alice_states[x].rho)}, p.alice_dim);
                ra.unitaries.push_back(sw_a * tensor(prep, ComplexMatrix::identity(2)));
            } else {
                ra.unitaries.push_back(sw_a);
            }
        }
        p.rounds.push_back(std::move(ra));

        TwoWayRound rb{Party::kBob, {}};
        const ComplexMatrix sw_b = swap_with_channel(db, slot_bit(t));
        for (std::size_t y = 0; y < p.y_size; ++y)
            rb.unitaries.push_back(t == n ? naimark(q.bob_povms[y].E) * sw_b : sw_b);
        p.rounds.push_back(std::move(rb));
    }
    p.validate();
    return p;
}

// ---------------------------------------------------------------------------

ClaimRow make_claim(std::string label, double value, std::string relation, double bound, std::string source,
                    bool asserted, double tol) {
    ClaimRow r;
    r.label = std::move(label);
    r.value = value;
    r.bound = bound;
    r.relation = std::move(relation);
    r.source = std::move(source);
    r.asserted = asserted;
    if (r.relation == "<=")
        r.pass = value <= bound + tol;
    else if (r.relation == ">=")
        r.pass = value >= bound - tol;
    else if (r.relation == "==")
        r.pass = std::abs(value - bound) <= tol;
    else if (r.relation == "in{0,1}")
        r.pass = value == 0.0 || value == 1.0;
    else if (r.relation == "info")
        r.pass = true;
    else
        fail(ErrorCode::kInvalidInput, "unknown claim relation '" + r.relation + "'");
    return r;
}

namespace {

bool all_pass(const std::vector<ClaimRow> &rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ClaimRow &r) { return !r.asserted || r.pass; });
}

// ceil(log2(1/b)); the guard keeps exact powers of two exact.
int ceil_log_inverse(double b) {
    require(b > 0.0 && std::isfinite(b), ErrorCode::kInvalidInput, "bias must be positive");
    return static_cast<int>(std::ceil(std::log2(1.0 / b) - 1e-12));
}

}  // namespace

const LedgerEntry &CostLedger::entry(const std::string &model) const {
    for (const auto &e : entries)
        if (e.model == model) return e;
    fail(ErrorCode::kInvalidInput, "no ledger entry '" + model + "'");
}

bool CostLedger::all_asserted_pass() const { return all_pass(claims); }
bool EndToEndCheck::all_asserted_pass() const { return all_pass(claims) && ledger.all_asserted_pass(); }
bool BoundsReport::all_asserted_pass() const { return all_pass(rows); }

int weakly_unbounded_cost(int cost, double bias) { return cost + ceil_log_inverse(bias); }

CostLedger wucc_ledger(int C_P, double eps_P) {
    require(eps_P > 0.0 && eps_P <= 0.5, ErrorCode::kInvalidInput, "eps_P must lie in (0, 1/2]");
    require(C_P >= 1 && static_cast<std::size_t>(C_P) <= kMaxTranscriptRounds, ErrorCode::kOutOfRange,
            "C_P must be in 1..8");
    CostLedger L;
    L.C_P = C_P;
    L.eps_P = eps_P;
    L.log_inv_eps = ceil_log_inverse(eps_P);
    L.dimension = extracted_dimension(static_cast<std::size_t>(C_P));
    const std::size_t D = L.dimension;
    const double Dd = static_cast<double>(D);
    const auto add = [&](std::string model, std::string unit, int cost, double bias, std::string prov) {
        L.entries.push_back(LedgerEntry{std::move(model), std::move(unit), cost, bias, weakly_unbounded_cost(cost, bias),
                                        std::move(prov)});
    };

    add("two_way_quantum", "qubits", C_P, eps_P, "input protocol");

    const int c1 = ceil_log2(D + 1) + 1;
    const std::string arr = "two-way -> arrangement(D=" + std::to_string(D) + ", margin eps_P) -> ";
    add("classical_oneway_reference", "bits", c1,
        eps_P / (2.0 * std::sqrt(std::ldexp(1.0, 2 * C_P - 1))),
        arr + "sampled-coordinate one-way; bias eps_P/(2 sqrt(2^{2C_P-1}))");
    add("classical_oneway", "bits", c1, eps_P / (2.0 * (std::sqrt(Dd) + 1.0)),
        arr + "sampled-coordinate one-way; bias eps_P/(2(sqrt D + 1))");

    const int n1 = ceil_log2_sqrt(D + 1);
    const double alpha = (std::sqrt(2.0) - 1.0) / std::pow(2.0, n1 + 0.5);
    add("quantum_oneway_reference", "qubits", n1, alpha * eps_P,
        arr + "Bloch one-way; bias (sqrt2-1)/2^{n+1/2} eps_P");
    add("quantum_oneway", "qubits", n1, eps_P / std::ldexp(1.0, n1 + 1), arr + "Bloch one-way; bias eps_P/2^{n+1}");

    const int n2 = ceil_log2_sqrt(D + 2);
    const double N2 = std::ldexp(1.0, n2);
    add("quantum_smp", "qubits", 2 * n2, eps_P / (4.0 * (N2 * N2 - 1.0)),
        arr + "fingerprinting SMP; bias eps_P/(4(N^2-1)) at |q|,|h| <= sqrt2");
    add("classical_smp", "bits", 2 * c1, eps_P / (2.0 * (std::sqrt(Dd) + 1.0) * std::sqrt(2.0 * (Dd + 1.0))),
        arr + "sampled-coordinate SMP; bias eps_P/(2(sqrt D + 1) sqrt(2(D+1)))");

    const double base = C_P + L.log_inv_eps;
    L.claims.push_back(make_claim("classical one-way cost == 2 C_P", c1, "==", 2.0 * C_P, "reference", true));
    L.claims.push_back(make_claim("quantum one-way qubits <= C_P", n1, "<=", C_P, "reference", true));
    L.claims.push_back(make_claim("C1_w (reference constant) <= 3(C_P + L) + 4",
                                  L.entry("classical_oneway_reference").weakly_unbounded_cost, "<=", 3.0 * base + 4.0,
                                  "reference", true));
    L.claims.push_back(make_claim("C1_w (construction) <= 3(C_P + L) + 4",
                                  L.entry("classical_oneway").weakly_unbounded_cost, "<=", 3.0 * base + 4.0,
                                  "construction", true));
    L.claims.push_back(make_claim("Q1_w (reference constant) <= 2(C_P + L) + 4",
                                  L.entry("quantum_oneway_reference").weakly_unbounded_cost, "<=", 2.0 * base + 4.0,
                                  "reference", true));
    L.claims.push_back(make_claim("Q1_w (construction) <= 2(C_P + L) + 4",
                                  L.entry("quantum_oneway").weakly_unbounded_cost, "<=", 2.0 * base + 4.0,
                                  "construction", true));
    L.claims.push_back(make_claim("Q||_w - 4(C_P + L) (additive term)",
                                  L.entry("quantum_smp").weakly_unbounded_cost - 4.0 * base, "info", 0.0, "reference",
                                  false));
    L.claims.push_back(make_claim("C||_w - 9(C_P + L) (additive term)",
                                  L.entry("classical_smp").weakly_unbounded_cost - 9.0 * base, "info", 0.0, "reference",
                                  false));
    return L;
}

EndToEndCheck end_to_end_check(const TwoWayQuantumProtocol &p, const PartialBoolFn &f) {
    const Extraction ex = extract_arrangement(p, f);
    const int C_P = static_cast<int>(p.num_rounds());
    const double eps = ex.report.protocol_bias;

    EndToEndCheck e;
    e.ledger = wucc_ledger(C_P, eps);
    e.extraction = ex.report;
    const double tol = default_tolerances().reconstruction;

    e.claims.push_back(make_claim("extracted dimension == 2^{2C_P-1} - 2^{C_P-1}",
                                  static_cast<double>(ex.report.dimension), "==",
                                  static_cast<double>(e.ledger.dimension), "reference", true));
    e.claims.push_back(make_claim("extracted margin == eps_P", ex.report.margin_raw, "==", eps, "reference", true, tol));
    e.claims.push_back(make_claim("extracted magnitude <= 1", ex.report.magnitude_raw, "<=", 1.0, "reference", false,
                                  default_tolerances().magnitude));

    // The raw arrangement already has magnitude <= 1 in the usual case; only
    // fall back to the rescaled one when it does not.
    const Arrangement &arr = ex.report.magnitude_violation ? ex.normalized : ex.raw;
    const double mu = ex.report.magnitude_violation ? ex.report.margin_normalized : ex.report.margin_raw;
    const ClassicalOneWayProtocol c = arr_to_classical_oneway(arr, f);
    const SuccessProfile prof = success_profile(Protocol{c}, f);
    e.oneway_cost = c.message_bits;
    e.oneway_bias = prof.bias;
    const LedgerEntry &led = e.ledger.entry("classical_oneway");
    const double D = static_cast<double>(ex.report.dimension);

    e.claims.push_back(make_claim("one-way protocol computes f", prof.computes_f ? 1.0 : 0.0, "==", 1.0,
                                  "construction", true));
    e.claims.push_back(make_claim("one-way cost == ledger cost", c.message_bits, "==", led.cost, "construction", true));
    e.claims.push_back(make_claim("one-way cost == 2 C_P", c.message_bits, "==", 2.0 * C_P, "reference", true));
    e.claims.push_back(make_claim("bias bound at extracted margin == ledger bias", mu / (2.0 * (std::sqrt(D) + 1.0)),
                                  "==", led.bias, "construction", !ex.report.magnitude_violation, tol));
    e.claims.push_back(make_claim("one-way bias >= ledger bias", prof.bias, ">=", led.bias, "construction",
                                  !ex.report.magnitude_violation, tol));
    e.claims.push_back(make_claim("one-way bias >= reference ledger bias", prof.bias, ">=",
                                  e.ledger.entry("classical_oneway_reference").bias, "reference", false, tol));
    return e;
}

// ---------------------------------------------------------------------------

int qubit_bound_lower(std::size_t k) {
    // ceil(log sqrt(k + 1/8) - 1/2) = ceil(log sqrt(8k + 1)) - 2 since 8k + 1 is
    // never a power of four.
    return ceil_log2_sqrt(8 * k + 1) - 2;
}

int qubit_bound_upper(std::size_t k) { return ceil_log2_sqrt(k + 1); }

BoundsReport bounds_report(const DimBound &for_f, const DimBound &for_ft) {
    BoundsReport r;
    r.k_f = for_f.k_upper;
    r.k_ft = for_ft.k_upper;
    r.k_f_exact = for_f.exact;
    r.k_ft_exact = for_ft.exact;
    const std::size_t ka = r.k_f, kb = r.k_ft, ks = std::min(ka, kb);
    const auto row = [&](std::string label, double v, std::string rel, double b, bool asserted) {
        r.rows.push_back(make_claim(std::move(label), v, std::move(rel), b, "reference", asserted));
    };

    row("k_f (certified upper bound)", ka, "info", 0, false);
    row("k_{f^t} (certified upper bound)", kb, "info", 0, false);
    row("Q1(f) = ceil(log sqrt(k_f+1)) [upper-bound evaluation]", ceil_log2_sqrt(ka + 1), "info", 0, false);
    row("C1(f) = ceil(log(k_f+1)) [upper-bound evaluation]", ceil_log2(ka + 1), "info", 0, false);
    row("Q1(f^t) = ceil(log sqrt(k_{f^t}+1)) [upper-bound evaluation]", ceil_log2_sqrt(kb + 1), "info", 0, false);
    row("C1(f^t) = ceil(log(k_{f^t}+1)) [upper-bound evaluation]", ceil_log2(kb + 1), "info", 0, false);

    row("Q(f) lower ceil(log sqrt(k_f+1/8) - 1/2) [reference only]", qubit_bound_lower(ka), "info", 0, false);
    row("Q(f) upper ceil(log sqrt(k*+1)) [upper-bound evaluation]", qubit_bound_upper(ks), "info", 0, false);
    row("Q(f) upper - lower at k_f", qubit_bound_upper(ka) - qubit_bound_lower(ka), "in{0,1}", 0, true);
    int worst = 0, least = 1;
    for (std::size_t k = 1; k <= 64; ++k) {
        const int diff = qubit_bound_upper(k) - qubit_bound_lower(k);
        worst = std::max(worst, diff);
        least = std::min(least, diff);
    }
    row("Q(f) upper - lower, max over k = 1..64", worst, "<=", 1, true);
    row("Q(f) upper - lower, min over k = 1..64", least, ">=", 0, true);

    const int q2_lower = ceil_log2_sqrt(ka + 1) + ceil_log2_sqrt(kb + 1);
    const int q2_upper = 2 * ceil_log2_sqrt(ks + 2);
    row("Q||(f) lower Q1(f) + Q1(f^t) [reference only]", q2_lower, "info", 0, false);
    row("Q||(f) upper 2 ceil(log sqrt(k*+2)) [upper-bound evaluation]", q2_upper, "info", 0, false);
    row("Q||(f) upper - lower", q2_upper - q2_lower, "<=", 2, true);

    const int c2_lower = ceil_log2(ka + 1) + ceil_log2(kb + 1);
    const int c2_upper = ceil_log2(ks + 1) + ceil_log2(ks + 2);
    row("C||(f) lower C1(f) + C1(f^t) [reference only]", c2_lower, "info", 0, false);
    row("C||(f) upper ceil(log(k*+1)) + ceil(log(k*+2)) [upper-bound evaluation]", c2_upper, "info", 0, false);
    row("C||(f) upper - lower", c2_upper - c2_lower, "<=", 1, true);

    const double gap = std::abs(static_cast<double>(ka) - static_cast<double>(kb));
    row("|k_f - k_{f^t}| (both exact)", gap, "<=", 1, r.k_f_exact && r.k_ft_exact);
    return r;
}

}  // namespace arrcc
