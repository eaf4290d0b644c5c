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

#include "arrcc/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <utility>

#include "arrcc/error.hpp"

namespace arrcc {

namespace {

[[noreturn]] void bad(const std::string &what) { fail(ErrorCode::kInvalidInput, what); }

const Json &field(const Json &j, const char *key, const char *what) {
    if (!j.is_object()) bad(std::string(what) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string(what) + ": missing field \"" + key + "\"");
    return *it;
}

std::size_t size_field(const Json &j, const char *key, const char *what) {
    const Json &v = field(j, key, what);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        bad(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

int int_field(const Json &j, const char *key, const char *what) {
    const Json &v = field(j, key, what);
    if (!v.is_number_integer()) bad(std::string(what) + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

double as_double(const Json &v, const char *what) {
    if (!v.is_number()) bad(std::string(what) + ": expected a number");
    return v.get<double>();
}

RealVector real_vector(const Json &v, const char *what) {
    if (!v.is_array()) bad(std::string(what) + ": expected an array of numbers");
    RealVector out;
    out.reserve(v.size());
    for (const auto &e : v) out.push_back(as_double(e, what));
    return out;
}

std::vector<RealVector> real_table(const Json &v, const char *what) {
    if (!v.is_array()) bad(std::string(what) + ": expected an array of arrays");
    std::vector<RealVector> out;
    for (const auto &row : v) out.push_back(real_vector(row, what));
    return out;
}

Json real_json(const RealVector &v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

Json table_json(const std::vector<RealVector> &t) {
    Json a = Json::array();
    for (const auto &r : t) a.push_back(real_json(r));
    return a;
}


// E = e_{N^2} I + sum e_i lambda_i, certified 0 <= E <= I directly rather than
// through the sufficient coefficient condition.
BlochPOVM povm_from_coefficients(const RealVector &e, std::size_t N) {
    if (e.size() != N * N) bad("POVM: \"e\" must have N^2 entries");
    const GeneratorBasis &basis = generator_basis(qubits_for_levels(N));
    ComplexMatrix E = ComplexMatrix::identity(N) * Complex(e.back(), 0.0);
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] != 0.0) E += basis[i] * Complex(e[i], 0.0);
    return BlochPOVM{N, e, std::move(E)};
}

BlochPOVM certify_povm(BlochPOVM m) {
    const double tol = default_tolerances().psd;
    if (!is_hermitian(m.E)) bad("POVM: element is not Hermitian");
    if (!is_psd(m.E, tol) || !is_psd(ComplexMatrix::identity(m.N) - m.E, tol))
        bad("POVM: element is not between 0 and I");
    return m;
}

RealVector povm_coefficients(const ComplexMatrix &E) {
    const std::size_t N = E.rows();
    const GeneratorBasis &basis = generator_basis(qubits_for_levels(N));
    RealVector e(N * N);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) e[i] = trace_product(E, basis[i]).real() / 2.0;
    e.back() = trace(E).real() / static_cast<double>(N);
    return e;
}

std::vector<BlochState> states_from_json(const Json &v, const char *what) {
    if (!v.is_array()) bad(std::string(what) + ": expected an array of states");
    std::vector<BlochState> out;
    for (const auto &s : v) out.push_back(state_from_json(s));
    return out;
}

Json states_json(const std::vector<BlochState> &v) {
    Json a = Json::array();
    for (const auto &s : v) a.push_back(state_to_json(s));
    return a;
}

Party party_from_string(const Json &v) {
    if (v == "alice") return Party::kAlice;
    if (v == "bob") return Party::kBob;
    bad("two-way round: \"owner\" must be \"alice\" or \"bob\"");
}

std::size_t levels_of(const Json &j, const char *what) {
    const std::size_t N = size_field(j, "N", what);
    if (N != 2 && N != 4 && N != 8) bad(std::string(what) + ": N must be 2, 4 or 8");
    return N;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json e = Json::array();
    for (const Complex &c : m.entries()) e.push_back(Json::array({c.real(), c.imag()}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(e)}};
}

ComplexMatrix matrix_from_json(const Json &j) {
    const std::size_t rows = size_field(j, "rows", "matrix");
    const std::size_t cols = size_field(j, "cols", "matrix");
    const Json &e = field(j, "entries", "matrix");
    if (!e.is_array() || e.size() != rows * cols) bad("matrix: \"entries\" must hold rows*cols [re, im] pairs");
    std::vector<Complex> entries;
    entries.reserve(e.size());
    for (const auto &c : e) {
        if (!c.is_array() || c.size() != 2) bad("matrix: each entry must be an [re, im] pair");
        entries.emplace_back(as_double(c[0], "matrix entry"), as_double(c[1], "matrix entry"));
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

Json function_to_json(const PartialBoolFn &f) { return Json{{"rows", f.rows()}}; }

PartialBoolFn function_from_json(const Json &j) {
    const Json &r = field(j, "rows", "function");
    if (!r.is_array()) bad("function: \"rows\" must be an array of strings");
    std::vector<std::string> rows;
    for (const auto &s : r) {
        if (!s.is_string()) bad("function: \"rows\" must be an array of strings");
        rows.push_back(s.get<std::string>());
    }
    return from_rows(rows);
}

Json arrangement_to_json(const Arrangement &a) {
    return Json{{"dim", a.dim()}, {"points", table_json(a.points())}, {"hyperplanes", table_json(a.hyperplanes())}};
}

Arrangement arrangement_from_json(const Json &j) {
    return Arrangement(size_field(j, "dim", "arrangement"), real_table(field(j, "points", "arrangement"), "points"),
                       real_table(field(j, "hyperplanes", "arrangement"), "hyperplanes"));
}

Json state_to_json(const BlochState &s) {
    return Json{{"N", s.N}, {"r", real_json(s.bloch)}, {"matrix", matrix_to_json(s.rho)}};
}

BlochState state_from_json(const Json &j) {
    const std::size_t N = levels_of(j, "state");
    if (j.contains("r")) return state_from_coefficients(real_vector(j["r"], "state r"), N);
    const ComplexMatrix rho = matrix_from_json(field(j, "matrix", "state"));
    if (rho.rows() != N || rho.cols() != N) bad("state: matrix is not N x N");
    return state_from_coefficients(bloch_decompose(rho), N);
}

Json povm_to_json(const BlochPOVM &m) {
    return Json{{"N", m.N}, {"e", real_json(m.e)}, {"matrix", matrix_to_json(m.E)}};
}

BlochPOVM povm_from_json(const Json &j) {
    const std::size_t N = levels_of(j, "POVM");
    if (j.contains("e")) return certify_povm(povm_from_coefficients(real_vector(j["e"], "POVM e"), N));
    const ComplexMatrix E = matrix_from_json(field(j, "matrix", "POVM"));
    if (E.rows() != N || E.cols() != N) bad("POVM: matrix is not N x N");
    if (!is_hermitian(E)) bad("POVM: element is not Hermitian");
    return certify_povm(BlochPOVM{N, povm_coefficients(E), E});
}

Json protocol_to_json(const Protocol &p) {
    Json j{{"kind", std::string(protocol_kind(p))}};
    if (const auto *c = std::get_if<ClassicalOneWayProtocol>(&p)) {
        j["message_bits"] = c->message_bits;
        j["alice_dist"] = table_json(c->alice_dist);
        j["bob_accept"] = table_json(c->bob_accept);
    } else if (const auto *q = std::get_if<QuantumOneWayProtocol>(&p)) {
        j["qubits"] = q->qubits;
        j["alice_states"] = states_json(q->alice_states);
        Json povms = Json::array();
        for (const auto &m : q->bob_povms) povms.push_back(povm_to_json(m));
        j["bob_povms"] = std::move(povms);
    } else if (const auto *s = std::get_if<QuantumSMPProtocol>(&p)) {
        j["alpha"] = s->mix_alpha;
        j["alice_states"] = states_json(s->alice_states);
        j["bob_states"] = states_json(s->bob_states);
    } else if (const auto *c2 = std::get_if<ClassicalSMPProtocol>(&p)) {
        j["alice_bits"] = c2->alice_bits;
        j["bob_bits"] = c2->bob_bits;
        j["alice_dist"] = table_json(c2->alice_dist);
        j["bob_dist"] = table_json(c2->bob_dist);
        j["referee_accept"] = table_json(c2->referee_accept);
    } else {
        const auto &t = std::get<TwoWayQuantumProtocol>(p);
        j["x_size"] = t.x_size;
        j["y_size"] = t.y_size;
        j["alice_dim"] = t.alice_dim;
        j["bob_dim"] = t.bob_dim;
        Json rounds = Json::array();
        for (const auto &r : t.rounds) {
            Json us = Json::array();
            for (const auto &u : r.unitaries) us.push_back(matrix_to_json(u));
            rounds.push_back(Json{{"owner", std::string(party_name(r.owner))}, {"unitaries", std::move(us)}});
        }
        j["rounds"] = std::move(rounds);
    }
    return j;
}

Protocol protocol_from_json(const Json &j) {
    const Json &kind = field(j, "kind", "protocol");
    if (!kind.is_string()) bad("protocol: \"kind\" must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "classical_oneway") {
        ClassicalOneWayProtocol c;
        c.message_bits = int_field(j, "message_bits", "classical_oneway");
        c.alice_dist = real_table(field(j, "alice_dist", k.c_str()), "alice_dist");
        c.bob_accept = real_table(field(j, "bob_accept", k.c_str()), "bob_accept");
        c.validate();
        return c;
    }
    if (k == "quantum_oneway") {
        QuantumOneWayProtocol q;
        q.qubits = int_field(j, "qubits", "quantum_oneway");
        q.alice_states = states_from_json(field(j, "alice_states", k.c_str()), "alice_states");
        const Json &povms = field(j, "bob_povms", k.c_str());
        if (!povms.is_array()) bad("quantum_oneway: \"bob_povms\" must be an array");
        for (const auto &m : povms) q.bob_povms.push_back(povm_from_json(m));
        q.validate();
        return q;
    }
    if (k == "quantum_smp") {
        QuantumSMPProtocol s;
        s.mix_alpha = as_double(field(j, "alpha", k.c_str()), "alpha");
        s.alice_states = states_from_json(field(j, "alice_states", k.c_str()), "alice_states");
        s.bob_states = states_from_json(field(j, "bob_states", k.c_str()), "bob_states");
        s.validate();
        return s;
    }
    if (k == "classical_smp") {
        ClassicalSMPProtocol c;
        c.alice_bits = int_field(j, "alice_bits", k.c_str());
        c.bob_bits = int_field(j, "bob_bits", k.c_str());
        c.alice_dist = real_table(field(j, "alice_dist", k.c_str()), "alice_dist");
        c.bob_dist = real_table(field(j, "bob_dist", k.c_str()), "bob_dist");
        c.referee_accept = real_table(field(j, "referee_accept", k.c_str()), "referee_accept");
        c.validate();
        return c;
    }
    if (k == "two_way_quantum") {
        TwoWayQuantumProtocol t;
        t.x_size = size_field(j, "x_size", k.c_str());
        t.y_size = size_field(j, "y_size", k.c_str());
        t.alice_dim = size_field(j, "alice_dim", k.c_str());
        t.bob_dim = size_field(j, "bob_dim", k.c_str());
        const Json &rounds = field(j, "rounds", k.c_str());
        if (!rounds.is_array()) bad("two_way_quantum: \"rounds\" must be an array");
        for (const auto &r : rounds) {
            TwoWayRound round;
            round.owner = party_from_string(field(r, "owner", "round"));
            const Json &us = field(r, "unitaries", "round");
            if (!us.is_array()) bad("round: \"unitaries\" must be an array");
            for (const auto &u : us) round.unitaries.push_back(matrix_from_json(u));
            t.rounds.push_back(std::move(round));
        }
        t.validate();
        return t;
    }
    bad("protocol: unknown kind \"" + k + "\"");
}

Json extraction_report_to_json(const ExtractionReport &r) {
    return Json{{"dimension", r.dimension},
                {"margin_raw", r.margin_raw},
                {"margin_normalized", r.margin_normalized},
                {"magnitude_raw", r.magnitude_raw},
                {"magnitude_violation", r.magnitude_violation},
                {"max_trace_identity_error", r.max_trace_identity_error},
                {"protocol_bias", r.protocol_bias}};
}

Json dim_bound_to_json(const DimBound &b) {
    return Json{{"k_upper", b.k_upper},
                {"exact", b.exact},
                {"margin", b.margin},
                {"certificate", arrangement_to_json(b.certificate)}};
}

Json claim_to_json(const ClaimRow &r) {
    return Json{{"label", r.label},   {"value", r.value},       {"relation", r.relation}, {"bound", r.bound},
                {"source", r.source}, {"asserted", r.asserted}, {"pass", r.pass}};
}

Json claims_to_json(const std::vector<ClaimRow> &rows) {
    Json a = Json::array();
    for (const auto &r : rows) a.push_back(claim_to_json(r));
    return a;
}

Json ledger_to_json(const CostLedger &l) {
    Json entries = Json::array();
    for (const auto &e : l.entries)
        entries.push_back(Json{{"model", e.model},
                               {"unit", e.unit},
                               {"cost", e.cost},
                               {"bias", e.bias},
                               {"weakly_unbounded_cost", e.weakly_unbounded_cost},
                               {"provenance", e.provenance}});
    return Json{{"C_P", l.C_P},
                {"eps_P", l.eps_P},
                {"log_inv_eps", l.log_inv_eps},
                {"D", l.dimension},
                {"entries", std::move(entries)},
                {"claims", claims_to_json(l.claims)},
                {"pass", l.all_asserted_pass()}};
}

Json bounds_to_json(const BoundsReport &r) {
    return Json{{"k_f", r.k_f},
                {"k_ft", r.k_ft},
                {"k_f_exact", r.k_f_exact},
                {"k_ft_exact", r.k_ft_exact},
                {"rows", claims_to_json(r.rows)},
                {"pass", r.all_asserted_pass()}};
}

Json end_to_end_to_json(const EndToEndCheck &e) {
    return Json{{"ledger", ledger_to_json(e.ledger)},
                {"extraction", extraction_report_to_json(e.extraction)},
                {"oneway_cost", e.oneway_cost},
                {"oneway_bias", e.oneway_bias},
                {"claims", claims_to_json(e.claims)},
                {"pass", e.all_asserted_pass()}};
}

Json success_profile_to_json(const SuccessProfile &p) {
    return Json{{"cost", p.cost.amount},
                {"unit", p.cost.unit()},
                {"bias", p.bias},
                {"computes_f", p.computes_f},
                {"p_zero", table_json(p.p_zero)}};
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

std::string aligned_csv(const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto &r : rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream out;
    const auto line = [&](const std::vector<std::string> &r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            out << r[c];
            if (c + 1 < r.size()) out << ',' << std::string(width[c] - r[c].size() + 1, ' ');
        }
        out << '\n';
    };
    line(header);
    for (const auto &r : rows) line(r);
    return out.str();
}

namespace {

// Labels can contain commas; CSV-quote them.
std::string csv_cell(const std::string &s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

std::string claims_csv(const std::vector<ClaimRow> &rows) {
    std::vector<std::vector<std::string>> t;
    for (const auto &r : rows)
        t.push_back({csv_cell(r.label), format_double(r.value), r.relation, format_double(r.bound), r.source,
                     r.asserted ? "yes" : "no", r.pass ? "pass" : "FAIL"});
    return aligned_csv({"claim", "value", "relation", "bound", "source", "asserted", "pass"}, t);
}

std::string ledger_csv(const CostLedger &l) {
    std::vector<std::vector<std::string>> t;
    for (const auto &e : l.entries)
        t.push_back({e.model, std::to_string(e.cost), e.unit, format_double(e.bias),
                     std::to_string(e.weakly_unbounded_cost), csv_cell(e.provenance)});
    std::string out = "# C_P=" + std::to_string(l.C_P) + " eps_P=" + format_double(l.eps_P) +
                      " D=" + std::to_string(l.dimension) + "\n";
    out += aligned_csv({"model", "cost", "unit", "bias", "weakly_unbounded_cost", "provenance"}, t);
    out += claims_csv(l.claims);
    return out;
}

}  // namespace arrcc
