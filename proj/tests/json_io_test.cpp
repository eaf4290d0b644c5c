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

#include "arrcc/conversions.hpp"
#include "arrcc/error.hpp"
#include "arrcc/json_io.hpp"
#include "arrcc/random.hpp"
#include "oracles.hpp"

namespace arrcc {
namespace {

const PartialBoolFn kEq1 = parse_table("01\n10");

Arrangement eq1_certificate() { return Arrangement(1, {{-1.0}, {1.0}}, {{-1.0, 0.0}, {1.0, 0.0}}); }

ErrorCode code_of(const auto &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no arrcc::Error thrown";
    return ErrorCode::kNumerical;
}

// Serialize, print, parse, deserialize; P[0] must survive exactly.
void expect_round_trip(const Protocol &p, std::size_t xs, std::size_t ys) {
    const std::string text = dump_json(protocol_to_json(p));
    const Protocol back = protocol_from_json(parse_json(text));
    EXPECT_EQ(protocol_kind(back), protocol_kind(p));
    EXPECT_EQ(dump_json(protocol_to_json(back)), text);
    for (std::size_t x = 0; x < xs; ++x)
        for (std::size_t y = 0; y < ys; ++y) EXPECT_NEAR(probability_zero(back, x, y), probability_zero(p, x, y), 1e-12);
}

TEST(JsonIo, MatrixRoundTrip) {
    Rng rng(2);
    const ComplexMatrix u = rng.unitary(3);
    const ComplexMatrix back = matrix_from_json(parse_json(dump_json(matrix_to_json(u))));
    EXPECT_EQ(max_abs_diff(u, back), 0.0);
    EXPECT_EQ(code_of([] { matrix_from_json(parse_json(R"({"rows":2,"cols":2,"entries":[[1,0]]})")); }),
              ErrorCode::kInvalidInput);
}

TEST(JsonIo, FunctionAndArrangement) {
    const Json jf = function_to_json(kEq1);
    EXPECT_EQ(jf["rows"][0], "01");
    EXPECT_EQ(function_from_json(jf), kEq1);
    const Arrangement a = eq1_certificate();
    EXPECT_EQ(arrangement_from_json(parse_json(dump_json(arrangement_to_json(a)))), a);
    EXPECT_THROW(arrangement_from_json(parse_json(R"({"dim":1,"points":[[1,2]],"hyperplanes":[[1,0]]})")), Error);
    EXPECT_THROW(arrangement_from_json(parse_json(R"({"dim":1,"points":"x","hyperplanes":[[1,0]]})")), Error);
}

TEST(JsonIo, StateAndPovm) {
    const BlochState s = state_from_vector(RealVector{0.3, -0.2, 0.5}, 4);
    const BlochState back = state_from_json(state_to_json(s));
    EXPECT_LE(max_abs_diff(back.rho, s.rho), 1e-15);
    Json m = state_to_json(s);
    m.erase("r");
    EXPECT_LE(max_abs_diff(state_from_json(m).rho, s.rho), 1e-12);

    const BlochPOVM e = povm_from_vector(RealVector{0.5, 0.0, 0.0, 0.5}, 2);
    EXPECT_LE(max_abs_diff(povm_from_json(povm_to_json(e)).E, e.E), 1e-15);
    Json bad = povm_to_json(e);
    bad["e"] = Json::array({0.0, 0.0, 0.0, 1.5});
    EXPECT_THROW(povm_from_json(bad), Error);
}

TEST(JsonIo, ProtocolRoundTrips) {
    const Arrangement a = eq1_certificate();
    expect_round_trip(Protocol{arr_to_classical_oneway(a, kEq1)}, 2, 2);
    const QuantumOneWayProtocol q = arr_to_quantum_oneway(a, kEq1);
    expect_round_trip(Protocol{q}, 2, 2);
    expect_round_trip(Protocol{arr_to_quantum_smp(a, kEq1)}, 2, 2);
    expect_round_trip(Protocol{arr_to_classical_smp(a, kEq1)}, 2, 2);
    expect_round_trip(Protocol{quantum_oneway_to_two_way(q)}, 2, 2);
    expect_round_trip(Protocol{oracle::random_alternating_protocol(7, 3, 2, 3, Party::kBob)}, 2, 2);
}

TEST(JsonIo, MalformedProtocols) {
    EXPECT_EQ(code_of([] { parse_json("{not json"); }), ErrorCode::kInvalidInput);
    EXPECT_THROW(protocol_from_json(parse_json(R"({"kind":"teleport"})")), Error);
    EXPECT_THROW(protocol_from_json(parse_json(R"({"kind":"classical_oneway"})")), Error);
    EXPECT_THROW(protocol_from_json(parse_json(R"([1,2,3])")), Error);
    Json tw = protocol_to_json(Protocol{oracle::random_alternating_protocol(1, 2, 2, 2, Party::kAlice)});
    tw["rounds"][0]["owner"] = "carol";
    EXPECT_THROW(protocol_from_json(tw), Error);
}

TEST(JsonIo, Reports) {
    const CostLedger L = wucc_ledger(2, 0.25);
    const Json j = ledger_to_json(L);
    EXPECT_EQ(j["D"], 6);
    const std::string csv = ledger_csv(L);
    EXPECT_NE(csv.find("classical_oneway"), std::string::npos);
    const std::string claims = claims_csv(L.claims);
    EXPECT_NE(claims.find("construction"), std::string::npos);
}

TEST(JsonIo, AlignedCsv) {
    const std::string s = aligned_csv({"a", "long_header"}, {{"1", "2"}, {"333", "4"}});
    EXPECT_EQ(s, "a,   long_header\n1,   2\n333, 4\n");
}

TEST(JsonIo, FormatDouble) {
    EXPECT_EQ(format_double(0.25), "0.25");
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(std::stod(format_double(0.1 + 0.2)), 0.1 + 0.2);
}

}  // namespace
}  // namespace arrcc
