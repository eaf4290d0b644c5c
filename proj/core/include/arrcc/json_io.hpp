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

#ifndef ARRCC_JSON_IO_HPP
#define ARRCC_JSON_IO_HPP

#include <string>
#include <vector>

#include "arrcc/arrangement.hpp"
#include "arrcc/bloch.hpp"
#include "arrcc/boolfn.hpp"
#include "arrcc/conversions.hpp"
#include "arrcc/kremer.hpp"
#include "arrcc/numkernel.hpp"
#include "arrcc/protocols.hpp"
#include "arrcc/search.hpp"
#include "json.hpp"

// JSON (de)serialization for every IR. Parsers throw arrcc::Error with
// kInvalidInput on malformed documents, and re-run the usual validation.

namespace arrcc {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix &m);  // {"rows", "cols", "entries": [[re, im], ...]} row-major
ComplexMatrix matrix_from_json(const Json &j);

Json function_to_json(const PartialBoolFn &f);  // {"rows": ["01", "10"]}
PartialBoolFn function_from_json(const Json &j);

Json arrangement_to_json(const Arrangement &a);  // {"dim", "points", "hyperplanes"}
Arrangement arrangement_from_json(const Json &j);

Json state_to_json(const BlochState &s);  // {"N", "r", "matrix"}
/// Uses "r" when present, otherwise decomposes "matrix".
BlochState state_from_json(const Json &j);
Json povm_to_json(const BlochPOVM &m);  // {"N", "e", "matrix"}
BlochPOVM povm_from_json(const Json &j);

Json protocol_to_json(const Protocol &p);  // carries "kind"
Protocol protocol_from_json(const Json &j);

Json extraction_report_to_json(const ExtractionReport &r);
Json dim_bound_to_json(const DimBound &b);
Json claim_to_json(const ClaimRow &r);
Json claims_to_json(const std::vector<ClaimRow> &rows);
Json ledger_to_json(const CostLedger &l);
Json bounds_to_json(const BoundsReport &r);
Json end_to_end_to_json(const EndToEndCheck &e);
Json success_profile_to_json(const SuccessProfile &p);

/// Parses a JSON document, mapping syntax errors to kInvalidInput.
Json parse_json(const std::string &text);
/// Two-space indentation and a trailing newline.
std::string dump_json(const Json &j);

/// Comma-separated table with every column padded to a common width.
std::string aligned_csv(const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows);
std::string claims_csv(const std::vector<ClaimRow> &rows);
std::string ledger_csv(const CostLedger &l);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace arrcc

#endif  // ARRCC_JSON_IO_HPP
