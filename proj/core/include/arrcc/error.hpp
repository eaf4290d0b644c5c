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

#ifndef ARRCC_ERROR_HPP
#define ARRCC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace arrcc {

enum class ErrorCode {
    kInvalidInput,    // malformed text/JSON, illegal characters, bad flags
    kShapeMismatch,
    kOutOfRange,
    kCapExceeded,
    kPrecondition,    // a documented precondition does not hold
    kNumerical,       // a certificate or identity re-check failed
    kSearchFailed,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string &what) {
    if (!cond) fail(code, what);
}

/// Numerical tolerances shared by every module. Defaults are the values the
/// acceptance suite pins; callers may pass a modified copy where an operation
/// takes one.
struct Tolerances {
    double hermitian = 1e-12;       // |M - M^dagger| entry-wise
    double jacobi_off = 1e-13;      // off-diagonal Frobenius norm at convergence
    double psd = 1e-10;             // min eigenvalue >= -psd
    double trace = 1e-12;           // |Tr(rho) - 1|
    double distribution = 1e-12;    // probability vectors sum to 1
    double unitary = 1e-10;         // |U^dagger U - I| entry-wise
    double reconstruction = 1e-9;   // branch decomposition and trace identities
    double closed_form = 1e-12;     // trace vs closed-form acceptance probability
    double magnitude = 1e-12;       // slack on "magnitude <= 1"
    double povm_slack = 1e-12;    // slack on the POVM sufficient condition
};

inline const Tolerances &default_tolerances() {
    static const Tolerances kDefaults{};
    return kDefaults;
}

}  // namespace arrcc

#endif  // ARRCC_ERROR_HPP
