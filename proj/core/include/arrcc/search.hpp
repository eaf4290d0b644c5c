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

#ifndef ARRCC_SEARCH_HPP
#define ARRCC_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "arrcc/arrangement.hpp"
#include "arrcc/boolfn.hpp"

namespace arrcc {

struct SearchConfig {
    std::size_t dim = 1;
    int restarts = 16;
    int iters = 2000;
    double step = 2.0;
    std::uint64_t seed = 0;
    double tol = 1e-9;

    void validate() const;
};

struct SearchOutcome {
    /// Normalized certificate; present iff the search succeeded.
    std::optional<Arrangement> certificate;
    /// Margin of the certificate on success; otherwise the best (possibly
    /// negative) signed margin reached by any restart.
    double margin = 0.0;
    int best_restart = -1;

    bool success() const noexcept { return certificate.has_value(); }
};

/// Projected gradient ascent on a log-sum-exp soft minimum of the signed
/// margins, alternating point and hyperplane blocks. Temperature
/// tau_t = 0.95^floor(t/50), step eta_t = step * 0.99^t. Points and hyperplane
/// directions are kept in the unit ball, thresholds in [-1, 1].
///
/// If `warm_start` is given it seeds restart 0 (padded with zero coordinates
/// when its dimension is below cfg.dim). Deterministic given cfg.
SearchOutcome max_margin(const PartialBoolFn &f, const SearchConfig &cfg,
                         const std::optional<Arrangement> &warm_start = std::nullopt);

/// Certified upper bound on the minimum arrangement dimension k_f.
struct DimBound {
    std::size_t k_upper = 0;
    Arrangement certificate;
    double margin = 0.0;
    /// True when k_upper == 1 was decided by the exact dimension-1 oracle, or
    /// when the oracle proved k_f >= 2 and the certificate has dimension 2.
    bool exact = false;
};

/// Sweeps k = 1..max_dim (exact oracle at k = 1, optimizer above) and
/// returns the first success. Throws kSearchFailed when nothing succeeds.
DimBound min_dim_upper(const PartialBoolFn &f, std::size_t max_dim, const SearchConfig &cfg);

}  // namespace arrcc

#endif  // ARRCC_SEARCH_HPP
