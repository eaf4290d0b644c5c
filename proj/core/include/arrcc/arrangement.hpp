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

#ifndef ARRCC_ARRANGEMENT_HPP
#define ARRCC_ARRANGEMENT_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "arrcc/boolfn.hpp"
#include "arrcc/numkernel.hpp"

namespace arrcc {

/// Points p_x in R^k (one per Alice input) and hyperplanes (h_1..h_k, h_{k+1})
/// in R^{k+1} (one per Bob input). The last hyperplane coordinate is the
/// threshold: point p lies on the positive side of h when p.h - h_{k+1} > 0.
class Arrangement {
   public:
    Arrangement(std::size_t dim, std::vector<RealVector> points, std::vector<RealVector> hyperplanes);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t num_points() const noexcept { return points_.size(); }
    std::size_t num_hyperplanes() const noexcept { return hyperplanes_.size(); }
    const std::vector<RealVector> &points() const noexcept { return points_; }
    const std::vector<RealVector> &hyperplanes() const noexcept { return hyperplanes_; }
    const RealVector &point(std::size_t x) const { return points_.at(x); }
    const RealVector &hyperplane(std::size_t y) const { return hyperplanes_.at(y); }
    double threshold(std::size_t y) const { return hyperplanes_.at(y)[dim_]; }

    friend bool operator==(const Arrangement &, const Arrangement &) = default;

   private:
    std::size_t dim_;
    std::vector<RealVector> points_;
    std::vector<RealVector> hyperplanes_;
};

/// sum_i p_i^x h_i^y - h_{k+1}^y.
double evaluate(const Arrangement &a, std::size_t x, std::size_t y);

/// max over x, y of (|p_x|_2, |(h_1..h_k)^y|_2, |h_{k+1}^y|).
double magnitude(const Arrangement &a);

struct RealizeVerdict {
    bool realizes = false;
    double margin = 0.0;     // min |evaluate| over defined pairs (yes only)
    double magnitude = 0.0;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // first failing pair (no only)

    explicit operator bool() const noexcept { return realizes; }
};

/// Checks sign(evaluate(x,y)) == target_sign(f(x,y)) with |evaluate| > tol
/// on every defined pair. Undefined entries are skipped.
RealizeVerdict realizes(const Arrangement &a, const PartialBoolFn &f, double tol = 0.0);

/// Scales all points (and every threshold) by 1/max_x |p_x|, then each
/// hyperplane by 1/max(|h|, |h_{k+1}|, 1). Signs are preserved; the result has
/// magnitude <= 1.
Arrangement normalize(const Arrangement &a);

/// Points become (p_x, -1); hyperplanes become (h_1..h_k, h_{k+1}, 0). All
/// evaluate values are preserved exactly.
Arrangement fold_threshold(const Arrangement &a);

/// Appends zero coordinates to every point and hyperplane direction (the
/// threshold stays last). evaluate values are unchanged.
Arrangement pad_dimension(const Arrangement &a, std::size_t new_dim);

inline constexpr std::size_t kMaxDim1Rows = 8;

struct Dim1Result {
    bool realizable = false;
    std::optional<Arrangement> certificate;
};

/// Exact decision of dimension-1 realizability by enumerating row orderings.
Dim1Result dim1_realizable(const PartialBoolFn &f);

}  // namespace arrcc

#endif  // ARRCC_ARRANGEMENT_HPP
