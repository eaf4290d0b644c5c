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

#include "arrcc/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "arrcc/error.hpp"

namespace arrcc {

Arrangement::Arrangement(std::size_t dim, std::vector<RealVector> points, std::vector<RealVector> hyperplanes)
    : dim_(dim), points_(std::move(points)), hyperplanes_(std::move(hyperplanes)) {
    require(dim_ >= 1, ErrorCode::kInvalidInput, "arrangement dimension must be positive");
    require(!points_.empty() && !hyperplanes_.empty(), ErrorCode::kInvalidInput,
            "arrangement needs at least one point and one hyperplane");
    for (std::size_t x = 0; x < points_.size(); ++x) {
        require(points_[x].size() == dim_, ErrorCode::kShapeMismatch,
                "point " + std::to_string(x) + " has length " + std::to_string(points_[x].size()) + ", expected " +
                    std::to_string(dim_));
        for (double v : points_[x]) require(std::isfinite(v), ErrorCode::kInvalidInput, "non-finite point coordinate");
    }
    for (std::size_t y = 0; y < hyperplanes_.size(); ++y) {
        require(hyperplanes_[y].size() == dim_ + 1, ErrorCode::kShapeMismatch,
                "hyperplane " + std::to_string(y) + " has length " + std::to_string(hyperplanes_[y].size()) +
                    ", expected " + std::to_string(dim_ + 1));
        for (double v : hyperplanes_[y])
            require(std::isfinite(v), ErrorCode::kInvalidInput, "non-finite hyperplane coordinate");
    }
}

double evaluate(const Arrangement &a, std::size_t x, std::size_t y) {
    require(x < a.num_points() && y < a.num_hyperplanes(), ErrorCode::kOutOfRange,
            "evaluate index (" + std::to_string(x) + ", " + std::to_string(y) + ") out of range");
    const RealVector &p = a.point(x);
    const RealVector &h = a.hyperplane(y);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += p[i] * h[i];
    return s - h[a.dim()];
}

namespace {

double l2(const RealVector &v, std::size_t len) {
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += v[i] * v[i];
    return std::sqrt(s);
}

}  // namespace

double magnitude(const Arrangement &a) {
    double m = 0.0;
    for (const auto &p : a.points()) m = std::max(m, l2(p, a.dim()));
    for (const auto &h : a.hyperplanes()) {
        m = std::max(m, l2(h, a.dim()));
        m = std::max(m, std::abs(h[a.dim()]));
    }
    return m;
}

RealizeVerdict realizes(const Arrangement &a, const PartialBoolFn &f, double tol) {
    require(a.num_points() == f.x_size() && a.num_hyperplanes() == f.y_size(), ErrorCode::kShapeMismatch,
            "arrangement is " + std::to_string(a.num_points()) + "x" + std::to_string(a.num_hyperplanes()) +
                " but function is " + std::to_string(f.x_size()) + "x" + std::to_string(f.y_size()));
    RealizeVerdict v;
    v.magnitude = magnitude(a);
    double margin = INFINITY;
    for (std::size_t x = 0; x < f.x_size(); ++x)
        for (std::size_t y = 0; y < f.y_size(); ++y) {
            const int want = target_sign(f.at(x, y));
            if (want == 0) continue;
            const double val = evaluate(a, x, y);
            if (!(val * want > tol)) {
                v.realizes = false;
                v.witness = std::make_pair(x, y);
                return v;
            }
            margin = std::min(margin, std::abs(val));
        }
    v.realizes = true;
    v.margin = margin;
    return v;
}

Arrangement normalize(const Arrangement &a) {
    const std::size_t k = a.dim();
    double max_point = 0.0;
    for (const auto &p : a.points()) max_point = std::max(max_point, l2(p, k));
    require(max_point > 0.0, ErrorCode::kPrecondition, "cannot normalize: all points are zero");
    const double s = 1.0 / max_point;

    std::vector<RealVector> points = a.points();
    for (auto &p : points)
        for (auto &v : p) v *= s;
    std::vector<RealVector> hyperplanes = a.hyperplanes();
    for (auto &h : hyperplanes) {
        h[k] *= s;
        const double t = 1.0 / std::max({l2(h, k), std::abs(h[k]), 1.0});
        for (auto &v : h) v *= t;
    }
    return Arrangement(k, std::move(points), std::move(hyperplanes));
}

Arrangement fold_threshold(const Arrangement &a) {
    const std::size_t k = a.dim();
    std::vector<RealVector> points = a.points();
    for (auto &p : points) p.push_back(-1.0);
    std::vector<RealVector> hyperplanes = a.hyperplanes();
    for (auto &h : hyperplanes) h.push_back(0.0);
    return Arrangement(k + 1, std::move(points), std::move(hyperplanes));
}

Arrangement pad_dimension(const Arrangement &a, std::size_t new_dim) {
    require(new_dim >= a.dim(), ErrorCode::kPrecondition, "pad_dimension cannot shrink");
    const std::size_t k = a.dim();
    std::vector<RealVector> points = a.points();
    for (auto &p : points) p.resize(new_dim, 0.0);
    std::vector<RealVector> hyperplanes;
    hyperplanes.reserve(a.num_hyperplanes());
    for (const auto &h : a.hyperplanes()) {
        RealVector g(new_dim + 1, 0.0);
        std::copy(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(k), g.begin());
        g[new_dim] = h[k];
        hyperplanes.push_back(std::move(g));
    }
    return Arrangement(new_dim, std::move(points), std::move(hyperplanes));
}

namespace {

// Along `order`, the defined signs of column y change at most once.
bool column_monotone(const PartialBoolFn &f, const std::vector<std::size_t> &order, std::size_t y) {
    int current = 0;
    int changes = 0;
    for (std::size_t x : order) {
        const int s = target_sign(f.at(x, y));
        if (s == 0) continue;
        if (current != 0 && s != current && ++changes > 1) return false;
        current = s;
    }
    return true;
}

Arrangement dim1_certificate(const PartialBoolFn &f, const std::vector<std::size_t> &order) {
    const std::size_t m = order.size();
    // Distinct, centered integer positions 2r - (m-1); consecutive gap 2.
    auto position = [m](std::size_t rank) {
        return m == 1 ? 1.0 : 2.0 * static_cast<double>(rank) - static_cast<double>(m - 1);
    };
    std::vector<RealVector> points(m, RealVector(1));
    for (std::size_t r = 0; r < m; ++r) points[order[r]][0] = position(r);

    std::vector<RealVector> hyperplanes;
    for (std::size_t y = 0; y < f.y_size(); ++y) {
        int first = 0;
        std::size_t last_first_rank = 0;
        std::optional<std::size_t> switch_rank;
        for (std::size_t r = 0; r < m && !switch_rank; ++r) {
            const int s = target_sign(f.at(order[r], y));
            if (s == 0) continue;
            if (first == 0) first = s;
            if (s == first)
                last_first_rank = r;
            else
                switch_rank = r;
        }
        if (!switch_rank) {
            // Constant (or fully undefined) column: value is +-1 everywhere.
            hyperplanes.push_back(first >= 0 ? RealVector{0.0, -1.0} : RealVector{0.0, 1.0});
            continue;
        }
        const double cut = 0.5 * (position(last_first_rank) + position(*switch_rank));
        // first == +1: positive below the cut, value = c - p.
        hyperplanes.push_back(first > 0 ? RealVector{-1.0, 0.0 - cut} : RealVector{1.0, cut});
    }
    return Arrangement(1, std::move(points), std::move(hyperplanes));
}

}  // namespace

Dim1Result dim1_realizable(const PartialBoolFn &f) {
    require(f.x_size() <= kMaxDim1Rows, ErrorCode::kCapExceeded,
            "dimension-1 oracle supports at most 8 rows, got " + std::to_string(f.x_size()));
    std::vector<std::size_t> order(f.x_size());
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (std::size_t y = 0; y < f.y_size() && ok; ++y) ok = column_monotone(f, order, y);
        if (ok) return Dim1Result{true, dim1_certificate(f, order)};
    } while (std::next_permutation(order.begin(), order.end()));
    return Dim1Result{false, std::nullopt};
}

}  // namespace arrcc
