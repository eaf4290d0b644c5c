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

#include "arrcc/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arrcc/error.hpp"
#include "arrcc/random.hpp"

namespace arrcc {

void SearchConfig::validate() const {
    require(dim >= 1, ErrorCode::kInvalidInput, "search dimension must be >= 1");
    require(restarts >= 1, ErrorCode::kInvalidInput, "restarts must be >= 1");
    require(iters >= 1, ErrorCode::kInvalidInput, "iters must be >= 1");
    require(step > 0.0 && std::isfinite(step), ErrorCode::kInvalidInput, "step must be positive");
    require(tol >= 0.0 && std::isfinite(tol), ErrorCode::kInvalidInput, "tol must be non-negative");
}

namespace {

constexpr double kInitialTemperature = 1.0;
constexpr double kTemperatureDecay = 0.95;
constexpr int kTemperaturePeriod = 50;
constexpr double kStepDecay = 0.99;

struct DefinedPair {
    std::size_t x;
    std::size_t y;
    double sign;
};

// Flat working copy of an arrangement: P is m x k, H is n x (k+1).
struct State {
    std::size_t k;
    std::vector<RealVector> points;
    std::vector<RealVector> planes;
};

void project_point(RealVector &p) {
    double n2 = 0.0;
    for (double v : p) n2 += v * v;
    if (n2 > 1.0) {
        const double s = 1.0 / std::sqrt(n2);
        for (double &v : p) v *= s;
    }
}

void project_plane(RealVector &h, std::size_t k) {
    double n2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) n2 += h[i] * h[i];
    if (n2 > 1.0) {
        const double s = 1.0 / std::sqrt(n2);
        for (std::size_t i = 0; i < k; ++i) h[i] *= s;
    }
    h[k] = std::clamp(h[k], -1.0, 1.0);
}

double signed_value(const State &st, const DefinedPair &dp) {
    const RealVector &p = st.points[dp.x];
    const RealVector &h = st.planes[dp.y];
    double s = 0.0;
    for (std::size_t i = 0; i < st.k; ++i) s += p[i] * h[i];
    return dp.sign * (s - h[st.k]);
}

double hard_margin(const State &st, const std::vector<DefinedPair> &pairs) {
    double m = INFINITY;
    for (const auto &dp : pairs) m = std::min(m, signed_value(st, dp));
    return m;
}

// Soft-min weights: gradient of -tau * log sum exp(-s / tau) w.r.t. s.
void softmin_weights(const State &st, const std::vector<DefinedPair> &pairs, double tau, RealVector &w) {
    double smin = INFINITY;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        w[i] = signed_value(st, pairs[i]);
        smin = std::min(smin, w[i]);
    }
    double z = 0.0;
    for (double &v : w) {
        v = std::exp(-(v - smin) / tau);
        z += v;
    }
    for (double &v : w) v /= z;
}

State random_start(Rng &rng, std::size_t k, std::size_t m, std::size_t n) {
    auto half_norm = [&](std::size_t len) {
        RealVector v = rng.gaussian_vector(len);
        double n2 = 0.0;
        for (double x : v) n2 += x * x;
        const double s = n2 > 0.0 ? 0.5 / std::sqrt(n2) : 0.0;
        for (double &x : v) x *= s;
        return v;
    };
    State st{k, {}, {}};
    for (std::size_t x = 0; x < m; ++x) st.points.push_back(half_norm(k));
    for (std::size_t y = 0; y < n; ++y) {
        RealVector h = half_norm(k);
        h.push_back(0.0);
        st.planes.push_back(std::move(h));
    }
    return st;
}

struct RestartResult {
    State best;
    double margin;
};

RestartResult run_restart(const std::vector<DefinedPair> &pairs, const SearchConfig &cfg, State st) {
    for (auto &p : st.points) project_point(p);
    for (auto &h : st.planes) project_plane(h, st.k);

    RestartResult best{st, hard_margin(st, pairs)};
    RealVector w(pairs.size());
    std::vector<RealVector> grad_p(st.points.size(), RealVector(st.k));
    std::vector<RealVector> grad_h(st.planes.size(), RealVector(st.k + 1));

    double eta = cfg.step;
    for (int t = 0; t < cfg.iters; ++t, eta *= kStepDecay) {
        const double tau = kInitialTemperature * std::pow(kTemperatureDecay, t / kTemperaturePeriod);

        softmin_weights(st, pairs, tau, w);
        for (auto &g : grad_p) std::fill(g.begin(), g.end(), 0.0);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto &dp = pairs[i];
            const double c = w[i] * dp.sign;
            for (std::size_t d = 0; d < st.k; ++d) grad_p[dp.x][d] += c * st.planes[dp.y][d];
        }
        for (std::size_t x = 0; x < st.points.size(); ++x) {
            for (std::size_t d = 0; d < st.k; ++d) st.points[x][d] += eta * grad_p[x][d];
            project_point(st.points[x]);
        }

        softmin_weights(st, pairs, tau, w);
        for (auto &g : grad_h) std::fill(g.begin(), g.end(), 0.0);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto &dp = pairs[i];
            const double c = w[i] * dp.sign;
            for (std::size_t d = 0; d < st.k; ++d) grad_h[dp.y][d] += c * st.points[dp.x][d];
            grad_h[dp.y][st.k] -= c;
        }
        for (std::size_t y = 0; y < st.planes.size(); ++y) {
            for (std::size_t d = 0; d <= st.k; ++d) st.planes[y][d] += eta * grad_h[y][d];
            project_plane(st.planes[y], st.k);
        }

        const double m = hard_margin(st, pairs);
        if (m > best.margin) best = RestartResult{st, m};
    }
    return best;
}

}  // namespace

SearchOutcome max_margin(const PartialBoolFn &f, const SearchConfig &cfg, const std::optional<Arrangement> &warm_start) {
    cfg.validate();
    std::vector<DefinedPair> pairs;
    for (std::size_t x = 0; x < f.x_size(); ++x)
        for (std::size_t y = 0; y < f.y_size(); ++y)
            if (const int s = target_sign(f.at(x, y)); s != 0) pairs.push_back({x, y, static_cast<double>(s)});

    std::optional<State> warm;
    if (warm_start) {
        require(warm_start->dim() <= cfg.dim, ErrorCode::kPrecondition, "warm start dimension exceeds target");
        require(warm_start->num_points() == f.x_size() && warm_start->num_hyperplanes() == f.y_size(),
                ErrorCode::kShapeMismatch, "warm start shape does not match function");
        const Arrangement padded = pad_dimension(*warm_start, cfg.dim);
        warm = State{cfg.dim, padded.points(), padded.hyperplanes()};
    }

    // Restarts are independent given their sub-seeds; merging keeps the
    // lowest restart index among equal margins.
    std::optional<RestartResult> best;
    int best_index = -1;
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
        State start = (r == 0 && warm) ? *warm : random_start(rng, cfg.dim, f.x_size(), f.y_size());
        RestartResult res = run_restart(pairs, cfg, std::move(start));
        if (!best || res.margin > best->margin) {
            best = std::move(res);
            best_index = r;
        }
    }

    SearchOutcome out;
    out.margin = best->margin;
    out.best_restart = best_index;
    if (!(best->margin > 0.0)) return out;

    Arrangement raw(cfg.dim, best->best.points, best->best.planes);
    bool any_point = false;
    for (const auto &p : raw.points())
        for (double v : p) any_point = any_point || v != 0.0;
    Arrangement cert = any_point ? normalize(raw) : raw;
    const RealizeVerdict verdict = realizes(cert, f, cfg.tol);
    if (!verdict || verdict.magnitude > 1.0 + default_tolerances().magnitude) return out;
    out.margin = verdict.margin;
    out.certificate = std::move(cert);
    return out;
}

DimBound min_dim_upper(const PartialBoolFn &f, std::size_t max_dim, const SearchConfig &cfg) {
    require(max_dim >= 1, ErrorCode::kInvalidInput, "max_dim must be >= 1");
    bool dim1_refuted = false;
    for (std::size_t k = 1; k <= max_dim; ++k) {
        if (k == 1 && f.x_size() <= kMaxDim1Rows) {
            const Dim1Result d1 = dim1_realizable(f);
            if (d1.realizable) {
                Arrangement cert = normalize(*d1.certificate);
                const RealizeVerdict v = realizes(cert, f, cfg.tol);
                require(v.realizes, ErrorCode::kNumerical, "dimension-1 certificate failed re-check");
                return DimBound{1, std::move(cert), v.margin, true};
            }
            dim1_refuted = true;
            continue;
        }
        SearchConfig c = cfg;
        c.dim = k;
        SearchOutcome res = max_margin(f, c);
        if (res.success()) {
            const RealizeVerdict v = realizes(*res.certificate, f, cfg.tol);
            require(v.realizes && v.magnitude <= 1.0 + default_tolerances().magnitude, ErrorCode::kNumerical,
                    "search certificate failed independent re-check");
            return DimBound{k, std::move(*res.certificate), v.margin, dim1_refuted && k == 2};
        }
    }
    fail(ErrorCode::kSearchFailed, "no arrangement found in dimensions 1.." + std::to_string(max_dim));
}

}  // namespace arrcc
