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

#include "arrcc/random.hpp"

#include <cmath>
#include <numbers>

namespace arrcc {

double Rng::gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::below(std::uint64_t n) {
    require(n > 0, ErrorCode::kPrecondition, "Rng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return r % n;
}

RealVector Rng::gaussian_vector(std::size_t n) {
    RealVector v(n);
    for (auto &x : v) x = gaussian();
    return v;
}

ComplexMatrix Rng::hermitian(std::size_t n) {
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
            const double re = gaussian();
            const double im = gaussian();
            h(i, j) = Complex{re, im};
            h(j, i) = Complex{re, -im};
        }
    }
    return h;
}

ComplexMatrix Rng::unitary(std::size_t n) { return exp_i_hermitian(hermitian(n)); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace arrcc
