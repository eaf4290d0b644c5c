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

#ifndef ARRCC_RANDOM_HPP
#define ARRCC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "arrcc/numkernel.hpp"

namespace arrcc {

/// Portable seeded generator. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; the distributions below are written out
/// by hand because the standard library's are implementation-defined.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    bool fair_bit() { return (engine_() >> 63) != 0; }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal via Box-Muller (no cached second variate).
    double gaussian();
    /// Uniform integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n);

    RealVector gaussian_vector(std::size_t n);
    /// Random Hermitian matrix with independent N(0,1) real/imaginary parts.
    ComplexMatrix hermitian(std::size_t n);
    /// exp(i H) of a random Hermitian H.
    ComplexMatrix unitary(std::size_t n);

   private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace arrcc

#endif  // ARRCC_RANDOM_HPP
