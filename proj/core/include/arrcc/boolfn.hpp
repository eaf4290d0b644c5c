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

#ifndef ARRCC_BOOLFN_HPP
#define ARRCC_BOOLFN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arrcc {

enum class Entry : std::uint8_t { kZero, kOne, kUndefined };

/// Sign convention used everywhere: f(x,y)=0 <-> +1 (positive side of the
/// hyperplane, protocol outputs 0 with probability > 1/2); f(x,y)=1 <-> -1.
inline int target_sign(Entry e) { return e == Entry::kZero ? 1 : (e == Entry::kOne ? -1 : 0); }

inline constexpr std::size_t kMaxInputSize = 256;
inline constexpr int kMaxFamilyBits = 3;

/// A finite, possibly partial, two-party Boolean function f : X x Y -> {0,1,*}.
/// Row index is Alice's input x, column index is Bob's input y.
class PartialBoolFn {
   public:
    PartialBoolFn(std::size_t x_size, std::size_t y_size, std::vector<Entry> table);

    std::size_t x_size() const noexcept { return x_size_; }
    std::size_t y_size() const noexcept { return y_size_; }
    Entry at(std::size_t x, std::size_t y) const { return table_[x * y_size_ + y]; }
    bool defined(std::size_t x, std::size_t y) const { return at(x, y) != Entry::kUndefined; }
    std::size_t defined_count() const;
    bool is_total() const { return defined_count() == table_.size(); }

    /// One string per row over {0,1,*}.
    std::vector<std::string> rows() const;

    friend bool operator==(const PartialBoolFn &, const PartialBoolFn &) = default;

   private:
    std::size_t x_size_;
    std::size_t y_size_;
    std::vector<Entry> table_;
};

/// Newline-separated rows over {0,1,*}. A trailing newline (and CR line
/// endings) are accepted.
PartialBoolFn parse_table(std::string_view text);
PartialBoolFn from_rows(const std::vector<std::string> &rows);
/// Inverse of parse_table; rows joined by '\n' with no trailing newline.
std::string render(const PartialBoolFn &f);

PartialBoolFn transpose(const PartialBoolFn &f);

/// Named families: EQ, NE, IP, GT take one bit-size parameter n (|X|=|Y|=2^n,
/// 2^n <= 8). RAND takes one or two bit sizes and a seed; each entry is one
/// fair bit drawn from Rng(seed) in row-major order.
PartialBoolFn family(std::string_view name, const std::vector<int> &params, std::optional<std::uint64_t> seed);

/// Uniform random total function with explicit sizes (used for sampling
/// small non-power-of-two shapes).
PartialBoolFn random_fn(std::size_t x_size, std::size_t y_size, std::uint64_t seed);

/// Parses an expression like "EQ(2)", "IP(1)", "RAND(2,2,seed=7)".
PartialBoolFn parse_family_expression(std::string_view expr);

}  // namespace arrcc

#endif  // ARRCC_BOOLFN_HPP
