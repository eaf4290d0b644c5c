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

#include "arrcc/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "arrcc/error.hpp"
#include "arrcc/random.hpp"

namespace arrcc {

PartialBoolFn::PartialBoolFn(std::size_t x_size, std::size_t y_size, std::vector<Entry> table)
    : x_size_(x_size), y_size_(y_size), table_(std::move(table)) {
    require(x_size_ >= 1 && y_size_ >= 1, ErrorCode::kInvalidInput, "empty function");
    require(x_size_ <= kMaxInputSize && y_size_ <= kMaxInputSize, ErrorCode::kCapExceeded,
            "function size exceeds 256 on one side");
    require(table_.size() == x_size_ * y_size_, ErrorCode::kShapeMismatch, "table size mismatch");
    require(defined_count() > 0, ErrorCode::kInvalidInput, "function has no defined entry");
}

std::size_t PartialBoolFn::defined_count() const {
    return static_cast<std::size_t>(
        std::count_if(table_.begin(), table_.end(), [](Entry e) { return e != Entry::kUndefined; }));
}

std::vector<std::string> PartialBoolFn::rows() const {
    std::vector<std::string> out(x_size_, std::string(y_size_, '*'));
    for (std::size_t x = 0; x < x_size_; ++x)
        for (std::size_t y = 0; y < y_size_; ++y) {
            const Entry e = at(x, y);
            out[x][y] = e == Entry::kZero ? '0' : (e == Entry::kOne ? '1' : '*');
        }
    return out;
}

PartialBoolFn from_rows(const std::vector<std::string> &rows) {
    require(!rows.empty(), ErrorCode::kInvalidInput, "empty truth table");
    const std::size_t width = rows.front().size();
    require(width > 0, ErrorCode::kInvalidInput, "empty truth table row");
    std::vector<Entry> table;
    table.reserve(rows.size() * width);
    for (std::size_t x = 0; x < rows.size(); ++x) {
        require(rows[x].size() == width, ErrorCode::kInvalidInput,
                "ragged truth table: row " + std::to_string(x) + " has length " + std::to_string(rows[x].size()) +
                    ", expected " + std::to_string(width));
        for (std::size_t y = 0; y < width; ++y) {
            switch (rows[x][y]) {
                case '0': table.push_back(Entry::kZero); break;
                case '1': table.push_back(Entry::kOne); break;
                case '*': table.push_back(Entry::kUndefined); break;
                default:
                    fail(ErrorCode::kInvalidInput, "illegal character '" + std::string(1, rows[x][y]) +
                                                       "' at row " + std::to_string(x) + ", column " +
                                                       std::to_string(y));
            }
        }
    }
    return PartialBoolFn(rows.size(), width, std::move(table));
}

PartialBoolFn parse_table(std::string_view text) {
    std::vector<std::string> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        rows.push_back(std::move(line));
        start = end + 1;
    }
    // A single trailing newline terminates the last row.
    if (rows.size() > 1 && rows.back().empty()) rows.pop_back();
    require(!(rows.size() == 1 && rows.front().empty()), ErrorCode::kInvalidInput, "empty truth table");
    return from_rows(rows);
}

std::string render(const PartialBoolFn &f) {
    std::string out;
    const auto rows = f.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += '\n';
        out += rows[i];
    }
    return out;
}

PartialBoolFn transpose(const PartialBoolFn &f) {
    std::vector<Entry> table(f.x_size() * f.y_size());
    for (std::size_t x = 0; x < f.x_size(); ++x)
        for (std::size_t y = 0; y < f.y_size(); ++y) table[y * f.x_size() + x] = f.at(x, y);
    return PartialBoolFn(f.y_size(), f.x_size(), std::move(table));
}

namespace {

std::size_t side_for_bits(int n) {
    require(n >= 0 && n <= kMaxFamilyBits, ErrorCode::kCapExceeded,
            "family bit size " + std::to_string(n) + " outside [0, 3] (2^n <= 8)");
    return std::size_t{1} << n;
}

template <typename Pred>
PartialBoolFn tabulate(std::size_t side, Pred is_one) {
    std::vector<Entry> table(side * side);
    for (std::size_t x = 0; x < side; ++x)
        for (std::size_t y = 0; y < side; ++y) table[x * side + y] = is_one(x, y) ? Entry::kOne : Entry::kZero;
    return PartialBoolFn(side, side, std::move(table));
}

}  // namespace

PartialBoolFn random_fn(std::size_t x_size, std::size_t y_size, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Entry> table(x_size * y_size);
    for (auto &e : table) e = rng.fair_bit() ? Entry::kOne : Entry::kZero;
    return PartialBoolFn(x_size, y_size, std::move(table));
}

PartialBoolFn family(std::string_view name, const std::vector<int> &params, std::optional<std::uint64_t> seed) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });

    if (upper == "RAND") {
        require(params.size() == 1 || params.size() == 2, ErrorCode::kInvalidInput, "RAND takes one or two bit sizes");
        require(seed.has_value(), ErrorCode::kInvalidInput, "RAND requires a seed");
        const std::size_t xs = side_for_bits(params[0]);
        const std::size_t ys = side_for_bits(params.size() == 2 ? params[1] : params[0]);
        return random_fn(xs, ys, *seed);
    }

    require(params.size() == 1, ErrorCode::kInvalidInput, upper + " takes exactly one bit size");
    const std::size_t side = side_for_bits(params[0]);
    if (upper == "EQ") return tabulate(side, [](std::size_t x, std::size_t y) { return x != y; });
    if (upper == "NE") return tabulate(side, [](std::size_t x, std::size_t y) { return x == y; });
    if (upper == "IP")
        return tabulate(side, [](std::size_t x, std::size_t y) { return (std::popcount(x & y) & 1) != 0; });
    if (upper == "GT") return tabulate(side, [](std::size_t x, std::size_t y) { return x > y; });
    fail(ErrorCode::kInvalidInput, "unknown function family '" + std::string(name) + "'");
}

PartialBoolFn parse_family_expression(std::string_view expr) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    expr = trim(expr);
    const auto open = expr.find('(');
    require(open != std::string_view::npos && !expr.empty() && expr.back() == ')', ErrorCode::kInvalidInput,
            "expected NAME(args), got '" + std::string(expr) + "'");
    const std::string_view name = trim(expr.substr(0, open));
    std::string_view args = expr.substr(open + 1, expr.size() - open - 2);

    std::vector<int> params;
    std::optional<std::uint64_t> seed;
    while (!args.empty()) {
        auto comma = args.find(',');
        std::string_view tok = trim(args.substr(0, comma));
        args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
        if (tok.starts_with("seed=")) {
            tok.remove_prefix(5);
            std::uint64_t s = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), s);
            require(ec == std::errc{} && p == tok.data() + tok.size(), ErrorCode::kInvalidInput, "bad seed");
            seed = s;
        } else {
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            require(ec == std::errc{} && p == tok.data() + tok.size(), ErrorCode::kInvalidInput,
                    "bad family parameter '" + std::string(tok) + "'");
            params.push_back(v);
        }
    }
    return family(name, params, seed);
}

}  // namespace arrcc
