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

#include <gtest/gtest.h>

#include <cmath>

#include "arrcc/arrangement.hpp"
#include "arrcc/error.hpp"
#include "arrcc/random.hpp"
#include "oracles.hpp"

namespace arrcc {
namespace {

Arrangement eq1_certificate() { return Arrangement(1, {{-1.0}, {1.0}}, {{-1.0, 0.0}, {1.0, 0.0}}); }

Arrangement random_arrangement(Rng &rng, std::size_t k, std::size_t m, std::size_t n) {
    std::vector<RealVector> p, h;
    for (std::size_t i = 0; i < m; ++i) p.push_back(rng.gaussian_vector(k));
    for (std::size_t i = 0; i < n; ++i) h.push_back(rng.gaussian_vector(k + 1));
    return Arrangement(k, p, h);
}

// The function an arrangement realizes wherever evaluate != 0.
PartialBoolFn sign_pattern(const Arrangement &a) {
    std::vector<Entry> t;
    for (std::size_t x = 0; x < a.num_points(); ++x)
        for (std::size_t y = 0; y < a.num_hyperplanes(); ++y) {
            const double v = evaluate(a, x, y);
            t.push_back(v > 0 ? Entry::kZero : v < 0 ? Entry::kOne : Entry::kUndefined);
        }
    return PartialBoolFn(a.num_points(), a.num_hyperplanes(), t);
}

TEST(Arrangement, ValidatesShape) {
    EXPECT_THROW(Arrangement(2, {{1.0}}, {{1.0, 0.0, 0.0}}), Error);
    EXPECT_THROW(Arrangement(1, {{1.0}}, {{1.0}}), Error);
    EXPECT_THROW(Arrangement(1, {{NAN}}, {{1.0, 0.0}}), Error);
}

TEST(Evaluate, Examples) {
    const Arrangement a(1, {{0.5}, {-1.0}}, {{1.0, 0.25}, {-1.0, 0.0}});
    EXPECT_DOUBLE_EQ(evaluate(a, 0, 0), 0.25);
    EXPECT_DOUBLE_EQ(evaluate(a, 1, 1), 1.0);
}

TEST(Evaluate, MatchesReferenceDotProduct) {
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        const Arrangement a = random_arrangement(rng, 1 + t % 6, 3, 4);
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = 0; y < 4; ++y) EXPECT_NEAR(evaluate(a, x, y), oracle::evaluate(a, x, y), 1e-14);
    }
}

TEST(Realizes, EqualityCertificate) {
    const RealizeVerdict v = realizes(eq1_certificate(), parse_table("01\n10"));
    EXPECT_TRUE(v.realizes);
    EXPECT_DOUBLE_EQ(v.margin, 1.0);
    EXPECT_DOUBLE_EQ(v.magnitude, 1.0);
}

TEST(Realizes, WrongFunctionGivesWitness) {
    const RealizeVerdict v = realizes(eq1_certificate(), parse_table("10\n01"));
    EXPECT_FALSE(v.realizes);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(*v.witness, std::make_pair(std::size_t{0}, std::size_t{0}));
}

TEST(Realizes, ZeroValueIsNotASign) {
    const Arrangement a(1, {{0.0}}, {{1.0, 0.0}});
    EXPECT_FALSE(realizes(a, parse_table("0")).realizes);
    EXPECT_FALSE(realizes(a, parse_table("1")).realizes);
}

TEST(Realizes, UndefinedEntriesSkippedAndShapeChecked) {
    const Arrangement a(1, {{1.0}, {2.0}}, {{1.0, 1.5}, {1.0, 1.0}});
    // Column 1 evaluates to 0 at x = 0, which only an undefined entry tolerates.
    const RealizeVerdict v = realizes(a, parse_table("1*\n00"));
    EXPECT_TRUE(v.realizes);
    EXPECT_DOUBLE_EQ(v.margin, 0.5);
    EXPECT_THROW(realizes(a, parse_table("0\n0")), Error);
}

TEST(Realizes, ToleranceIsStrict) {
    const Arrangement a(1, {{1.0}}, {{1.0, 0.5}});
    EXPECT_TRUE(realizes(a, parse_table("0"), 0.4).realizes);
    EXPECT_FALSE(realizes(a, parse_table("0"), 0.5).realizes);
}

TEST(Normalize, MagnitudeOneUnchanged) {
    const Arrangement a = eq1_certificate();
    EXPECT_EQ(normalize(a), a);
}

TEST(Normalize, DoubledCoordinatesKeepSigns) {
    const Arrangement a(1, {{-2.0}, {2.0}}, {{-2.0, 0.0}, {2.0, 0.0}});
    const Arrangement n = normalize(a);
    EXPECT_EQ(n, eq1_certificate());
}

TEST(Normalize, RandomRealizingStaysRealizing) {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        const Arrangement a = random_arrangement(rng, 1 + t % 4, 5, 6);
        const PartialBoolFn f = sign_pattern(a);
        const Arrangement n = normalize(a);
        const RealizeVerdict v = realizes(n, f);
        EXPECT_TRUE(v.realizes);
        EXPECT_LE(v.magnitude, 1.0 + 1e-12);
    }
}

TEST(Normalize, AllZeroPointsRejected) {
    EXPECT_THROW(normalize(Arrangement(1, {{0.0}}, {{1.0, 1.0}})), Error);
}

TEST(FoldThreshold, PreservesValues) {
    const Arrangement a = eq1_certificate();
    const Arrangement f1 = fold_threshold(a);
    const Arrangement f2 = fold_threshold(f1);
    EXPECT_EQ(f1.dim(), 2u);
    EXPECT_EQ(f2.dim(), 3u);
    EXPECT_EQ(f2.point(0).back(), -1.0);
    EXPECT_EQ(f2.point(0)[1], -1.0);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) {
            EXPECT_EQ(evaluate(f1, x, y), evaluate(a, x, y));
            EXPECT_EQ(evaluate(f2, x, y), evaluate(a, x, y));
        }
    Rng rng(9);
    const Arrangement r = random_arrangement(rng, 3, 4, 4);
    const Arrangement rf = fold_threshold(r);
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) EXPECT_NEAR(evaluate(rf, x, y), evaluate(r, x, y), 1e-14);
}

TEST(PadDimension, PreservesValues) {
    Rng rng(10);
    const Arrangement r = random_arrangement(rng, 2, 3, 3);
    const Arrangement p = pad_dimension(r, 5);
    EXPECT_EQ(p.dim(), 5u);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) EXPECT_EQ(evaluate(p, x, y), evaluate(r, x, y));
    EXPECT_THROW(pad_dimension(r, 1), Error);
}

TEST(Dim1, Examples) {
    const Dim1Result eq1 = dim1_realizable(parse_table("01\n10"));
    ASSERT_TRUE(eq1.realizable);
    const RealizeVerdict v = realizes(*eq1.certificate, parse_table("01\n10"));
    EXPECT_TRUE(v.realizes);
    EXPECT_GT(v.margin, 0.0);

    EXPECT_FALSE(dim1_realizable(family("EQ", {2}, std::nullopt)).realizable);
    const PartialBoolFn zero = parse_table("000\n000");
    const Dim1Result z = dim1_realizable(zero);
    ASSERT_TRUE(z.realizable);
    EXPECT_TRUE(realizes(*z.certificate, zero).realizes);
}

TEST(Dim1, AgreesWithBruteForce) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const PartialBoolFn f = random_fn(1 + s % 4, 1 + (s / 4) % 4, s);
        const Dim1Result d = dim1_realizable(f);
        EXPECT_EQ(d.realizable, oracle::dim1_bruteforce(f)) << render(f);
        if (d.realizable) EXPECT_TRUE(realizes(*d.certificate, f).realizes) << render(f);
    }
}

TEST(Dim1, PartialFunctions) {
    const PartialBoolFn f = parse_table("0***\n*0**\n**0*\n***0");
    EXPECT_TRUE(dim1_realizable(f).realizable);
    EXPECT_EQ(dim1_realizable(f).realizable, oracle::dim1_bruteforce(f));
}

TEST(Dim1, RowCap) {
    EXPECT_THROW(dim1_realizable(random_fn(kMaxDim1Rows + 1, 2, 0)), Error);
}

}  // namespace
}  // namespace arrcc
