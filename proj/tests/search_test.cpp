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

#include "arrcc/error.hpp"
#include "arrcc/search.hpp"

namespace arrcc {
namespace {

const PartialBoolFn kEq1 = parse_table("01\n10");

TEST(SearchConfig, Validation) {
    SearchConfig c;
    EXPECT_NO_THROW(c.validate());
    c.dim = 0;
    EXPECT_THROW(c.validate(), Error);
    c = SearchConfig{};
    c.restarts = 0;
    EXPECT_THROW(c.validate(), Error);
    c = SearchConfig{};
    c.step = -1.0;
    EXPECT_THROW(c.validate(), Error);
}

TEST(MaxMargin, EqualityOneBitInDimensionOne) {
    SearchConfig c;
    c.dim = 1;
    const SearchOutcome r = max_margin(kEq1, c);
    ASSERT_TRUE(r.success());
    EXPECT_GE(r.margin, 0.5);
    const RealizeVerdict v = realizes(*r.certificate, kEq1);
    EXPECT_TRUE(v.realizes);
    EXPECT_LE(v.magnitude, 1.0 + 1e-9);
}

TEST(MaxMargin, EqualityTwoBitsInDimensionThree) {
    const PartialBoolFn f = family("EQ", {2}, std::nullopt);
    SearchConfig c;
    c.dim = 3;
    const SearchOutcome r = max_margin(f, c);
    ASSERT_TRUE(r.success());
    EXPECT_TRUE(realizes(*r.certificate, f, c.tol).realizes);
}

TEST(MaxMargin, ConstantFunction) {
    const PartialBoolFn f = parse_table("11\n11\n11");
    SearchConfig c;
    c.dim = 2;
    const SearchOutcome r = max_margin(f, c);
    ASSERT_TRUE(r.success());
    EXPECT_TRUE(realizes(*r.certificate, f).realizes);
}

TEST(MaxMargin, Deterministic) {
    const PartialBoolFn f = family("IP", {2}, std::nullopt);
    SearchConfig c;
    c.dim = 2;
    c.seed = 17;
    const SearchOutcome a = max_margin(f, c);
    const SearchOutcome b = max_margin(f, c);
    EXPECT_EQ(a.margin, b.margin);
    EXPECT_EQ(a.best_restart, b.best_restart);
    ASSERT_EQ(a.success(), b.success());
    if (a.success()) EXPECT_EQ(*a.certificate, *b.certificate);
}

TEST(MaxMargin, WarmStartNeverLosesMargin) {
    const Arrangement warm(1, {{-1.0}, {1.0}}, {{-1.0, 0.0}, {1.0, 0.0}});
    SearchConfig c;
    c.dim = 2;
    c.restarts = 1;
    c.iters = 50;
    const SearchOutcome r = max_margin(kEq1, c, warm);
    ASSERT_TRUE(r.success());
    EXPECT_GE(r.margin, 1.0 - 1e-12);
    EXPECT_EQ(r.best_restart, 0);
}

TEST(MaxMargin, WarmStartShapeChecked) {
    const Arrangement warm(3, {{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    SearchConfig c;
    c.dim = 2;
    EXPECT_THROW(max_margin(kEq1, c, warm), Error);
    const Arrangement small(1, {{1.0}}, {{1.0, 0.0}});
    EXPECT_THROW(max_margin(kEq1, c, small), Error);
}

TEST(MaxMargin, UnrealizableReportsNonPositiveMargin) {
    // IP(2) has no dimension-1 arrangement.
    const PartialBoolFn f = family("IP", {2}, std::nullopt);
    ASSERT_FALSE(dim1_realizable(f).realizable);
    SearchConfig c;
    c.dim = 1;
    c.restarts = 4;
    c.iters = 300;
    const SearchOutcome r = max_margin(f, c);
    EXPECT_FALSE(r.success());
    EXPECT_LE(r.margin, 0.0);
}

TEST(MinDim, Examples) {
    const SearchConfig c;
    const DimBound eq1 = min_dim_upper(kEq1, 4, c);
    EXPECT_EQ(eq1.k_upper, 1u);
    EXPECT_TRUE(eq1.exact);
    EXPECT_TRUE(realizes(eq1.certificate, kEq1).realizes);

    const PartialBoolFn eq2 = family("EQ", {2}, std::nullopt);
    const DimBound b = min_dim_upper(eq2, 4, c);
    EXPECT_GE(b.k_upper, 2u);
    EXPECT_LE(b.k_upper, 3u);
    EXPECT_EQ(b.exact, b.k_upper == 2);
    EXPECT_TRUE(realizes(b.certificate, eq2).realizes);
    EXPECT_NEAR(b.margin, realizes(b.certificate, eq2).margin, 1e-15);

    const DimBound constant = min_dim_upper(parse_table("00\n00"), 4, c);
    EXPECT_EQ(constant.k_upper, 1u);
}

TEST(MinDim, FailureThrowsSearchFailed) {
    SearchConfig c;
    c.restarts = 1;
    c.iters = 5;
    try {
        min_dim_upper(family("IP", {2}, std::nullopt), 1, c);
        FAIL() << "expected kSearchFailed";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kSearchFailed);
    }
    EXPECT_THROW(min_dim_upper(kEq1, 0, c), Error);
}

}  // namespace
}  // namespace arrcc
