/*
Copyright 2026 The kssparse Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "kssparse/generators.hpp"
#include "kssparse/leverage.hpp"
#include "oracle.hpp"

namespace kss {
namespace {

TEST(Leverage, CompleteGraphs) {
    for (std::size_t n = 3; n <= 12; ++n) {
        const auto p = leverage_scores(generators::complete(n));
        for (double s : p.scores) EXPECT_NEAR(s, 2.0 / static_cast<double>(n), 1e-9);
        EXPECT_NEAR(p.sum, static_cast<double>(n - 1), 1e-8);
    }
}

TEST(Leverage, K4Fixture) {
    const auto p = leverage_scores(oracle::load("k4"));
    ASSERT_EQ(p.scores.size(), 6u);
    for (double s : p.scores) EXPECT_NEAR(s, 0.5, 1e-12);
    EXPECT_NEAR(p.sum, 3.0, 1e-12);
    EXPECT_DOUBLE_EQ(p.expected_sum(), 3.0);
}

TEST(Leverage, DumbbellBridge) {
    const auto g = oracle::load("dumbbell");
    const auto p = leverage_scores(g);
    EXPECT_EQ(g.edges()[p.argmax].u, 3u);
    EXPECT_EQ(g.edges()[p.argmax].v, 4u);
    EXPECT_NEAR(p.max, 1.0, 1e-9);
}

TEST(Leverage, BridgesOfPath) {
    const auto p = leverage_scores(oracle::load("path3"));
    EXPECT_NEAR(p.scores[0], 1.0, 1e-12);
    EXPECT_NEAR(p.scores[1], 1.0, 1e-12);
    EXPECT_NEAR(p.sum, 2.0, 1e-12);
}

TEST(Leverage, DisconnectedSumUsesComponents) {
    const auto p = leverage_scores(oracle::load("disconnected_two_edges"));
    EXPECT_EQ(p.components, 2u);
    EXPECT_NEAR(p.sum, 2.0, 1e-12);
    EXPECT_DOUBLE_EQ(p.expected_sum(), 2.0);
}

TEST(Leverage, EmptyGraphRejected) {
    EXPECT_THROW(leverage_scores(WeightedGraph(3, {})), std::invalid_argument);
}

TEST(Leverage, MatchesPseudoinverseOracle) {
    for (const char* name : {"dumbbell", "k23", "cycle6", "weighted_triangle", "random_n12_m30", "random_n20_m60",
                             "disconnected_two_edges", "star5"}) {
        const auto g = oracle::load(name);
        const auto ref = oracle::leverage(g);
        const auto p = leverage_scores(g);
        for (std::size_t e = 0; e < g.m(); ++e) EXPECT_NEAR(p.scores[e], ref[e], 1e-9) << name << " edge " << e;
        EXPECT_NEAR(p.sum, p.expected_sum(), 1e-8) << name;
    }
}

TEST(Leverage, InvariantUnderUniformScaling) {
    const auto g = oracle::load("random_n20_m60");
    const auto base = leverage_scores(g);
    for (double f : {1e-3, 0.5, 7.0, 1e4}) {
        const auto scaled = leverage_scores(scale_weights(g, f));
        for (std::size_t e = 0; e < g.m(); ++e) EXPECT_NEAR(scaled.scores[e], base.scores[e], 1e-9);
    }
}

TEST(Leverage, SplitDividesByMultiplicity) {
    const auto g = oracle::load("dumbbell");
    const auto base = leverage_scores(g);
    for (std::size_t k : {2u, 5u, 17u, 64u}) {
        const auto s = leverage_scores(split_edge(g, 6, k));
        for (std::size_t i = 0; i < k; ++i) EXPECT_NEAR(s.scores[6 + i], base.scores[6] / static_cast<double>(k), 1e-9);
        EXPECT_NEAR(s.scores[0], base.scores[0], 1e-9);
        EXPECT_NEAR(s.sum, base.sum, 1e-8);
    }
}

TEST(Leverage, ParallelEdgesShareUnitLeverage) {
    const auto p = leverage_scores(generators::parallel_edges(4, 2.0));
    for (double s : p.scores) EXPECT_NEAR(s, 0.25, 1e-12);
}

TEST(NormalizedEdges, ResolveTheIdentity) {
    const auto g = oracle::load("random_n12_m30");
    const NormalizedEdges u(g);
    ASSERT_EQ(u.rank(), 11u);
    Matrix sum(u.rank(), u.rank());
    for (std::size_t e = 0; e < u.m(); ++e) sum.add_outer(u[e]);
    EXPECT_LE(max_abs(sum - Matrix::identity(u.rank())), 1e-10);
    const auto ref = oracle::leverage(g);
    for (std::size_t e = 0; e < u.m(); ++e) EXPECT_NEAR(dot(u[e], u[e]), ref[e], 1e-9);
}

}  // namespace
}  // namespace kss
