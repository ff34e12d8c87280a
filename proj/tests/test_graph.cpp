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

#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "kssparse/generators.hpp"
#include "kssparse/graph.hpp"
#include "kssparse/graph_io.hpp"
#include "oracle.hpp"

namespace kss {
namespace {

void expect_matrix_near(const Matrix& a, const Eigen::MatrixXd& b, double tol) {
    ASSERT_EQ(a.rows(), static_cast<std::size_t>(b.rows()));
    ASSERT_EQ(a.cols(), static_cast<std::size_t>(b.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_NEAR(a(i, j), b(i, j), tol) << i << "," << j;
}

TEST(Laplacian, SingleEdge) {
    const auto g = WeightedGraph::from_edges(2, {{0, 1, 1.0}});
    EXPECT_EQ(laplacian(g), (Matrix{{1, -1}, {-1, 1}}));
}

TEST(Laplacian, Triangle) {
    EXPECT_EQ(laplacian(generators::complete(3)), (Matrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

TEST(Laplacian, MatchesDegreeMinusAdjacency) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = generators::random_connected(7, 14, seed, true);
        expect_matrix_near(laplacian(g), oracle::laplacian(g), 1e-12);
    }
}

TEST(Laplacian, RowsSumToZero) {
    const auto l = laplacian(oracle::load("random_n20_m60"));
    for (std::size_t i = 0; i < l.rows(); ++i) {
        double s = 0.0;
        for (double x : l.row(i)) s += x;
        EXPECT_NEAR(s, 0.0, 1e-12);
    }
}

TEST(Incidence, Examples) {
    const auto g = WeightedGraph::from_edges(3, {{0, 1, 4.0}, {1, 2, 1.0}});
    EXPECT_EQ(incidence_vector(g, 0), (std::vector<double>{2, -2, 0}));
    EXPECT_EQ(incidence_vector(g, 1), (std::vector<double>{0, 1, -1}));
}

TEST(Incidence, OrientationUsesLowerEndpoint) {
    const auto g = WeightedGraph::from_edges(3, {{2, 0, 1.0}});
    EXPECT_EQ(incidence_vector(g, 0), (std::vector<double>{1, 0, -1}));
}

TEST(Incidence, OuterProductsSumToLaplacian) {
    const auto g = generators::complete(4);
    Matrix sum(4, 4);
    for (std::size_t e = 0; e < g.m(); ++e) sum.add_outer(incidence_vector(g, e));
    expect_matrix_near(sum, oracle::laplacian(g), 1e-15);
}

TEST(SplitEdge, EqualCopies) {
    const auto g = split_edge(WeightedGraph::from_edges(2, {{0, 1, 1.0}}), 0, 4);
    ASSERT_EQ(g.m(), 4u);
    for (const Edge& e : g.edges()) {
        EXPECT_DOUBLE_EQ(e.weight, 0.25);
        EXPECT_EQ(e.parent_id, 0u);
    }
}

TEST(SplitEdge, IdentityForOne) {
    const auto g = generators::dumbbell();
    EXPECT_EQ(split_edge(g, 6, 1), g);
}

TEST(SplitEdge, ZeroCopiesRejected) {
    EXPECT_THROW(split_edge(generators::path(3), 0, 0), std::invalid_argument);
    EXPECT_THROW(split_edge(generators::path(3), 5, 2), std::out_of_range);
}

TEST(SplitEdge, CopiesAreConsecutive) {
    const auto g = split_edge(generators::path(4), 1, 3);
    ASSERT_EQ(g.m(), 5u);
    EXPECT_EQ(g.edges()[0].parent_id, 0u);
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(g.edges()[i].parent_id, 1u);
    EXPECT_EQ(g.edges()[4].parent_id, 2u);
}

TEST(SplitEdge, DumbbellBridgePreservesLaplacian) {
    const auto g = generators::dumbbell();
    std::size_t bridge = g.m();
    for (std::size_t i = 0; i < g.m(); ++i)
        if (g.edges()[i].u == 3 && g.edges()[i].v == 4) bridge = i;
    ASSERT_LT(bridge, g.m());
    const auto s = split_edge(g, bridge, 10);
    EXPECT_EQ(s.m(), g.m() + 9);
    expect_matrix_near(laplacian(s), oracle::laplacian(g), 1e-12);
}

TEST(Recombine, InverseOfSplit) {
    const auto g = recombine(split_edge(WeightedGraph::from_edges(2, {{0, 1, 1.0}}), 0, 4));
    ASSERT_EQ(g.m(), 1u);
    EXPECT_DOUBLE_EQ(g.edges()[0].weight, 1.0);
}

TEST(Recombine, IdentityWithoutSplits) {
    const auto g = generators::complete(5);
    EXPECT_EQ(recombine(g), g);
}

TEST(Recombine, SurvivingCopiesOfK4) {
    auto g = generators::complete(4);
    for (std::size_t e = 0; e < 6; ++e) g = split_edge(g, 3 * e, 3);
    ASSERT_EQ(g.m(), 18u);
    // Drop seven copies: all three of parent 0, two of parent 2, one each of parents 3 and 5.
    const std::vector<std::size_t> dropped = {0, 1, 2, 6, 7, 9, 15};
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < 18; ++i)
        if (std::find(dropped.begin(), dropped.end(), i) == dropped.end()) keep.push_back(i);
    const auto h = recombine(subgraph(g, keep));
    const std::vector<std::size_t> parents = {1, 2, 3, 4, 5};
    const std::vector<double> survivors = {3, 1, 2, 3, 2};
    ASSERT_EQ(h.m(), 5u);
    for (std::size_t i = 0; i < h.m(); ++i) {
        EXPECT_EQ(h.edges()[i].parent_id, parents[i]);
        EXPECT_NEAR(h.edges()[i].weight, survivors[i] / 3.0, 1e-15);
    }
}

TEST(Subgraph, Examples) {
    const auto k4 = generators::complete(4);
    const std::vector<std::size_t> all = {0, 1, 2, 3, 4, 5};
    EXPECT_EQ(subgraph(k4, all), k4);
    const auto empty = subgraph(k4, std::vector<std::size_t>{});
    EXPECT_EQ(empty.n(), 4u);
    EXPECT_EQ(empty.m(), 0u);
    // Edges 0, 1, 2 of K_4 are {0,1}, {0,2}, {0,3}: a star centred at 0.
    const auto star = subgraph(k4, std::vector<std::size_t>{0, 1, 2});
    EXPECT_EQ(laplacian(star), laplacian(generators::star(3)));
}

TEST(Subgraph, RejectsBadIndices) {
    const auto k4 = generators::complete(4);
    EXPECT_THROW(subgraph(k4, std::vector<std::size_t>{0, 0}), std::invalid_argument);
    EXPECT_THROW(subgraph(k4, std::vector<std::size_t>{6}), std::out_of_range);
}

TEST(Graph, InvariantsEnforced) {
    EXPECT_THROW(WeightedGraph(2, {{0, 2, 1.0, 0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph(2, {{1, 1, 1.0, 0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph(2, {{0, 1, 0.0, 0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph(2, {{0, 1, -1.0, 0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph(2, {{0, 1, std::nan(""), 0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph(3, {{0, 1, 1.0, 7}, {1, 2, 1.0, 7}}), std::invalid_argument);
    EXPECT_NO_THROW(WeightedGraph(3, {{0, 1, 1.0, 7}, {1, 0, 1.0, 7}}));
}

TEST(Graph, ComponentsAndWeights) {
    EXPECT_EQ(connected_components(oracle::load("disconnected_two_edges")), 2u);
    EXPECT_EQ(connected_components(oracle::load("dumbbell")), 1u);
    EXPECT_EQ(connected_components(oracle::load("dumbbell_minus_bridge")), 2u);
    EXPECT_DOUBLE_EQ(oracle::load("weighted_triangle").total_weight(), 4.25);
    EXPECT_THROW(scale_weights(generators::path(3), 0.0), std::invalid_argument);
}

TEST(Generators, Shapes) {
    EXPECT_EQ(generators::complete(6).m(), 15u);
    EXPECT_EQ(generators::dumbbell().n(), 8u);
    EXPECT_EQ(generators::dumbbell().m(), 13u);
    EXPECT_EQ(generators::complete_bipartite(2, 3).m(), 6u);
    EXPECT_EQ(generators::cycle(6).m(), 6u);
    EXPECT_EQ(generators::star(5).n(), 6u);
    EXPECT_EQ(generators::parallel_edges(3).m(), 3u);
    const auto r = generators::random_connected(9, 20, 3);
    EXPECT_EQ(r.m(), 20u);
    EXPECT_EQ(connected_components(r), 1u);
    EXPECT_EQ(r, generators::random_connected(9, 20, 3));
}

TEST(GraphIo, ParsesMinimalInput) {
    std::istringstream in("2 1\n0 1 1.0\n");
    const auto g = parse_graph(in);
    EXPECT_EQ(g.n(), 2u);
    ASSERT_EQ(g.m(), 1u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1, 1.0, 0}));
}

TEST(GraphIo, CommentsBlankLinesAndCrlf) {
    std::istringstream in("# header\r\n\r\n3 2\r\n  # note\n0 1 2\r\n1 2 0.5\n\n");
    const auto g = parse_graph(in);
    EXPECT_EQ(g.m(), 2u);
    EXPECT_DOUBLE_EQ(g.edges()[1].weight, 0.5);
}

struct BadInput {
    std::string text;
    std::size_t line;
    std::string fragment;
};

class GraphIoErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(GraphIoErrors, ReportsLine) {
    std::istringstream in(GetParam().text);
    try {
        parse_graph(in);
        FAIL() << "accepted: " << GetParam().text;
    } catch (const GraphFormatError& e) {
        EXPECT_EQ(e.line(), GetParam().line) << e.what();
        EXPECT_NE(std::string(e.what()).find(GetParam().fragment), std::string::npos) << e.what();
    }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, GraphIoErrors,
    ::testing::Values(BadInput{"3 1\n0 0 1.0\n", 2, "self-loop"}, BadInput{"", 0, ""},
                      BadInput{"x y\n", 1, ""}, BadInput{"0 0\n", 1, ""}, BadInput{"2 1\n0 5 1\n", 2, "range"},
                      BadInput{"2 1\n0 1 -3\n", 2, "weight"}, BadInput{"2 1\n0 1 0\n", 2, "weight"},
                      BadInput{"2 1\n0 1\n", 2, ""}, BadInput{"2 1\n0 1 1\n0 1 1\n", 3, ""},
                      BadInput{"2 2\n0 1 1\n", 0, ""}, BadInput{"2 1\n0 1 nan\n", 2, "weight"}));

TEST(GraphIo, MissingFileNamesPath) {
    EXPECT_THROW(read_graph("/nonexistent/graph.txt"), std::exception);
}

TEST(GraphIo, FixtureRoundTripIsByteExact) {
    std::ifstream in(oracle::fixture("k6"), std::ios::binary);
    std::stringstream original;
    original << in.rdbuf();
    EXPECT_EQ(format_graph(oracle::load("k6")), original.str());
}

TEST(GraphIo, RandomRoundTrip) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> weight(1e-6, 1e6);
    for (int trial = 0; trial < 50; ++trial) {
        auto base = generators::random_connected(8, 16, static_cast<std::uint64_t>(trial));
        std::vector<Edge> edges = base.edges();
        for (Edge& e : edges) e.weight = weight(rng);
        const WeightedGraph g(8, edges);
        std::istringstream in(format_graph(g));
        EXPECT_EQ(parse_graph(in), g);
    }
}

TEST(GraphIo, ShortestDoubles) {
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(2.5), "2.5");
}

TEST(Properties, SplitRecombineRoundTrip) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = generators::random_connected(6, 10, static_cast<std::uint64_t>(trial), true);
        const std::size_t e = rng() % g.m();
        const std::size_t k = 1 + rng() % 64;
        const auto s = split_edge(g, e, k);
        const Eigen::MatrixXd lg = oracle::laplacian(g);
        const Eigen::MatrixXd ls = oracle::laplacian(s);
        EXPECT_LE((lg - ls).cwiseAbs().maxCoeff(), 1e-12 * lg.cwiseAbs().maxCoeff());
        const auto r = recombine(s);
        ASSERT_EQ(r.m(), g.m());
        for (std::size_t i = 0; i < g.m(); ++i) {
            EXPECT_EQ(r.edges()[i].u, g.edges()[i].u);
            EXPECT_NEAR(r.edges()[i].weight, g.edges()[i].weight, 1e-12 * g.edges()[i].weight);
        }
    }
}

}  // namespace
}  // namespace kss
