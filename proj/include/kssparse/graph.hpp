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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kssparse/matrix.hpp"

namespace kss {

/// One record of an undirected multigraph.
///
/// `parent_id` names the original edge this record descends from. Records
/// produced by splitting an edge share the parent's id and endpoint pair;
/// an unsplit edge carries its own index.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    double weight = 1.0;
    std::size_t parent_id = 0;

    bool operator==(const Edge&) const = default;
};

/// Weighted undirected multigraph on vertices [0, n).
///
/// Edges form an ordered multiset: parallel records between the same pair are
/// kept distinct. Values are immutable once built; every operation returns a
/// new graph.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validates every invariant and throws std::invalid_argument on the first
    /// violation (endpoint out of range, self-loop, non-positive or non-finite
    /// weight, or a parent id shared by records with different endpoints).
    WeightedGraph(std::size_t n, std::vector<Edge> edges);

    /// Builds a graph whose records are their own parents (parent_id = index).
    struct Spec {
        std::size_t u;
        std::size_t v;
        double weight = 1.0;
    };
    static WeightedGraph from_edges(std::size_t n, std::span<const Spec> edges);
    static WeightedGraph from_edges(std::size_t n, std::initializer_list<Spec> edges);

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const;

    double total_weight() const;

    bool operator==(const WeightedGraph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Sum of w_e (delta_u - delta_v)(delta_u - delta_v)^T over all records.
Matrix laplacian(const WeightedGraph& g);

/// sqrt(w) at the lower endpoint, -sqrt(w) at the higher one, zero elsewhere.
std::vector<double> incidence_vector(const WeightedGraph& g, std::size_t edge_index);

/// Replaces record `edge_index` with `k` parallel copies of weight w/k, placed
/// consecutively where the original record was.
WeightedGraph split_edge(const WeightedGraph& g, std::size_t edge_index, std::size_t k);

/// Merges all records sharing a parent id into one record carrying the summed
/// weight. Output order follows the first occurrence of each parent id.
WeightedGraph recombine(const WeightedGraph& g);

/// Same vertex set, only the listed records (in the listed order).
WeightedGraph subgraph(const WeightedGraph& g, std::span<const std::size_t> edge_indices);

/// Resets every parent id to the record's own index.
WeightedGraph relabel_parents(const WeightedGraph& g);

/// Multiplies every weight by `factor` (> 0).
WeightedGraph scale_weights(const WeightedGraph& g, double factor);

std::size_t connected_components(const WeightedGraph& g);

}  // namespace kss
