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

#include "kssparse/graph.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace kss {

namespace {

std::pair<std::size_t, std::size_t> endpoints(const Edge& e) {
    return e.u < e.v ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    std::unordered_map<std::size_t, std::pair<std::size_t, std::size_t>> lineage;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        const std::string where = "edge " + std::to_string(i) + ": ";
        if (e.u >= n_ || e.v >= n_) throw std::invalid_argument(where + "endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument(where + "self-loop");
        if (!std::isfinite(e.weight) || e.weight <= 0.0)
            throw std::invalid_argument(where + "weight must be positive and finite");
        auto [it, inserted] = lineage.emplace(e.parent_id, endpoints(e));
        if (!inserted && it->second != endpoints(e))
            throw std::invalid_argument(where + "parent id " + std::to_string(e.parent_id) +
                                        " is shared by records with different endpoints");
    }
}

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::span<const Spec> edges) {
    std::vector<Edge> records;
    records.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        records.push_back({edges[i].u, edges[i].v, edges[i].weight, i});
    return WeightedGraph(n, std::move(records));
}

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::initializer_list<Spec> edges) {
    return from_edges(n, std::span<const Spec>(edges.begin(), edges.size()));
}

const Edge& WeightedGraph::edge(std::size_t i) const {
    if (i >= edges_.size()) throw std::out_of_range("edge index " + std::to_string(i) + " out of range");
    return edges_[i];
}

double WeightedGraph::total_weight() const {
    double total = 0.0;
    for (const Edge& e : edges_) total += e.weight;
    return total;
}

Matrix laplacian(const WeightedGraph& g) {
    Matrix l(g.n(), g.n());
    for (const Edge& e : g.edges()) {
        l(e.u, e.u) += e.weight;
        l(e.v, e.v) += e.weight;
        l(e.u, e.v) -= e.weight;
        l(e.v, e.u) -= e.weight;
    }
    return l;
}

std::vector<double> incidence_vector(const WeightedGraph& g, std::size_t edge_index) {
    const Edge& e = g.edge(edge_index);
    std::vector<double> b(g.n(), 0.0);
    const auto [lo, hi] = endpoints(e);
    const double s = std::sqrt(e.weight);
    b[lo] = s;
    b[hi] = -s;
    return b;
}

WeightedGraph split_edge(const WeightedGraph& g, std::size_t edge_index, std::size_t k) {
    if (k == 0) throw std::invalid_argument("split multiplicity must be at least 1");
    const Edge& target = g.edge(edge_index);
    if (k == 1) return g;

    std::vector<Edge> out;
    out.reserve(g.m() + k - 1);
    const auto& edges = g.edges();
    out.insert(out.end(), edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
    Edge copy = target;
    copy.weight = target.weight / static_cast<double>(k);
    out.insert(out.end(), k, copy);
    out.insert(out.end(), edges.begin() + static_cast<std::ptrdiff_t>(edge_index) + 1, edges.end());
    return WeightedGraph(g.n(), std::move(out));
}

WeightedGraph recombine(const WeightedGraph& g) {
    std::vector<Edge> out;
    std::unordered_map<std::size_t, std::size_t> slot;
    for (const Edge& e : g.edges()) {
        auto [it, inserted] = slot.emplace(e.parent_id, out.size());
        if (inserted)
            out.push_back(e);
        else
            out[it->second].weight += e.weight;
    }
    return WeightedGraph(g.n(), std::move(out));
}

WeightedGraph subgraph(const WeightedGraph& g, std::span<const std::size_t> edge_indices) {
    std::vector<bool> seen(g.m(), false);
    std::vector<Edge> out;
    out.reserve(edge_indices.size());
    for (std::size_t idx : edge_indices) {
        if (idx >= g.m()) throw std::out_of_range("subgraph: edge index " + std::to_string(idx) + " out of range");
        if (seen[idx]) throw std::invalid_argument("subgraph: duplicate edge index " + std::to_string(idx));
        seen[idx] = true;
        out.push_back(g.edges()[idx]);
    }
    return WeightedGraph(g.n(), std::move(out));
}

WeightedGraph relabel_parents(const WeightedGraph& g) {
    std::vector<Edge> out = g.edges();
    for (std::size_t i = 0; i < out.size(); ++i) out[i].parent_id = i;
    return WeightedGraph(g.n(), std::move(out));
}

WeightedGraph scale_weights(const WeightedGraph& g, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) throw std::invalid_argument("scale factor must be positive");
    std::vector<Edge> out = g.edges();
    for (Edge& e : out) e.weight *= factor;
    return WeightedGraph(g.n(), std::move(out));
}

std::size_t connected_components(const WeightedGraph& g) {
    DisjointSets sets(g.n());
    std::size_t components = g.n();
    for (const Edge& e : g.edges())
        if (sets.unite(e.u, e.v)) --components;
    return components;
}

}  // namespace kss
