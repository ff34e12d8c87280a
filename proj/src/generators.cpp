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

#include "kssparse/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kss::generators {

namespace {

using Spec = WeightedGraph::Spec;

WeightedGraph build(std::size_t n, const std::vector<Spec>& specs) {
    return WeightedGraph::from_edges(n, std::span<const Spec>(specs));
}

}  // namespace

WeightedGraph complete(std::size_t n, double weight) {
    std::vector<Spec> specs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) specs.push_back({i, j, weight});
    return build(n, specs);
}

WeightedGraph path(std::size_t n) {
    std::vector<Spec> specs;
    for (std::size_t i = 0; i + 1 < n; ++i) specs.push_back({i, i + 1, 1.0});
    return build(n, specs);
}

WeightedGraph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Spec> specs;
    for (std::size_t i = 0; i < n; ++i) specs.push_back({i, (i + 1) % n, 1.0});
    return build(n, specs);
}

WeightedGraph star(std::size_t spokes) {
    std::vector<Spec> specs;
    for (std::size_t i = 1; i <= spokes; ++i) specs.push_back({0, i, 1.0});
    return build(spokes + 1, specs);
}

WeightedGraph complete_bipartite(std::size_t left, std::size_t right) {
    std::vector<Spec> specs;
    for (std::size_t i = 0; i < left; ++i)
        for (std::size_t j = 0; j < right; ++j) specs.push_back({i, left + j, 1.0});
    return build(left + right, specs);
}

WeightedGraph dumbbell(std::size_t k) {
    std::vector<Spec> specs;
    for (std::size_t half = 0; half < 2; ++half) {
        const std::size_t base = half * k;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) specs.push_back({base + i, base + j, 1.0});
    }
    specs.push_back({k - 1, k, 1.0});
    return build(2 * k, specs);
}

WeightedGraph parallel_edges(std::size_t copies, double weight) {
    std::vector<Spec> specs(copies, Spec{0, 1, weight});
    return build(2, specs);
}

WeightedGraph random_connected(std::size_t n, std::size_t m, std::uint64_t seed, bool weighted) {
    if (n < 2) throw std::invalid_argument("random_connected needs n >= 2");
    if (m < n - 1 || m > n * (n - 1) / 2) throw std::invalid_argument("random_connected: m out of range for n");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> weight_dist(0.5, 2.0);
    auto draw_weight = [&] { return weighted ? weight_dist(rng) : 1.0; };

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::set<std::pair<std::size_t, std::size_t>> used;
    std::vector<Spec> specs;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::size_t a = order[i];
        std::size_t b = order[pick(rng)];
        used.insert({std::min(a, b), std::max(a, b)});
        specs.push_back({std::min(a, b), std::max(a, b), draw_weight()});
    }
    std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
    while (specs.size() < m) {
        std::size_t a = vertex(rng);
        std::size_t b = vertex(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!used.insert({a, b}).second) continue;
        specs.push_back({a, b, draw_weight()});
    }
    return build(n, specs);
}

}  // namespace kss::generators
