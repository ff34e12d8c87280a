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
#include <cstdint>

#include "kssparse/graph.hpp"

namespace kss::generators {

WeightedGraph complete(std::size_t n, double weight = 1.0);
WeightedGraph path(std::size_t n);
WeightedGraph cycle(std::size_t n);
/// Centre 0 joined to `spokes` leaves.
WeightedGraph star(std::size_t spokes);
WeightedGraph complete_bipartite(std::size_t left, std::size_t right);
/// Two copies of K_k joined by a single bridge between vertex k-1 and vertex k.
WeightedGraph dumbbell(std::size_t k = 4);
/// `copies` parallel unit-weight edges between vertices 0 and 1.
WeightedGraph parallel_edges(std::size_t copies, double weight = 1.0);

/// Connected simple graph: a random spanning tree plus uniformly chosen extra
/// pairs until `m` edges exist. Weights are 1 unless `weighted`, in which case
/// they are drawn uniformly from [0.5, 2). Deterministic in `seed`.
WeightedGraph random_connected(std::size_t n, std::size_t m, std::uint64_t seed, bool weighted = false);

}  // namespace kss::generators
