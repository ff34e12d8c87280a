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

#include "kssparse/graph.hpp"

namespace kss {

/// Per-edge leverage scores w_e (delta_u - delta_v)^T L^+ (delta_u - delta_v).
struct LeverageProfile {
    std::vector<double> scores;  ///< clamped to [0, 1]
    double max = 0.0;
    std::size_t argmax = 0;
    double sum = 0.0;
    std::size_t n = 0;
    std::size_t components = 0;

    /// n - (#components): the value the scores sum to.
    double expected_sum() const { return static_cast<double>(n - components); }
};

/// Incidence vectors mapped into the coordinates where L_G is the identity on
/// its range: u_e = Lambda_r^{-1/2} V_r^T b_e. Then sum_e u_e u_e^T = I and
/// |u_e|^2 is the leverage of e.
class NormalizedEdges {
public:
    explicit NormalizedEdges(const WeightedGraph& g);

    std::size_t rank() const { return rank_; }
    std::size_t m() const { return m_; }
    std::span<const double> operator[](std::size_t e) const { return {coords_.data() + e * rank_, rank_}; }

private:
    std::size_t rank_ = 0;
    std::size_t m_ = 0;
    std::vector<double> coords_;
};

/// Throws std::invalid_argument when the graph has no edges.
LeverageProfile leverage_scores(const WeightedGraph& g);

}  // namespace kss
