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

#include "kssparse/leverage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kssparse/certify.hpp"

namespace kss {

NormalizedEdges::NormalizedEdges(const WeightedGraph& g) : m_(g.m()) {
    const RangeFrame frame = range_frame(g);
    rank_ = frame.rank;
    coords_.assign(m_ * rank_, 0.0);
    for (std::size_t e = 0; e < m_; ++e) {
        const Edge& edge = g.edges()[e];
        const std::size_t lo = std::min(edge.u, edge.v);
        const std::size_t hi = std::max(edge.u, edge.v);
        const double s = std::sqrt(edge.weight);
        double* out = coords_.data() + e * rank_;
        for (std::size_t r = 0; r < rank_; ++r) out[r] = s * (frame.whitening(r, lo) - frame.whitening(r, hi));
    }
}

LeverageProfile leverage_scores(const WeightedGraph& g) {
    if (g.m() == 0) throw std::invalid_argument("leverage scores need at least one edge");
    const NormalizedEdges normalized(g);
    LeverageProfile profile;
    profile.n = g.n();
    profile.components = connected_components(g);
    profile.scores.resize(g.m());
    for (std::size_t e = 0; e < g.m(); ++e) {
        const auto u = normalized[e];
        double l = 0.0;
        for (double x : u) l += x * x;
        profile.sum += l;
        profile.scores[e] = std::clamp(l, 0.0, 1.0);
        if (profile.scores[e] > profile.max) {
            profile.max = profile.scores[e];
            profile.argmax = e;
        }
    }
    return profile;
}

}  // namespace kss
