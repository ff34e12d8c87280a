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

#include "kssparse/partition.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <thread>

#include "kssparse/linalg.hpp"

namespace kss {

std::string_view to_string(PartitionMethod m) {
    switch (m) {
        case PartitionMethod::Brute: return "brute";
        case PartitionMethod::Random: return "random";
        case PartitionMethod::Auto: return "auto";
    }
    return "?";
}

PartitionMethod parse_partition_method(std::string_view name) {
    if (name == "brute") return PartitionMethod::Brute;
    if (name == "random") return PartitionMethod::Random;
    if (name == "auto") return PartitionMethod::Auto;
    throw std::invalid_argument("unknown partition method '" + std::string(name) + "'");
}

std::vector<std::size_t> PartitionResult::edges_on(int s) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < side.size(); ++e)
        if (side[e] == s) out.push_back(e);
    return out;
}

std::size_t PartitionResult::count(int s) const {
    return static_cast<std::size_t>(std::count(side.begin(), side.end(), s));
}

std::pair<double, double> PartitionResult::factors(int s) const {
    return s == 1 ? std::pair{r_min, r_max} : std::pair{1.0 - r_max, 1.0 - r_min};
}

namespace {

constexpr double kTieTolerance = 1e-12;

struct Spectrum {
    double r_min = 0.0;
    double r_max = 0.0;
    double deviation() const { return std::max(r_max - 0.5, 0.5 - r_min); }
};

// Builds R_1 = sum over side-1 edges of u_e u_e^T and returns its extremes.
class DeviationMeter {
public:
    explicit DeviationMeter(const WeightedGraph& g) : edges_(g), work_(edges_.rank(), edges_.rank()) {}

    template <typename OnSide1>
    Spectrum measure(OnSide1 on_side1) {
        const std::size_t k = edges_.rank();
        work_ = Matrix(k, k);
        for (std::size_t e = 0; e < edges_.m(); ++e)
            if (on_side1(e)) work_.add_outer(edges_[e]);
        const std::vector<double> values = eigenvalues_sym(work_);
        return {values.front(), values.back()};
    }

    std::size_t rank() const { return edges_.rank(); }

private:
    NormalizedEdges edges_;
    Matrix work_;
};

void finish(PartitionResult& r, const WeightedGraph& g, const Spectrum& s) {
    r.r_min = s.r_min;
    r.r_max = s.r_max;
    r.deviation = s.deviation();
    r.alpha = leverage_scores(g).max;
    r.theoretical_bound = 5.0 * std::sqrt(r.alpha);
    r.satisfied_bound = r.deviation <= r.theoretical_bound;
    r.bound_vacuous = r.theoretical_bound >= 0.5;
}

void require_partitionable(const WeightedGraph& g) {
    if (g.m() < 2) throw PartitionError("partitioning needs at least two edges (m = " + std::to_string(g.m()) + ")");
}

// Lexicographic order of the ascending side-1 index sequences encoded by masks.
bool lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    const int j = std::countr_zero(a ^ b);
    const std::uint64_t above = j >= 63 ? 0 : (~std::uint64_t{0} << (j + 1));
    if ((a >> j) & 1U) return (b & above) != 0;
    return (a & above) == 0;
}

struct Candidate {
    std::uint64_t mask = 0;
    Spectrum spectrum;
    bool degenerate = true;
    bool valid = false;
};

bool better(const Candidate& a, const Candidate& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    const double da = a.spectrum.deviation();
    const double db = b.spectrum.deviation();
    if (da < db - kTieTolerance) return true;
    if (da > db + kTieTolerance) return false;
    if (a.degenerate != b.degenerate) return !a.degenerate;
    return lex_less(a.mask, b.mask);
}

}  // namespace

PartitionResult evaluate_partition(const WeightedGraph& g, std::span<const int> side) {
    if (side.size() != g.m()) throw std::invalid_argument("partition assignment length differs from edge count");
    for (int s : side)
        if (s != 1 && s != 2) throw std::invalid_argument("partition sides must be 1 or 2");
    DeviationMeter meter(g);
    PartitionResult r;
    r.side.assign(side.begin(), side.end());
    finish(r, g, meter.measure([&](std::size_t e) { return side[e] == 1; }));
    return r;
}

PartitionResult brute_force_partition(const WeightedGraph& g, const BruteForceOptions& options) {
    require_partitionable(g);
    if (options.cap > kMaxBruteForceCap)
        throw std::invalid_argument("brute-force cap " + std::to_string(options.cap) + " exceeds " +
                                    std::to_string(kMaxBruteForceCap));
    const std::size_t cap = options.cap;
    if (g.m() > cap)
        throw PartitionError("brute force limited to " + std::to_string(cap) + " edges, graph has " +
                             std::to_string(g.m()) + "; use the random method");

    const std::size_t m = g.m();
    const std::uint64_t total = std::uint64_t{1} << (m - 1);
    const std::uint64_t full = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
    const std::uint64_t per_chunk = (total + chunks - 1) / chunks;

    std::vector<Candidate> best(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        DeviationMeter meter(g);
        for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
            Candidate local;
            const std::uint64_t end = std::min(total, (c + 1) * per_chunk);
            for (std::uint64_t x = c * per_chunk; x < end; ++x) {
                Candidate cand;
                cand.mask = 1U | (x << 1);
                cand.degenerate = cand.mask == full;
                cand.valid = true;
                cand.spectrum = meter.measure([&](std::size_t e) { return ((cand.mask >> e) & 1U) != 0; });
                if (better(cand, local)) local = cand;
            }
            best[c] = local;
        }
    };

    std::size_t threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<std::size_t>(std::min<std::uint64_t>(threads, chunks));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    Candidate winner;
    for (const Candidate& c : best)
        if (better(c, winner)) winner = c;

    std::vector<int> side(m);
    for (std::size_t e = 0; e < m; ++e) side[e] = ((winner.mask >> e) & 1U) ? 1 : 2;
    PartitionResult r = evaluate_partition(g, side);
    r.method = PartitionMethod::Brute;
    r.candidates = total;
    return r;
}

PartitionResult random_partition(const WeightedGraph& g, std::uint64_t budget, std::uint64_t seed) {
    if (budget == 0) throw std::invalid_argument("random partition budget must be at least 1");
    require_partitionable(g);
    const std::size_t m = g.m();
    const std::size_t words = (m + 63) / 64;

    std::mt19937_64 rng(seed);
    DeviationMeter meter(g);
    std::vector<int> side(m);
    std::vector<int> best_side;
    Spectrum best_spectrum;
    bool best_degenerate = true;
    bool have = false;

    for (std::uint64_t draw = 0; draw < budget; ++draw) {
        std::size_t on_one = 0;
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t bits = rng();
            for (std::size_t b = 0; b < 64 && w * 64 + b < m; ++b) {
                side[w * 64 + b] = ((bits >> b) & 1U) ? 1 : 2;
                on_one += side[w * 64 + b] == 1;
            }
        }
        const Spectrum s = meter.measure([&](std::size_t e) { return side[e] == 1; });
        const bool degenerate = on_one == 0 || on_one == m;
        bool take = !have;
        if (have) {
            const double d = s.deviation();
            const double current = best_spectrum.deviation();
            take = d < current - kTieTolerance ||
                   (std::abs(d - current) <= kTieTolerance && best_degenerate && !degenerate);
        }
        if (take) {
            best_side = side;
            best_spectrum = s;
            best_degenerate = degenerate;
            have = true;
        }
    }

    PartitionResult r;
    r.side = std::move(best_side);
    finish(r, g, best_spectrum);
    r.method = PartitionMethod::Random;
    r.candidates = budget;
    return r;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

PartitionResult Partitioner::operator()(const WeightedGraph& g, std::uint64_t stream) const {
    const bool brute = method == PartitionMethod::Brute || (method == PartitionMethod::Auto && g.m() <= brute_cap);
    if (brute) return brute_force_partition(g, {brute_cap, threads});
    return random_partition(g, budget, splitmix64(seed ^ splitmix64(stream)));
}

std::pair<LoewnerWitness, LoewnerWitness> partition_bounds_check(const WeightedGraph& g, const PartitionResult& p) {
    if (p.side.size() != g.m()) throw std::invalid_argument("partition assignment length differs from edge count");
    const Matrix lg = laplacian(g);
    auto check = [&](int s) {
        const std::vector<std::size_t> idx = p.edges_on(s);
        const Matrix lh = laplacian(subgraph(g, idx));
        LoewnerWitness w;
        w.side = s;
        w.measured_deviation = p.deviation;
        w.theoretical_deviation = p.theoretical_bound;
        constexpr double tol = 1e-9;
        w.measured_lower = loewner_leq((0.5 - p.deviation) * lg, lh, tol);
        w.measured_upper = loewner_leq(lh, (0.5 + p.deviation) * lg, tol);
        w.theoretical_lower = loewner_leq((0.5 - p.theoretical_bound) * lg, lh, tol);
        w.theoretical_upper = loewner_leq(lh, (0.5 + p.theoretical_bound) * lg, tol);
        return w;
    };
    return {check(1), check(2)};
}

}  // namespace kss
