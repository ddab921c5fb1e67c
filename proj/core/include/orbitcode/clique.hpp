#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orbitcode/graph.hpp"

namespace orbitcode {

struct SolveBudget {
    double time_limit_seconds = 60.0;  // <= 0: unlimited
    std::uint64_t node_limit = 0;      // 0: unlimited
};

struct SolveStats {
    std::uint64_t nodes_expanded = 0;
    double seconds = 0.0;
};

struct CliqueResult {
    std::vector<int> members;  // node indices, ascending
    std::uint64_t weight = 0;
    bool optimal = false;      // weight proven maximum by a completed exact run
    SolveStats stats;
};

// Branch-and-bound in a fixed vertex order (weight descending, ties by degree
// descending then index), with the incremental bound c[i] = maximum clique
// weight within the first i+1 ordered vertices. When the search completes
// within budget the result is a maximum-weight clique and, among those, the
// one with the lexicographically smallest member index set; otherwise the
// best clique found so far with optimal=false.
CliqueResult max_weight_clique_exact(const CompatibilityGraph& g, const SolveBudget& budget = {});

struct HeuristicParams {
    std::uint64_t iterations = 10000;
    std::uint64_t rng_seed = 1;
};

// Repeated randomized greedy: grow a clique by weight-proportional sampling
// restricted to the common neighborhood, keep the best over all iterations.
// Deterministic for a fixed seed; optimal is always false.
CliqueResult max_weight_clique_heuristic(const CompatibilityGraph& g,
                                         const HeuristicParams& params = {});

// Every member pair adjacent and every member index valid.
bool is_clique(const CompatibilityGraph& g, std::span<const int> members);

}  // namespace orbitcode
