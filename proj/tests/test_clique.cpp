#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace orbitcode;

namespace {

CompatibilityGraph path_graph(std::vector<std::uint64_t> weights) {
    CompatibilityGraph g;
    g.adj = AdjacencyMatrix(static_cast<int>(weights.size()));
    for (std::uint64_t w : weights) g.nodes.push_back({"", w});
    for (int i = 0; i + 1 < static_cast<int>(weights.size()); ++i) g.adj.set(i, i + 1);
    return g;
}

CompatibilityGraph complete_graph(std::vector<std::uint64_t> weights) {
    CompatibilityGraph g;
    int n = static_cast<int>(weights.size());
    g.adj = AdjacencyMatrix(n);
    for (std::uint64_t w : weights) g.nodes.push_back({"", w});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.adj.set(i, j);
    return g;
}

}  // namespace

TEST_CASE("the empty graph solves to the empty clique") {
    CompatibilityGraph empty;
    auto result = max_weight_clique_exact(empty);
    CHECK(result.weight == 0);
    CHECK(result.members.empty());
    CHECK(result.optimal);
}

TEST_CASE("a single node is its own maximum clique") {
    auto g = path_graph({7});
    auto result = max_weight_clique_exact(g);
    CHECK(result.weight == 7);
    CHECK(result.members == std::vector<int>{0});
    CHECK(result.optimal);
}

TEST_CASE("path graph 1-5-1 solves to weight 6 with the lex-smallest members") {
    auto g = path_graph({1, 5, 1});
    auto result = max_weight_clique_exact(g);
    CHECK(result.weight == 6);
    // {0,1} and {1,2} both weigh 6; the lexicographically smaller set wins.
    CHECK(result.members == std::vector<int>{0, 1});
}

TEST_CASE("exact solver matches subset enumeration on graphs up to 20 nodes") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        double density = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        auto g = oracles::random_graph(n, density, rng);
        auto expected = oracles::max_weight_clique_subsets(g);
        auto result = max_weight_clique_exact(g);
        REQUIRE(result.optimal);
        CHECK(result.weight == expected.weight);
        CHECK(result.members == expected.members);  // lex tie-break matches the oracle
    }
}

TEST_CASE("exact solver matches branch enumeration up to 30 nodes") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 21 + static_cast<int>(rng() % 10);
        double density = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        auto g = oracles::random_graph(n, density, rng);
        auto result = max_weight_clique_exact(g);
        REQUIRE(result.optimal);
        CHECK(result.weight == oracles::max_weight_clique_branch(g));
    }
}

TEST_CASE("solver results are always cliques") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 40);
        auto g = oracles::random_graph(n, 0.5, rng);
        CHECK(is_clique(g, max_weight_clique_exact(g).members));
        CHECK(is_clique(g, max_weight_clique_heuristic(g, {100, trial + 1u}).members));
    }
}

TEST_CASE("identical inputs reproduce identical results") {
    std::mt19937_64 rng(89);
    auto g = oracles::random_graph(30, 0.6, rng);
    auto a = max_weight_clique_exact(g);
    auto b = max_weight_clique_exact(g);
    CHECK(a.weight == b.weight);
    CHECK(a.members == b.members);
    auto ha = max_weight_clique_heuristic(g, {500, 42});
    auto hb = max_weight_clique_heuristic(g, {500, 42});
    CHECK(ha.weight == hb.weight);
    CHECK(ha.members == hb.members);
}

TEST_CASE("node budget exhaustion reports a non-optimal result") {
    std::mt19937_64 rng(97);
    auto g = oracles::random_graph(60, 0.9, rng);
    SolveBudget tiny;
    tiny.node_limit = 5;
    auto result = max_weight_clique_exact(g, tiny);
    CHECK_FALSE(result.optimal);
    CHECK(is_clique(g, result.members));
    auto full = max_weight_clique_exact(g);
    CHECK(full.optimal);
    CHECK(full.weight >= result.weight);
}

TEST_CASE("heuristic takes the whole complete graph") {
    auto g = complete_graph({3, 1, 4, 1, 5});
    auto result = max_weight_clique_heuristic(g, {10, 1});
    CHECK(result.weight == 14);
    CHECK(result.members == std::vector<int>{0, 1, 2, 3, 4});
    CHECK_FALSE(result.optimal);
}

TEST_CASE("heuristic finds an isolated heavy vertex") {
    // Vertex 3 is isolated and heavier than everything else combined.
    CompatibilityGraph g;
    g.adj = AdjacencyMatrix(4);
    g.nodes = {{"", 2}, {"", 3}, {"", 4}, {"", 100}};
    g.adj.set(0, 1);
    g.adj.set(1, 2);
    g.adj.set(0, 2);
    auto result = max_weight_clique_heuristic(g, {50, 7});
    CHECK(result.weight == 100);
    CHECK(result.members == std::vector<int>{3});
}

TEST_CASE("heuristic best-of-k is nondecreasing in k") {
    std::mt19937_64 rng(101);
    auto g = oracles::random_graph(40, 0.5, rng);
    std::uint64_t previous = 0;
    for (std::uint64_t k : {1u, 5u, 25u, 125u, 625u}) {
        auto result = max_weight_clique_heuristic(g, {k, 31});
        CHECK(result.weight >= previous);
        previous = result.weight;
    }
}

TEST_CASE("heuristic on the empty graph") {
    CompatibilityGraph empty;
    auto result = max_weight_clique_heuristic(empty, {10, 1});
    CHECK(result.weight == 0);
    CHECK(result.members.empty());
}

TEST_CASE("the degree-34 group's full orbit graph solves to 5632") {
    // Enumerates every orbit, not just the shipped representatives: the
    // optimum over all 216 admissible orbits matches the shipped code size.
    auto file = load_group_file(testutil::fixture("18_4/group.txt"));
    auto orbits = enumerate_orbit_reps(file.group);
    std::uint64_t total = 0;
    for (const auto& orbit : orbits) total += orbit.size;
    CHECK(total == std::uint64_t{1} << 17);

    auto graph = build_graph(file.group, orbits, 3, 2);
    CHECK(graph.nodes.size() == 216);
    auto result = max_weight_clique_exact(graph, {120.0, 0});
    REQUIRE(result.optimal);
    CHECK(result.weight == 5632);
    CHECK(result.members.size() == 13);
}

TEST_CASE("the 24_4 fixture orbits form a clique of weight 327680") {
    auto file = load_group_file(testutil::fixture("24_4/group.txt"));
    auto seeds = load_seeds_file(testutil::fixture("24_4/seeds.txt"));
    std::vector<Orbit> orbits;
    for (const auto& seed : seeds) orbits.push_back(compute_orbit(file.group, seed));
    auto graph = build_graph(file.group, orbits, 4);
    CHECK(graph.nodes.size() == 16);
    auto heuristic = max_weight_clique_heuristic(graph, {100, 3});
    CHECK(heuristic.weight == 327680);
    auto exact = max_weight_clique_exact(graph);
    CHECK(exact.weight == 327680);
    CHECK(exact.optimal);
}
