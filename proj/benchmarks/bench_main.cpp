#include <benchmark/benchmark.h>

#include <random>

#include "orbitcode/orbitcode.hpp"

using namespace orbitcode;

namespace {

std::string fixture(const std::string& relative) {
    return std::string(FIXTURES_DIR) + "/" + relative;
}

Code random_code(int length, std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uint64_t mask = length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
    std::vector<std::uint64_t> words;
    while (words.size() < size) {
        words.push_back(rng() & mask);
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
    }
    return make_code(length, std::move(words));
}

void BM_WordAction(benchmark::State& state) {
    auto file = load_group_file(fixture("24_4/group.txt"));
    PermutationWordAction action(file.group.generators().front());
    auto seeds = load_seeds_file(fixture("24_4/seeds.txt"));
    std::uint64_t word = seeds.front().value();
    for (auto _ : state) {
        word = action.apply(word);
        benchmark::DoNotOptimize(word);
    }
}
BENCHMARK(BM_WordAction);

void BM_OrbitBFS(benchmark::State& state) {
    auto file = load_group_file(fixture("24_4/group.txt"));
    auto seeds = load_seeds_file(fixture("24_4/seeds.txt"));
    for (auto _ : state) {
        auto orbit = compute_orbit(file.group, seeds.front());
        benchmark::DoNotOptimize(orbit.size);
    }
}
BENCHMARK(BM_OrbitBFS)->Unit(benchmark::kMillisecond);

void BM_OrbitReducedVerify(benchmark::State& state) {
    auto file = load_group_file(fixture("24_4/group.txt"));
    auto seeds = load_seeds_file(fixture("24_4/seeds.txt"));
    int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto report = verify_orbit_reduced(file.group, seeds, threads);
        benchmark::DoNotOptimize(report.min_distance);
    }
}
BENCHMARK(BM_OrbitReducedVerify)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FullPairwiseVerify(benchmark::State& state) {
    auto code = random_code(24, static_cast<std::size_t>(state.range(0)), 12345);
    for (auto _ : state) {
        auto report = verify_full_pairwise(code, 1);
        benchmark::DoNotOptimize(report.min_distance);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(code.size() * (code.size() - 1) / 2));
}
BENCHMARK(BM_FullPairwiseVerify)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_GraphBuild(benchmark::State& state) {
    auto file = load_group_file(fixture("24_10/group.txt"));
    auto seeds = load_seeds_file(fixture("24_10/seeds.txt"));
    std::vector<Orbit> orbits;
    for (const auto& seed : seeds) orbits.push_back(compute_orbit(file.group, seed));
    for (auto _ : state) {
        auto graph = build_graph(file.group, orbits, 10, 1);
        benchmark::DoNotOptimize(graph.edge_count());
    }
}
BENCHMARK(BM_GraphBuild)->Unit(benchmark::kMillisecond);

void BM_ExactClique(benchmark::State& state) {
    std::mt19937_64 rng(99);
    int n = static_cast<int>(state.range(0));
    CompatibilityGraph g;
    g.adj = AdjacencyMatrix(n);
    for (int i = 0; i < n; ++i) g.nodes.push_back({"", 1 + rng() % 10});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 100 < 60) g.adj.set(i, j);
    for (auto _ : state) {
        auto result = max_weight_clique_exact(g);
        benchmark::DoNotOptimize(result.weight);
    }
}
BENCHMARK(BM_ExactClique)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
