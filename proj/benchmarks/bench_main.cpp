#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "rdpivot/rdpivot.hpp"

namespace {

using namespace rd;

Configuration blob(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Position> cells{Position{}};
    while (cells.size() < n) {
        const Position p = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
        const Position q = p + kNeighborOffsets[std::uniform_int_distribution<std::size_t>(0, 11)(rng)];
        if (std::find(cells.begin(), cells.end(), q) == cells.end()) cells.push_back(q);
    }
    return Configuration(cells);
}

void BM_LegalMoves(benchmark::State& state) {
    const auto c = blob(static_cast<std::size_t>(state.range(0)), 3);
    const auto model = state.range(1) ? MoveModel::Monkey : MoveModel::Restricted;
    const auto& cat = MoveCatalog::builtin();
    for (auto _ : state) benchmark::DoNotOptimize(legal_moves(c, cat, model));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LegalMoves)->ArgsProduct({{10, 100, 1000}, {0, 1}});

void BM_CappedRoofMobility(benchmark::State& state) {
    const auto& cat = MoveCatalog::builtin();
    for (auto _ : state) {
        const auto c = capped_roof(static_cast<int>(state.range(0)), 3);
        benchmark::DoNotOptimize(mobility(c, cat, MoveModel::Restricted));
    }
}
BENCHMARK(BM_CappedRoofMobility)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Explore(benchmark::State& state) {
    const auto c = blob(static_cast<std::size_t>(state.range(0)), 5);
    SearchOptions opts;
    opts.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(explore(c, MoveCatalog::builtin(), MoveModel::Monkey, {}, opts));
}
BENCHMARK(BM_Explore)->ArgsProduct({{4, 5}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_SuperRigid(benchmark::State& state) {
    const auto c = super_rigid_config();
    for (auto _ : state) benchmark::DoNotOptimize(is_super_rigid(c, MoveCatalog::builtin(), MoveModel::Monkey));
}
BENCHMARK(BM_SuperRigid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
