#include <benchmark/benchmark.h>

#include <map>

#include "polymc/kripke.hpp"
#include "polymc/maze.hpp"

namespace {

// Mazes are cached per grid edge so the generator stays out of the timings.
const polymc::Maze& maze(int edge) {
  static std::map<int, polymc::Maze> cache;
  auto it = cache.find(edge);
  if (it == cache.end()) {
    polymc::MazeParams p;
    p.grid = {edge, edge, edge};
    p.seed = 7;
    it = cache.emplace(edge, polymc::generate_maze(p)).first;
  }
  return it->second;
}

void BM_CellTable(benchmark::State& state) {
  const polymc::Maze& m = maze(static_cast<int>(state.range(0)));
  std::size_t n = 0;
  for (auto _ : state) {
    auto table = polymc::build_cell_table(m.model);
    n = table.size();
    benchmark::DoNotOptimize(table);
  }
  state.counters["cells"] = static_cast<double>(n);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_Kripke(benchmark::State& state) {
  const polymc::Maze& m = maze(static_cast<int>(state.range(0)));
  std::size_t n = 0;
  for (auto _ : state) {
    auto k = polymc::build_kripke(m.model);
    n = k.size();
    benchmark::DoNotOptimize(k);
  }
  state.counters["cells"] = static_cast<double>(n);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_GenerateMaze(benchmark::State& state) {
  polymc::MazeParams p;
  const int edge = static_cast<int>(state.range(0));
  p.grid = {edge, edge, edge};
  for (auto _ : state) benchmark::DoNotOptimize(polymc::generate_maze(p));
}

}  // namespace

BENCHMARK(BM_CellTable)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kripke)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateMaze)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
