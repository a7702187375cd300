#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "polymc/checker.hpp"
#include "polymc/maze.hpp"
#include "polymc/spec_language.hpp"

namespace {

const polymc::KripkeModel& model(int edge) {
  static std::map<int, std::unique_ptr<polymc::KripkeModel>> cache;
  auto& slot = cache[edge];
  if (!slot) {
    polymc::MazeParams p;
    p.grid = {edge, edge, edge};
    p.seed = 7;
    slot = std::make_unique<polymc::KripkeModel>(polymc::build_kripke(polymc::generate_maze(p).model));
  }
  return *slot;
}

void BM_Gamma(benchmark::State& state) {
  const polymc::KripkeModel& m = model(static_cast<int>(state.range(0)));
  const polymc::SatSet phi = m.atom("W") | m.atom("corridor");
  const polymc::SatSet psi = m.atom("G");
  for (auto _ : state) benchmark::DoNotOptimize(polymc::check_gamma(m, phi, psi));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}

void BM_Box(benchmark::State& state) {
  const polymc::KripkeModel& m = model(static_cast<int>(state.range(0)));
  const polymc::SatSet phi = m.atom("W") | m.atom("corridor");
  for (auto _ : state) benchmark::DoNotOptimize(polymc::check_box(m, phi));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}

void BM_MazeQueries(benchmark::State& state) {
  const polymc::KripkeModel& m = model(static_cast<int>(state.range(0)));
  const polymc::TaskGraph graph = polymc::build_task_graph(polymc::load_spec(POLYMC_MAZE_SPEC));
  polymc::RunOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(polymc::run(m, graph, opts));
  state.counters["tasks"] = static_cast<double>(graph.size());
}

}  // namespace

BENCHMARK(BM_Gamma)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Box)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MazeQueries)->Args({8, 1})->Args({8, 4})->Args({12, 1})->Unit(benchmark::kMillisecond);
