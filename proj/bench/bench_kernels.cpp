// Serial reference vs OpenMP kernels. The argument is the job count; 1 runs
// the serial path of each kernel.

#include <benchmark/benchmark.h>

#include "toggle/engine.hpp"
#include "toggle/lattice.hpp"
#include "toggle/parallel.hpp"
#include "toggle/petersen.hpp"
#include "toggle/qbf.hpp"
#include "toggle/solver.hpp"

using namespace toggle;

static void BM_PetersenTable(benchmark::State& state) {
  LabOptions o;
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rows = nimber_table({PetersenTag::P01, PetersenTag::P10, PetersenTag::P11}, 3, 11, 1, 5, o);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_PetersenTable)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_SolverRootSplit(benchmark::State& state) {
  SolverOptions o;
  o.jobs = static_cast<int>(state.range(0));
  auto pos = make_petersen_position({PetersenTag::P11, 12, 5});
  for (auto _ : state) {
    GrundySolver s(o);
    benchmark::DoNotOptimize(s.grundy(pos));
  }
}
BENCHMARK(BM_SolverRootSplit)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_NeverReplayableSweep(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  auto graphs = connected_graphs(9, 3);
  for (auto _ : state) {
    auto check = [&](std::size_t i) {
      return static_cast<int>(check_never_replayable(GamePosition::all_ones(graphs[i])).monotone);
    };
    auto res = jobs == 1 ? serial_map(graphs.size(), check) : parallel_map(graphs.size(), jobs, check);
    benchmark::DoNotOptimize(res.data());
  }
}
BENCHMARK(BM_NeverReplayableSweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_QbfEquivalence(benchmark::State& state) {
  auto batch = sample_instances(50, 2718, 4, 3);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = verify_equivalence_batch(batch, "bench", jobs);
    benchmark::DoNotOptimize(r.cases.data());
  }
}
BENCHMARK(BM_QbfEquivalence)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_SegmentValidation(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(validate_segment_tables(12, jobs).passed);
}
BENCHMARK(BM_SegmentValidation)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
