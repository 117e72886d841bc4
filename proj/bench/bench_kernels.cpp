// Serial vs OpenMP paths of the dataset-level kernels on MUTAG.

#include <benchmark/benchmark.h>

#include "sgn/dataset_io.hpp"
#include "sgn/experiment.hpp"
#include "sgn/feature_matrix.hpp"

namespace {

const sgn::GraphDataset& mutag() {
  static const sgn::GraphDataset ds = sgn::load_tu_dataset(SGN_DATA_ROOT "/MUTAG", "MUTAG");
  return ds;
}

sgn::Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? sgn::Execution::kSerial : sgn::Execution::kParallel;
}

void BM_BuildSgn2(benchmark::State& state) {
  const auto& ds = mutag();
  for (auto _ : state) {
    auto graphs = sgn::build_sgn_graphs(ds.graphs, {2, sgn::SgnRule::kIteratedLine}, exec_of(state));
    benchmark::DoNotOptimize(graphs.data());
  }
}
BENCHMARK(BM_BuildSgn2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HandcraftedOrder2(benchmark::State& state) {
  const auto& ds = mutag();
  const auto graphs = sgn::build_sgn_graphs(ds.graphs, {2, sgn::SgnRule::kIteratedLine});
  for (auto _ : state) {
    auto m = sgn::handcrafted_matrix(graphs, 2, {}, exec_of(state));
    benchmark::DoNotOptimize(m.values.data());
  }
}
BENCHMARK(BM_HandcraftedOrder2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Repetitions(benchmark::State& state) {
  const auto& ds = mutag();
  const auto blocks = sgn::compute_order_blocks(ds, 2, {}).blocks;
  sgn::ExperimentOptions opts;
  opts.repetitions = 20;
  opts.exec = exec_of(state);
  for (auto _ : state) {
    auto r = sgn::run_combination(blocks, ds.labels, {0, 1, 2}, opts);
    benchmark::DoNotOptimize(r.mean_f1);
  }
}
BENCHMARK(BM_Repetitions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
