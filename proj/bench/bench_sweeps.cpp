#include <benchmark/benchmark.h>

#include "eulertrail/classify.hpp"
#include "eulertrail/connectivity.hpp"
#include "eulertrail/sweeps.hpp"
#include "eulertrail/trails.hpp"

using namespace eulertrail;

namespace {

const std::vector<Digraph>& t5() {
  static const std::vector<Digraph> ds = strong_tournaments(5);
  return ds;
}

Digraph strong_semicomplete_of(int n, std::uint64_t seed) {
  for (;; ++seed) {
    Digraph d = gen_random_semicomplete(n, 0.2, seed);
    if (is_k_arc_strong(d, 2)) return d;
  }
}

void BM_containment_sweep_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(containment_sweep_serial(t5()).failures);
}
void BM_containment_sweep_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(containment_sweep(t5(), static_cast<int>(st.range(0))).failures);
}
void BM_unavoidable_sweep_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(unavoidable_sweep_serial(t5()).failures);
}
void BM_unavoidable_sweep_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(unavoidable_sweep(t5(), static_cast<int>(st.range(0))).failures);
}

void BM_conjecture_serial(benchmark::State& st) {
  ConjectureOptions o{4, 8, 200, 1, 1};
  for (auto _ : st) benchmark::DoNotOptimize(conjecture_search_serial(o).trials);
}
void BM_conjecture_parallel(benchmark::State& st) {
  ConjectureOptions o{4, 8, 200, 1, static_cast<int>(st.range(0))};
  for (auto _ : st) benchmark::DoNotOptimize(conjecture_search(o).trials);
}

void BM_spanning_trail(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Digraph d = strong_semicomplete_of(n, 11);
  for (auto _ : st) benchmark::DoNotOptimize(spanning_trail(d, 0, n - 1).vertices.size());
}

void BM_classify_all_arcs(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Digraph d = strong_semicomplete_of(n, 5);
  for (auto _ : st)
    for (Arc a : d.arcs()) benchmark::DoNotOptimize(classify_containment(d, a).tag);
}

}  // namespace

BENCHMARK(BM_containment_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_containment_sweep_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_unavoidable_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_unavoidable_sweep_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conjecture_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conjecture_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spanning_trail)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_classify_all_arcs)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
