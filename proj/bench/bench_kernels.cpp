// Serial reference kernels against their OpenMP versions. FOX13_THREADS
// caps the thread count of the parallel runs.

#include <benchmark/benchmark.h>

#include "fox13/elimination.hpp"
#include "fox13/parallel.hpp"

namespace {

using namespace fox13;

constexpr const char* k63 = "X(9,12,10,1) X(1,5,2,4) X(7,3,8,2) X(3,9,4,8) X(5,10,6,11) X(11,6,12,7)";
constexpr const char* k73 = "X(14,9,1,10) X(8,1,9,2) X(2,7,3,8) X(10,3,11,4) X(4,11,5,12) X(12,5,13,6) X(6,13,7,14)";

// Exhaustive 13^7 assignment count on 7_3.
void BM_CountSerial(benchmark::State& st) {
  Diagram d = parse_pd(k73);
  for (auto _ : st) benchmark::DoNotOptimize(count_colorings_serial(d, 13));
}
void BM_CountParallel(benchmark::State& st) {
  Diagram d = parse_pd(k73);
  for (auto _ : st) benchmark::DoNotOptimize(count_colorings_parallel(d, 13));
}

// Palette scan of a kernel: 7_3 with two unlinked extra copies has dimension 4.
ColoringSpace big_kernel() {
  return solve_colorings(parse_pd(std::string(k73) + " O O"), 13);
}
void BM_ScanSerial(benchmark::State& st) {
  ColoringSpace s = big_kernel();
  for (auto _ : st) benchmark::DoNotOptimize(scan_kernel_serial(s));
}
void BM_ScanParallel(benchmark::State& st) {
  ColoringSpace s = big_kernel();
  for (auto _ : st) benchmark::DoNotOptimize(scan_kernel_parallel(s));
}

// The first elimination stage on 7_3 that has work, with successors
// evaluated serially or with OpenMP.
void BM_Eliminate(benchmark::State& st) {
  Diagram d = parse_pd(k73);
  ColoredDiagram cd{d, affine_map(*first_nontrivial(solve_colorings(d, 13)), 6, 2)};
  SearchOptions o;
  o.parallel = st.range(0) != 0;
  o.budget = 2000;
  int c = kEliminationOrder[0];
  for (int k : kEliminationOrder)
    if (target_occurrences(cd, k) > 0) {
      c = k;
      break;
    }
  if (target_occurrences(cd, c) == 0) st.SkipWithError("no stage has work");
  for (auto _ : st) {
    try {
      benchmark::DoNotOptimize(eliminate_color(cd, c, {}, o));
    } catch (const BudgetExhausted&) {
    }
  }
}

}  // namespace

BENCHMARK(BM_CountSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eliminate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
