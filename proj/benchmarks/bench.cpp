#include <benchmark/benchmark.h>

#include "polyhodge/hodge.hpp"
#include "polyhodge/spectrum.hpp"

#include <map>
#include <vector>

using namespace polyhodge;

namespace {

const Polytope& realization(const std::vector<Int>& weights) {
  static std::map<std::vector<Int>, Polytope> cache;
  auto it = cache.find(weights);
  if (it == cache.end()) it = cache.emplace(weights, realize_weights(weights).polytope).first;
  return it->second;
}

void BM_EnumerateSectors(benchmark::State& state, std::vector<Int> weights) {
  const Polytope& p = realization(weights);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sectors(p));
}

void BM_HodgeNumbers(benchmark::State& state, std::vector<Int> weights) {
  const Polytope& p = realization(weights);
  auto sectors = enumerate_sectors(p);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_numbers(sectors, p.n));
}

void BM_ClosedFormPipeline(benchmark::State& state, std::vector<Int> weights) {
  SimplexWeights w = simplex_weights(realization(weights));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wps_sector_table(w));
    benchmark::DoNotOptimize(wps_hodge_numbers(w));
  }
}

void BM_ParallelepipedWalk(benchmark::State& state) {
  // The facet parallelepiped of the largest facet of the (1,5,12,12,30)
  // realization: the hot loop inside sector enumeration.
  const Polytope& p = realization({1, 5, 12, 12, 30});
  std::size_t largest = 0;
  Int best = 0;
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    std::vector<LatticePoint> cols;
    for (int idx : p.facets[f]) cols.push_back(p.vertices[static_cast<std::size_t>(idx)]);
    Int d = det(IntMatrix::from_columns(cols));
    if (d < 0) d = -d;
    if (d > best) best = d, largest = f;
  }
  std::vector<LatticePoint> cols;
  for (int idx : p.facets[largest]) cols.push_back(p.vertices[static_cast<std::size_t>(idx)]);
  IntMatrix m = IntMatrix::from_columns(cols);
  for (auto _ : state) benchmark::DoNotOptimize(half_open_parallelepiped(m));
}

void BM_Spectrum(benchmark::State& state, std::vector<Int> weights) {
  auto sectors = enumerate_sectors(realization(weights));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(sectors));
    benchmark::DoNotOptimize(jordan_type(sectors));
  }
}

BENCHMARK_CAPTURE(BM_EnumerateSectors, w_1_2_3_4_7_11, {1, 2, 3, 4, 7, 11});
BENCHMARK_CAPTURE(BM_EnumerateSectors, w_1_5_12_12_30, {1, 5, 12, 12, 30});
BENCHMARK_CAPTURE(BM_HodgeNumbers, w_1_2_3_4_7_11, {1, 2, 3, 4, 7, 11});
BENCHMARK_CAPTURE(BM_ClosedFormPipeline, w_1_2_3_4_7_11, {1, 2, 3, 4, 7, 11});
BENCHMARK_CAPTURE(BM_ClosedFormPipeline, w_1_5_12_12_30, {1, 5, 12, 12, 30});
BENCHMARK(BM_ParallelepipedWalk);
BENCHMARK_CAPTURE(BM_Spectrum, w_1_2_3_4_7_11, {1, 2, 3, 4, 7, 11});

}  // namespace

BENCHMARK_MAIN();
