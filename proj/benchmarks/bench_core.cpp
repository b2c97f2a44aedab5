#include <benchmark/benchmark.h>

#include "maniplex/catalog.hpp"
#include "maniplex/extend.hpp"
#include "maniplex/symmetry.hpp"
#include "maniplex/weights.hpp"

using namespace maniplex;

namespace {

// precomputed fixtures shared across benchmarks
const Maniplex& hemicube() {
  static const Maniplex m = build_seed("hemicube");
  return m;
}

const Maniplex& rank4_cover() {
  static const Maniplex cover = [] {
    const Maniplex& hemi = hemicube();
    const Colouring total = total_colouring(hemi);
    return cross_cover(extension(hemi, total),
                       extend_weight(hemi, total, vartheta(hemi)));
  }();
  return cover;
}

void BM_BuildSeed(benchmark::State& state) {
  for (auto _ : state) {
    Maniplex m = build_seed("hemicube");
    benchmark::DoNotOptimize(m.num_flags());
  }
}
BENCHMARK(BM_BuildSeed);

void BM_Validate(benchmark::State& state) {
  const Maniplex& cover = rank4_cover();
  for (auto _ : state) {
    auto report = validate(cover);
    benchmark::DoNotOptimize(report.ok());
  }
}
BENCHMARK(BM_Validate);

void BM_CrossCover(benchmark::State& state) {
  const Maniplex& hemi = hemicube();
  const WeightFunction theta = vartheta(hemi);
  for (auto _ : state) {
    Maniplex cover = cross_cover(hemi, theta);
    benchmark::DoNotOptimize(cover.num_flags());
  }
}
BENCHMARK(BM_CrossCover);

void BM_Extension(benchmark::State& state) {
  const Maniplex& hemi = hemicube();
  const Colouring total = total_colouring(hemi);
  for (auto _ : state) {
    Maniplex ext = extension(hemi, total);
    benchmark::DoNotOptimize(ext.num_flags());
  }
}
BENCHMARK(BM_Extension);

void BM_AutAnalysisPruned(benchmark::State& state) {
  const Maniplex& cover = rank4_cover();
  for (auto _ : state) {
    auto analysis = analyze_automorphisms(cover, AutSearch::pruned);
    benchmark::DoNotOptimize(analysis.order);
  }
}
BENCHMARK(BM_AutAnalysisPruned);

void BM_AutAnalysisExhaustive(benchmark::State& state) {
  const Maniplex cover = cross_cover(hemicube(), vartheta(hemicube()));
  for (auto _ : state) {
    auto analysis = analyze_automorphisms(cover, AutSearch::exhaustive);
    benchmark::DoNotOptimize(analysis.order);
  }
}
BENCHMARK(BM_AutAnalysisExhaustive);

void BM_StabilityVerdict(benchmark::State& state) {
  const Maniplex& cover = rank4_cover();
  for (auto _ : state) {
    auto verdict = is_stable(cover);
    benchmark::DoNotOptimize(verdict.stable);
  }
}
BENCHMARK(BM_StabilityVerdict);

}  // namespace

BENCHMARK_MAIN();
