#include <benchmark/benchmark.h>

#include <random>

#include "outvcd/bounds.hpp"
#include "outvcd/corpus.hpp"
#include "outvcd/generators.hpp"
#include "outvcd/homology.hpp"
#include "outvcd/morse.hpp"
#include "outvcd/psigma.hpp"

using namespace outvcd;

static void BM_ReduceRandomWords(benchmark::State& state) {
  const ArtinGroup group(fixture_spider());
  std::mt19937 rng(1);
  std::vector<Word> words(64);
  for (auto& w : words)
    for (long i = 0; i < state.range(0); ++i) w.push_back({rng() % group.rank(), rng() % 2 ? 1 : -1});
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(group.canonical(w));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(words.size()));
}
BENCHMARK(BM_ReduceRandomWords)->Arg(16)->Arg(64)->Arg(256);

static void BM_VcdReportCorpus(benchmark::State& state) {
  const auto corpus = verification_corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& ng : corpus) benchmark::DoNotOptimize(vcd_report(ng.graph).exact);
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus.size()));
}
BENCHMARK(BM_VcdReportCorpus)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_GeneratorSetSpider(benchmark::State& state) {
  const GraphAnalysis a = analyze_structure(fixture_spider());
  GeneratorOptions options;
  options.compute_lattice = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_generator_set(a, default_choices(a), options).outer_rank());
}
BENCHMARK(BM_GeneratorSetSpider)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_PsigmaOuterRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(outer_rank({n, 1}).outer_rank);
}
BENCHMARK(BM_PsigmaOuterRank)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_LegalComplexHomology(benchmark::State& state) {
  const HalfEdgeSet h{3, static_cast<int>(state.range(0))};
  const IdealEdgeComplex c = build_complex(h, true);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(c.complex).trivial());
  state.counters["simplices"] = static_cast<double>(c.complex.simplex_count());
}
BENCHMARK(BM_LegalComplexHomology)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_MorseCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(morse_collapse_certificate(3, static_cast<int>(state.range(0))).certified);
}
BENCHMARK(BM_MorseCertificate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
