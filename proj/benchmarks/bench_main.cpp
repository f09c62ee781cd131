#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "cvxtop/chain_map.hpp"
#include "cvxtop/corpus.hpp"
#include "cvxtop/homology.hpp"
#include "cvxtop/parameters.hpp"
#include "cvxtop/theorems.hpp"

using namespace cvxtop;

namespace {

std::string data(const std::string& rel) { return std::string(CVXTOP_DATA_DIR) + "/" + rel; }

void BM_Helly(benchmark::State& state) {
  const auto corpus = random_corpus(1, 32, 8, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& f : corpus) benchmark::DoNotOptimize(helly(f).value());
}
BENCHMARK(BM_Helly)->Arg(6)->Arg(10)->Arg(14);

void BM_Radon(benchmark::State& state) {
  const auto corpus = random_corpus(2, 16, static_cast<int>(state.range(0)), 8);
  for (auto _ : state)
    for (const auto& f : corpus) benchmark::DoNotOptimize(radon(f).value());
}
BENCHMARK(BM_Radon)->Arg(6)->Arg(10)->Arg(12);

void BM_GradedRadon(benchmark::State& state) {
  const auto f = random_system(*std::make_unique<std::mt19937_64>(3), 6, static_cast<int>(state.range(0)));
  SearchOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(graded(f, GradedParameter::radon, f.size(), std::nullopt, opts).value());
}
BENCHMARK(BM_GradedRadon)->Args({8, 1})->Args({10, 1})->Args({10, 4});

void BM_PartitionNumber(benchmark::State& state) {
  const auto f = intervals_system(4);
  for (auto _ : state) benchmark::DoNotOptimize(partition_number(f, static_cast<int>(state.range(0))).value());
}
BENCHMARK(BM_PartitionNumber)->Arg(2)->Arg(3)->Arg(4);

void BM_Colorful(benchmark::State& state) {
  const auto f = random_system(*std::make_unique<std::mt19937_64>(4), 5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(colorful_helly(f, std::nullopt).value());
}
BENCHMARK(BM_Colorful)->Arg(5)->Arg(7);

void BM_BettiTorus(benchmark::State& state) {
  const auto k = load_complex(data("complexes/torus_7.sc"));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(k));
}
BENCHMARK(BM_BettiTorus);

void BM_BettiSkeleton(benchmark::State& state) {
  const auto k = skeleton_simplex(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(k));
}
BENCHMARK(BM_BettiSkeleton)->Arg(8)->Arg(10);

void BM_SearchK5Disk(benchmark::State& state) {
  const auto k5 = load_complex(data("complexes/k5.sc"));
  const auto disk = load_complex(data("disks/disk_v6_08.sc"));
  for (auto _ : state) benchmark::DoNotOptimize(search_hae(k5, disk).tag);
}
BENCHMARK(BM_SearchK5Disk);

void BM_Xi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(xi(state.range(0)));
}
BENCHMARK(BM_Xi)->Arg(4)->Arg(9)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
