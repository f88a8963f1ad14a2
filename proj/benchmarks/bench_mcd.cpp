#include <random>

#include <benchmark/benchmark.h>

#include "audio.hpp"
#include "clsfront/cepstra.hpp"
#include "clsfront/dtw.hpp"
#include "clsfront/mcd.hpp"

using namespace clsfront;
using namespace clsfront::testing;

namespace {

void BM_MelCepstra(benchmark::State& state) {
  std::mt19937 rng(3);
  const Signal s = babble(static_cast<double>(state.range(0)), 16000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mel_cepstra(s, {}));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * s.samples.size()));
}
BENCHMARK(BM_MelCepstra)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Dtw(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, 24), b = Eigen::MatrixXd::Random(n, 24);
  for (auto _ : state) benchmark::DoNotOptimize(dtw(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dtw)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond)->Complexity();

void BM_McdPair10s(benchmark::State& state) {
  std::mt19937 rng(4);
  const Signal ref = babble(10.0, 16000, rng), syn = babble(10.0, 16000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mcd_score(ref, syn, {}));
}
BENCHMARK(BM_McdPair10s)->Unit(benchmark::kMillisecond);

}  // namespace
