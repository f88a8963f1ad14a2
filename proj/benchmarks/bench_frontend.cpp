#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace clsfront;
using namespace clsfront::testing;

namespace {

std::string random_line(std::mt19937& rng, int words) {
  static const ScriptAlphabet alphabet(shipped().reader().table(Script::devanagari));
  std::string line;
  for (int w = 0; w < words; ++w) line += utf8(random_word(alphabet, rng)) + ' ';
  return line + "।";
}

void BM_NormalizeWord(benchmark::State& state) {
  const std::string word = "क़िला";
  for (auto _ : state) benchmark::DoNotOptimize(normalize_text(word));
}
BENCHMARK(BM_NormalizeWord);

void BM_WordToRawCls(benchmark::State& state) {
  const std::string word = normalize_text("अन्तःस्थ");
  for (auto _ : state) {
    benchmark::DoNotOptimize(shipped().reader().word_to_raw_cls(word, Script::devanagari));
  }
}
BENCHMARK(BM_WordToRawCls);

void BM_ParseLine(benchmark::State& state) {
  std::mt19937 rng(1);
  const std::string line = random_line(rng, static_cast<int>(state.range(0)));
  const LanguageProfile profile = shipped().profile(state.range(1) == 0 ? "hindi" : "sanskrit");
  for (auto _ : state) benchmark::DoNotOptimize(shipped().parse_text(line, profile));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * line.size()));
}
BENCHMARK(BM_ParseLine)->Args({8, 0})->Args({8, 1})->Args({64, 0});

void BM_ApplyRules(benchmark::State& state) {
  std::mt19937 rng(2);
  std::vector<ClsSequence> seqs;
  for (int i = 0; i < 256; ++i) seqs.push_back(random_labels(shipped().inventory(), rng, 12));
  const LanguageProfile profile = shipped().profile("maithili");
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(shipped().apply_rules(seqs[i++ % seqs.size()], profile));
  }
}
BENCHMARK(BM_ApplyRules);

}  // namespace
