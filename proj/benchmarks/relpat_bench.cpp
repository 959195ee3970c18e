#include <benchmark/benchmark.h>

#include "relpat/charset.hpp"
#include "relpat/member.hpp"
#include "relpat/nf.hpp"
#include "relpat/text_format.hpp"

namespace {

using namespace relpat;

RelationalPattern fixture(const char* text) { return parse_pattern_file(text); }

const char* kNonErasing =
    "alphabet = a b\nrelation = len\n"
    "pattern = x1 x2 ab y1 y2 y3 ab z1 z2 z3 z4 z5\n"
    "pairs = (x1,x2) (y1,y2) (y2,y3) (z1,z2) (z2,z3) (z3,z4) (z4,z5)\n";

const char* kDependent =
    "alphabet = a b\nrelation = len\n"
    "pattern = x1 y1 x2 a x3 b x4 x5 y2 x6 bba x7 x8 x9 aa\n"
    "pairs = (x1,x2) (x2,x3) (x3,x4) (x4,x5) (x5,x6) (x6,x7) (x7,x8) (x8,x9) (y1,y2)\n";

void BM_MemberLenGap(benchmark::State& state) {
  const auto rp = fixture(kNonErasing);
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  const Word w = Word(2 * k, 'a') + "ab" + Word(3 * k, 'a') + "ab" + Word(5 * k, 'a');
  for (auto _ : state) benchmark::DoNotOptimize(member_len(w, rp, false));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MemberLenGap)->RangeMultiplier(2)->Range(1, 64)->Complexity();

void BM_UnifyPalindrome(benchmark::State& state) {
  const auto rp = fixture("alphabet = a b\nrelation = rev\npattern = x1 x2\npairs = (x1,x2)\n");
  const std::size_t half = static_cast<std::size_t>(state.range(0));
  Word v;
  for (std::size_t i = 0; i < half; ++i) v.push_back(i % 3 == 0 ? 'a' : 'b');
  const Word w = v + Word(v.rbegin(), v.rend());
  for (auto _ : state) benchmark::DoNotOptimize(member_unify(w, rp));
}
BENCHMARK(BM_UnifyPalindrome)->DenseRange(2, 14, 4);

void BM_NonnegCombination(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<std::size_t> g(dim, 0);
    g[i] = 2;
    if (i + 1 < dim) g[i + 1] = 1;
    gens.push_back(g);
  }
  std::vector<std::size_t> target(dim, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonneg_combination(target, gens, CombinationMode::nonnegative));
  }
}
BENCHMARK(BM_NonnegCombination)->DenseRange(2, 8, 2);

void BM_NormalForm(benchmark::State& state) {
  const auto rp = fixture(kDependent);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(rp));
}
BENCHMARK(BM_NormalForm);

void BM_LangUpto(benchmark::State& state) {
  const auto rp = fixture(kDependent);
  const auto nf = normal_form(rp);
  for (auto _ : state) benchmark::DoNotOptimize(lang_upto(nf, state.range(0)));
}
BENCHMARK(BM_LangUpto)->DenseRange(8, 14, 2);

void BM_GenSeps2(benchmark::State& state) {
  const auto rp = fixture(kNonErasing);
  for (auto _ : state) benchmark::DoNotOptimize(gen_seps(rp, 2));
}
BENCHMARK(BM_GenSeps2);

}  // namespace

BENCHMARK_MAIN();
