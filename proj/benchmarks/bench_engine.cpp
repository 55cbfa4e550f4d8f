#include <benchmark/benchmark.h>

#include "scopeccg/readings.hpp"

using namespace scopeccg;

namespace {

const Lexicon& fragment() {
  static const Lexicon lex =
      Lexicon::load_file(std::string(SCOPECCG_BENCH_DATA) + "/fragment.lex");
  return lex;
}

const char* kSentences[] = {
    "three frenchmen visited five russians",
    "every dealer shows most customers at most three cars",
    "most boys think that every man danced with two women",
    "most boys think that every man danced with, but doubt that a few boys talked to, more "
    "than two women",
    "some student will investigate two dialects of, and collect all interesting examples of "
    "coordination in, every language",
};

void BM_Parse(benchmark::State& st) {
  auto tokens = tokenize(kSentences[st.range(0)]);
  for (auto _ : st) {
    Chart c = parse(fragment(), tokens);
    benchmark::DoNotOptimize(c.items().size());
  }
}
BENCHMARK(BM_Parse)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Readings(benchmark::State& st) {
  Chart c = parse(fragment(), tokenize(kSentences[st.range(0)]));
  for (auto _ : st) benchmark::DoNotOptimize(readings(c).size());
}
BENCHMARK(BM_Readings)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Normalize(benchmark::State& st) {
  Term t = parse_term(
      "think(s-most(B^boy(B)),up(q-every(M,man(M),danced(M,s-two(W^and(woman(W),"
      "of(W,s-three(C^comp(C)))))))))");
  for (auto _ : st) benchmark::DoNotOptimize(normalize(t));
}
BENCHMARK(BM_Normalize);

void BM_Unify(benchmark::State& st) {
  VarSupply vs;
  std::map<std::string, Term> scope;
  TermReader a("f(X,g(Y,h(Z,a,W)),k(X))", vs, &scope);
  TermReader b("f(g(b,c),g(P,h(c,Q,R)),k(g(S,c)))", vs, &scope);
  Term x = a.read_term(), y = b.read_term();
  for (auto _ : st) benchmark::DoNotOptimize(unify(x, y));
}
BENCHMARK(BM_Unify);

}  // namespace

BENCHMARK_MAIN();
