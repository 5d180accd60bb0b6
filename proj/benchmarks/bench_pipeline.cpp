#include <benchmark/benchmark.h>

#include <random>

#include "pomkit/pomkit.hpp"

using namespace pomkit;

namespace {

const char* const kExprs[] = {
    "a*",
    "(a||b)*.(a+b)^",
    "prepare.(bake||caramelise).glaze.(sprinkle+1)",
    "((a.b)*||a)^",
};

void BM_Explore(benchmark::State& state) {
  const Expr e = parse_expr(kExprs[state.range(0)]);
  for (auto _ : state) {
    Exploration x = explore(e);
    benchmark::DoNotOptimize(x.automaton.size());
  }
  state.SetLabel(kExprs[state.range(0)]);
}
BENCHMARK(BM_Explore)->DenseRange(0, 3);

void BM_PaToExpr(benchmark::State& state) {
  const Exploration x = explore(parse_expr(kExprs[state.range(0)]));
  for (auto _ : state) {
    Expr e = pa_to_expr(x.automaton, x.start);
    benchmark::DoNotOptimize(e.tree_size());
  }
  state.SetLabel(kExprs[state.range(0)]);
}
BENCHMARK(BM_PaToExpr)->DenseRange(0, 3);

void BM_LanguageBounded(benchmark::State& state) {
  const Exploration x = explore(parse_expr("(a||b)*.(a+b)^"));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PomsetSet l = language_bounded(x.automaton, x.start, n);
    benchmark::DoNotOptimize(l.size());
  }
}
BENCHMARK(BM_LanguageBounded)->DenseRange(3, 6);

void BM_SemanticsBounded(benchmark::State& state) {
  const Expr e = parse_expr("(a||b)*.(a+b)^");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PomsetSet l = semantics_bounded(e, n);
    benchmark::DoNotOptimize(l.size());
  }
}
BENCHMARK(BM_SemanticsBounded)->DenseRange(3, 6);

void BM_RandomAutomatonLanguage(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const PomsetAutomaton a = random_automaton(rng, static_cast<std::size_t>(state.range(0)),
                                             {Letter("a"), Letter("b")});
  for (auto _ : state) {
    for (State q : a.states()) benchmark::DoNotOptimize(language_bounded(a, q, 4).size());
  }
}
BENCHMARK(BM_RandomAutomatonLanguage)->Arg(4)->Arg(6)->Arg(8);

void BM_GenerateBounded(benchmark::State& state) {
  const PomsetCFG g = load_cfg(std::string(POMKIT_DATA_DIR) + "/anbn.cfg");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_bounded(g, n).size());
}
BENCHMARK(BM_GenerateBounded)->Arg(8)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
