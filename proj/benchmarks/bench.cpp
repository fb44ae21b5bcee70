#include <benchmark/benchmark.h>

#include <random>

#include "brauerlab/admissible.hpp"
#include "brauerlab/normalform.hpp"
#include "brauerlab/oracle_a.hpp"
#include "brauerlab/rewrite.hpp"

using namespace brauerlab;

namespace {

const RootSystem& e6() {
  static RootSystem sys = build_root_system(CoxeterDiagram::parse("E6"));
  return sys;
}

Word random_word(std::mt19937& rng, int rank, int len) {
  Word w;
  for (int i = 0; i < len; ++i) {
    int node = 1 + (int)(rng() % rank);
    w.tokens.push_back(rng() % 2 ? tok_r(node) : tok_e(node));
  }
  return w;
}

}  // namespace

static void BM_BuildRootSystem(benchmark::State& state) {
  const char* types[] = {"A5", "D6", "E6", "E7", "E8"};
  CoxeterDiagram d = CoxeterDiagram::parse(types[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(d));
}
BENCHMARK(BM_BuildRootSystem)->DenseRange(0, 4);

static void BM_OrbitEnumeration(benchmark::State& state) {
  const RootSystem& sys = e6();
  SetIdx base = coclique_base(sys, Coclique{{4, 6}});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbit(sys, base));
}
BENCHMARK(BM_OrbitEnumeration);

static void BM_Closure(benchmark::State& state) {
  const RootSystem& sys = e6();
  SetIdx X{sys.simple_index(2), sys.simple_index(3), sys.simple_index(6)};
  std::sort(X.begin(), X.end());
  for (auto _ : state) benchmark::DoNotOptimize(closure(sys, X));
}
BENCHMARK(BM_Closure);

static void BM_Reduce(benchmark::State& state) {
  RootSystem sys = build_root_system(CoxeterDiagram::parse("A4"));
  std::mt19937 rng(7);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, 4, 16));
  SearchCaps caps;
  caps.max_extra_length = (int)state.range(0);
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(reduce(sys, words[k++ % words.size()], caps));
}
BENCHMARK(BM_Reduce)->Arg(2)->Arg(4)->Arg(8);

static void BM_EvalWordOracle(benchmark::State& state) {
  std::mt19937 rng(11);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, 5, 20));
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_word_A(6, words[k++ % words.size()]));
}
BENCHMARK(BM_EvalWordOracle);

static void BM_BuildAB(benchmark::State& state) {
  const RootSystem& sys = e6();
  const OrbitPoset& orb = orbit_of(sys, Coclique{{4, 6}});
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        build_aB(sys, orb, orb.members[k++ % orb.members.size()]));
}
BENCHMARK(BM_BuildAB);

static void BM_Decompose(benchmark::State& state) {
  const RootSystem& sys = e6();
  const OrbitPoset& orb = orbit_of(sys, Coclique{{6}});
  GeneratorSetSY sy = sy_generators(sys, Coclique{{6}});
  std::mt19937 rng(13);
  std::vector<Word> words;
  for (int i = 0; i < 16; ++i) {
    NormalForm nf{Coclique{{6}}, orb.members[rng() % orb.size()],
                  orb.members[rng() % orb.size()],
                  coxeter_from_word(sy.cartan, {(int)(rng() % 5)}),
                  (int)(rng() % 3)};
    words.push_back(synthesize(sys, nf));
  }
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(decompose(sys, words[k++ % words.size()]));
}
BENCHMARK(BM_Decompose);

static void BM_MonoidRank(benchmark::State& state) {
  const char* types[] = {"E6", "E7", "E8"};
  RootSystem sys = build_root_system(CoxeterDiagram::parse(types[state.range(0)]));
  orbit_of(sys, cocliques_Y(sys)[1]);  // warm the orbit registry
  for (auto _ : state) benchmark::DoNotOptimize(monoid_rank(sys));
}
BENCHMARK(BM_MonoidRank)->DenseRange(0, 2);

BENCHMARK_MAIN();
