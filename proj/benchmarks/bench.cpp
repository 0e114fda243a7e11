#include <benchmark/benchmark.h>

#include "permqubo/encodings.hpp"
#include "permqubo/io.hpp"
#include "permqubo/solve.hpp"

using namespace permqubo;

static void BM_BuildPerm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Encoding e = perm_encoding(n);
    benchmark::DoNotOptimize(e.poly.term_count());
  }
}
BENCHMARK(BM_BuildPerm)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_BuildMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Encoding e = perm_matrix_encoding(n);
    benchmark::DoNotOptimize(e.poly.term_count());
  }
}
BENCHMARK(BM_BuildMatrix)->Arg(8)->Arg(16)->Arg(32);

static void BM_BuildCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Encoding e = compose_constraint(n);
    benchmark::DoNotOptimize(e.poly.term_count());
  }
}
BENCHMARK(BM_BuildCompose)->Arg(4)->Arg(8)->Arg(16);

static void BM_Anneal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Encoding e = perm_encoding(n);
  AnnealParams p;
  p.reads = 1;
  p.sweeps = 100;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    p.seed = ++seed;
    auto s = sa_sample(e.poly, e.reg->size(), p);
    benchmark::DoNotOptimize(s.front().energy);
  }
  state.SetItemsProcessed(state.iterations() * p.sweeps *
                          static_cast<long long>(e.reg->size()));
}
BENCHMARK(BM_Anneal)->Arg(4)->Arg(8)->Arg(16);

static void BM_Serialize(benchmark::State& state) {
  Encoding e = perm_encoding(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::string s = instance_to_json(e).dump();
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_Serialize)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
