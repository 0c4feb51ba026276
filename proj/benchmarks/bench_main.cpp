#include <benchmark/benchmark.h>

#include "ossig/cpf.hpp"
#include "ossig/gf2.hpp"
#include "ossig/oracle_suite.hpp"
#include "ossig/oss.hpp"

using namespace ossig;

namespace {

DeterministicRng::Seed bench_seed() { return DeterministicRng::seed_from_label("bench"); }

void BM_MatMul(benchmark::State& state) {
  DeterministicRng rng(bench_seed(), "matmul");
  std::size_t n = std::size_t(state.range(0));
  BitMatrix a = random_matrix(rng, n, n);
  BitMatrix b = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul(a, b));
}
BENCHMARK(BM_MatMul)->Arg(64)->Arg(256);

void BM_Rank(benchmark::State& state) {
  DeterministicRng rng(bench_seed(), "rank");
  std::size_t n = std::size_t(state.range(0));
  BitMatrix m = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(64)->Arg(256);

void BM_SubspaceDual(benchmark::State& state) {
  DeterministicRng rng(bench_seed(), "dual");
  Subspace s = random_subspace(rng, std::size_t(state.range(0)), std::size_t(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(s.dual());
}
BENCHMARK(BM_SubspaceDual)->Arg(32)->Arg(128);

void BM_OracleForward(benchmark::State& state) {
  OracleSuite suite(paper_params(2), bench_seed());
  DeterministicRng rng(bench_seed(), "queries");
  for (auto _ : state) benchmark::DoNotOptimize(suite.p_forward(rng.next_bitvec(80)));
}
BENCHMARK(BM_OracleForward);

void BM_Sign(benchmark::State& state) {
  Params p = toy_params();
  OracleSuite suite(p, bench_seed());
  DeterministicRng rng(bench_seed(), "sign");
  LinearCode code = sample_code(rng, 3, p.ell_code);
  for (auto _ : state) {
    KeyPair key = siggen(suite, rng);
    auto result = sign(suite, key, rng.next_bitvec(3), code, rng);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Sign);

void BM_QForward(benchmark::State& state) {
  FoldingCpfOracle cpf = make_folding_cpf(36, 30, bench_seed());
  DeterministicRng rng(bench_seed(), "q");
  for (auto _ : state) benchmark::DoNotOptimize(cpf.q_forward(rng.next_bitvec(36)));
}
BENCHMARK(BM_QForward);

}  // namespace

BENCHMARK_MAIN();
