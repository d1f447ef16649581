#include <benchmark/benchmark.h>

#include "borelkit/ideal.hpp"
#include "borelkit/invariants.hpp"
#include "borelkit/resolution.hpp"
#include "borelkit/shifts.hpp"
#include "borelkit/tspread.hpp"

using namespace borelkit;

namespace {

// x_{n-d+1} ... x_n: its squarefree Borel closure is every squarefree degree-d monomial.
Monomial last_monomial(int n, int d) {
  std::vector<VarIndex> idx;
  for (int i = n - d + 1; i <= n; ++i) idx.push_back(i);
  return Monomial::from_indices(n, idx);
}

void BM_BorelClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Monomial u = last_monomial(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(borel_closure_k({u}, 1, n));
  state.SetLabel("n=" + std::to_string(n));
}
BENCHMARK(BM_BorelClosure)->DenseRange(6, 14, 2);

void BM_BettiFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MonomialIdeal I = borel_closure_k({last_monomial(n, n / 2)}, 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(betti_kborel(I, 1));
}
BENCHMARK(BM_BettiFormula)->DenseRange(6, 14, 2);

void BM_HomologyOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MonomialIdeal I = borel_closure_k({last_monomial(n, n / 2)}, 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(koszul_homology_oracle(I));
}
BENCHMARK(BM_HomologyOracle)->DenseRange(4, 8, 1)->Unit(benchmark::kMillisecond);

void BM_LexLinearQuotients(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MonomialIdeal I = borel_closure_k({last_monomial(n, n / 2)}, 1, n);
  const auto order = lex_order(I);
  for (auto _ : state) benchmark::DoNotOptimize(linear_quotient_certificate(I, order));
}
BENCHMARK(BM_LexLinearQuotients)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_MinimalPrimes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MonomialIdeal I = borel_closure_k({last_monomial(n, n / 2)}, 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_primes(I));
}
BENCHMARK(BM_MinimalPrimes)->DenseRange(6, 12, 2);

void BM_TSpreadShifts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TSpreadVeroneseSpec spec{n, 3, 2};
  for (auto _ : state) {
    for (int j = 0; j <= 3; ++j) benchmark::DoNotOptimize(tspread_hs(spec, j));
  }
}
BENCHMARK(BM_TSpreadShifts)->DenseRange(7, 13, 2);

}  // namespace

BENCHMARK_MAIN();
