#include <benchmark/benchmark.h>

#include "symspace/cover.hpp"
#include "symspace/factorizations.hpp"
#include "symspace/homotopy.hpp"

namespace {

using namespace symspace;

void BM_EigNormal(benchmark::State& state) {
  const auto m = static_cast<Eigen::Index>(state.range(0));
  const ComplexMatrix X = haar_special_unitary(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(eig_normal(X));
}
BENCHMARK(BM_EigNormal)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_FactorSymmetric(benchmark::State& state) {
  const SpacePoint X = sample({Family::AI, static_cast<int>(state.range(0))}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(factor_symmetric(X.matrix));
}
BENCHMARK(BM_FactorSymmetric)->Arg(4)->Arg(8)->Arg(16);

void BM_FactorSkew(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComplexMatrix Q = haar_special_unitary(2 * n, 3);
  const ComplexMatrix X = Q * structural_J(n) * Q.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(factor_skew(X));
}
BENCHMARK(BM_FactorSkew)->Arg(2)->Arg(4)->Arg(8);

void BM_Contract(benchmark::State& state) {
  const SpaceKind kind{state.range(1) == 0 ? Family::AI : Family::AII, static_cast<int>(state.range(0))};
  const SpacePoint X = sample(kind, 4);
  const CoverConfig cover = default_cover(kind);
  const double alpha = branch_angle(cover, classify(cover, X).witness);
  for (auto _ : state) benchmark::DoNotOptimize(contract(X, alpha, 16));
}
BENCHMARK(BM_Contract)->Args({4, 0})->Args({8, 0})->Args({2, 1})->Args({4, 1});

void BM_CoverAudit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cover_audit({Family::AII, 3}, 100, 5));
}
BENCHMARK(BM_CoverAudit);

}  // namespace

BENCHMARK_MAIN();
