#include <benchmark/benchmark.h>

#include "bohrlab/arithmetic.hpp"
#include "bohrlab/majorant.hpp"
#include "bohrlab/norm_search.hpp"
#include "bohrlab/radii.hpp"

using namespace bohrlab;

namespace {

VectorPolynomial sample(int m, int n) {
  return random_polynomial({m, n, 1, Exponent(2.0), Exponent(2.0), Ensemble::complex_gaussian}, 42);
}

void BM_MajorantEval(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const MajorantForm F(sample(m, 4), OperatorModel::scalar());
  const std::vector<double> x(4, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(F(x));
}
BENCHMARK(BM_MajorantEval)->Arg(2)->Arg(4)->Arg(6);

void BM_SupnormLower(benchmark::State& state) {
  const auto P = sample(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(supnorm_lower(P, {4, 50}, 1).value);
}
BENCHMARK(BM_SupnormLower)->Arg(2)->Arg(4);

void BM_MobiusRadius(benchmark::State& state) {
  const auto f = mobius_axis(Exponent(2.0), 1, SpaceSpec(Exponent(2.0), 1), 0.7, 60);
  for (auto _ : state) benchmark::DoNotOptimize(function_bohr_radius(f, OperatorModel::scalar(), 1.0, {}).radius);
}
BENCHMARK(BM_MobiusRadius);

void BM_MaximizeMean(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<CorpusMember> c;
  for (int v = 0; v < n; ++v)
    for (double a : {0.3, 0.6, 0.9}) c.push_back(mobius_axis(Exponent(2.0), n, SpaceSpec(Exponent(2.0), 1), a, 40, v));
  const ArithmeticProblem prob(c, OperatorModel::scalar(), 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(maximize_mean(prob, {2, 2, 1.0, 1e-10, 1}).mean);
}
BENCHMARK(BM_MaximizeMean)->Arg(2)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
