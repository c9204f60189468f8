#include <benchmark/benchmark.h>

#include "supratoa/classical_toa.hpp"
#include "supratoa/hypergeometric.hpp"
#include "supratoa/kernel_operator.hpp"
#include "supratoa/kernel_solver.hpp"
#include "supratoa/transforms.hpp"

using namespace supratoa;

namespace {

void BM_SolveGeneralQuartic(benchmark::State& state) {
  const int jmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_kernel_general({Potential::quartic(1), 1, jmax, std::nullopt}));
  }
}
BENCHMARK(BM_SolveGeneralQuartic)->DenseRange(4, 16, 4);

void BM_SolveGeneralMixed(benchmark::State& state) {
  const Potential v(QPoly(QPoly::Terms{{1, Rational(1, 3)}, {3, Rational(-2, 5)}, {4, 1}, {6, Rational(1, 7)}}));
  const int jmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_kernel_general({v, Rational(3, 2), jmax, std::nullopt}));
}
BENCHMARK(BM_SolveGeneralMixed)->Arg(4)->Arg(8);

void BM_WignerTransform(benchmark::State& state) {
  const GradedKernel k = solve_kernel_general({Potential::quartic(1), 1, static_cast<int>(state.range(0)), std::nullopt});
  for (auto _ : state) benchmark::DoNotOptimize(wigner_transform(k));
}
BENCHMARK(BM_WignerTransform)->Arg(8)->Arg(12);

void BM_LocalToa(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(local_toa(Potential::quartic(1), 1, Rational(1, 2), state.range(0)));
}
BENCHMARK(BM_LocalToa)->Arg(6)->Arg(10);

void BM_Hyper0F1(benchmark::State& state) {
  double z = -40.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyper0f1(z));
    z = z < 40.0 ? z + 0.5 : -40.0;
  }
}
BENCHMARK(BM_Hyper0F1);

void BM_IntegralForm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_integral_form(Potential::quartic(1), 1.0, 1.0, 0.3, -0.2, QuadSpec{1e-12}));
  }
}
BENCHMARK(BM_IntegralForm);

void BM_ApplyKernel(benchmark::State& state) {
  const EvaluableKernel k =
      series_kernel(solve_kernel_general({Potential::harmonic(1, 1), 1, 12, std::nullopt}), 1.0);
  const BumpProfile phi(0.0, 0.5);
  std::vector<double> grid;
  for (int i = 0; i < state.range(0); ++i) grid.push_back(-1.0 + 2.0 * i / static_cast<double>(state.range(0) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(apply_kernel(k, phi, grid));
}
BENCHMARK(BM_ApplyKernel)->Arg(16)->Arg(64);

void BM_CommutatorHarmonic(benchmark::State& state) {
  const Potential v = Potential::harmonic(1, 1);
  const EvaluableKernel k = series_kernel(solve_kernel_general({v, 1, 12, std::nullopt}), 1.0);
  const BumpProfile phi(0.0, 0.5), psi(0.1, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_residual(v, k, phi, psi));
}
BENCHMARK(BM_CommutatorHarmonic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
