#include <benchmark/benchmark.h>

#include "bivalg/asymptotics.hpp"
#include "bivalg/critical.hpp"
#include "bivalg/oracle.hpp"
#include "bivalg/resultant.hpp"
#include "fixtures.hpp"

using namespace bivalg;
namespace fx = bivalg::fixtures;

namespace {

void BM_RecurrenceLinear(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeff_recurrence(fx::multinomial_h(), fx::one(), Rational(1, 2), Box{n, n}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RecurrenceLinear)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond)->Complexity();

void BM_RecurrenceColoring(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeff_recurrence(fx::coloring_h(), fx::coloring_g(), Rational(1, 2), Box{r, r / 2}));
  }
}
BENCHMARK(BM_RecurrenceColoring)->Arg(20)->Arg(40)->Arg(70)->Unit(benchmark::kMillisecond);

void BM_RecurrenceThreads(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coeff_recurrence(fx::coloring_h(), fx::coloring_g(), Rational(1, 3), Box{60, 60}, threads));
  }
}
BENCHMARK(BM_RecurrenceThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(linear_closed_form_table(fx::multinomial_h(), Rational(1, 2), Box{n, n}));
  }
}
BENCHMARK(BM_ClosedForm)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Resultant(benchmark::State& state) {
  const auto [f1, f2] = critical_system(fx::winding_h(), Direction(1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f1, f2, Var::kY));
}
BENCHMARK(BM_Resultant)->Unit(benchmark::kMillisecond);

void BM_SolveCritical(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_critical(fx::coloring_h(), Direction(2, 1)));
}
BENCHMARK(BM_SolveCritical)->Unit(benchmark::kMillisecond);

void BM_MinimalityProbe(benchmark::State& state) {
  CriticalPoint pt;
  pt.p = Complex(Rational(1, 4));
  pt.q = Complex(1);
  pt.smooth = true;
  ProbeGrid grid;
  grid.angles = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimality_probe(fx::coloring_h(), pt, {pt}, grid));
}
BENCHMARK(BM_MinimalityProbe)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Quadrature(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.c1 = 0.125;
  cfg.c2 = 0.5;
  cfg.n1 = cfg.n2 = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadrature_table(fx::coloring_h(), fx::coloring_g(), 0.5, Box{10, 10}, cfg));
  }
}
BENCHMARK(BM_Quadrature)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Winding(benchmark::State& state) {
  const auto [p, q] = fx::winding_point();
  CriticalPoint pt;
  pt.p = p;
  pt.q = q;
  const auto ray = BranchRay::make(pi(), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(winding_number(fx::winding_h(), pt, ray));
}
BENCHMARK(BM_Winding)->Unit(benchmark::kMillisecond);

void BM_EstimateTheorem(benchmark::State& state) {
  CriticalPoint pt;
  pt.p = Complex(Rational(1, 4));
  pt.q = Complex(1);
  pt.smooth = true;
  const Real beta = Real(1) / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_theorem(fx::coloring_h(), fx::coloring_g(), beta, {pt}, Direction(2, 1), 70, 35));
  }
}
BENCHMARK(BM_EstimateTheorem)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
