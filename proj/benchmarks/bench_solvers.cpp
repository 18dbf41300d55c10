#include <benchmark/benchmark.h>

#include <vector>

#include "machfvm/analysis.hpp"
#include "machfvm/assembly.hpp"
#include "machfvm/solver.hpp"
#include "machfvm/spectral.hpp"

using namespace machfvm;

namespace {

StencilOperator make_problem(int n, double km) {
  const Grid g = build_simplified_grid(n);
  const auto spec = builtin_example(2, km);
  return assemble_five_point(g, km, half_cell_harmonic(km), spec.f);
}

void AssembleFivePoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = builtin_example(2, 1e6);
  const Grid g = build_simplified_grid(n);
  for (auto _ : state) {
    auto op = assemble_five_point(g, 1e6, half_cell_harmonic(1e6), spec.f);
    benchmark::DoNotOptimize(op);
  }
  state.SetComplexityN(n);
}
BENCHMARK(AssembleFivePoint)->Arg(33)->Arg(67)->Arg(135)->Arg(271)->Complexity();

void SolveDstDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = make_problem(n, 1e6);
  for (auto _ : state) {
    auto x = solve_dst_direct(op, op.rhs);
    benchmark::DoNotOptimize(x);
  }
  state.SetComplexityN(n);
}
BENCHMARK(SolveDstDirect)->Arg(33)->Arg(67)->Arg(135)->Arg(271)->Complexity();

void SolveCgJacobi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = make_problem(n, 1e6);
  SolveOptions opts;
  for (auto _ : state) {
    auto x = solve_cg(op, op.rhs, opts);
    benchmark::DoNotOptimize(x);
  }
  state.SetComplexityN(n);
}
BENCHMARK(SolveCgJacobi)->Arg(33)->Arg(67)->Complexity();

void DstTransform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DstContext ctx(n);
  std::vector<double> seq(n - 1, 0.5);
  for (auto _ : state) {
    auto out = ctx.forward(seq);
    benchmark::DoNotOptimize(out);
  }
  state.SetComplexityN(n);
}
BENCHMARK(DstTransform)->Arg(33)->Arg(135)->Arg(271)->Complexity();

}  // namespace

BENCHMARK_MAIN();
