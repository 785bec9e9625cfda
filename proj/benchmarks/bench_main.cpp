#include <benchmark/benchmark.h>

#include <cmath>
#include <utility>
#include <vector>

#include "fracreduce/conjugate.hpp"
#include "fracreduce/eqparser.hpp"
#include "fracreduce/pipeline.hpp"
#include "fracreduce/rootfind.hpp"

using namespace fracreduce;

namespace {

GenPolyX gp(std::vector<std::pair<RatComplex, Rational>> terms) {
  std::vector<GenTerm<RatComplex>> raw;
  for (auto& [c, e] : terms) raw.push_back({c, e});
  return make_genpoly(std::move(raw));
}

GenPolyX quartic_symbol() {
  return gp({{RatComplex(1), {1}},
             {RatComplex(5), {3, 4}},
             {RatComplex(2), {1, 2}},
             {RatComplex(-20), {1, 4}},
             {RatComplex(-24), {0}}});
}

Equation quartic_equation() {
  Equation eq;
  eq.symbol_exact = quartic_symbol();
  eq.T = operator_from_exact(*eq.symbol_exact, 0.0);
  ExpTerm<RatComplex> t{RatComplex(1), {}};
  t.poly.c = {RatComplex(1)};
  eq.rhs = make_exppoly<RatComplex>({t});
  eq.a = 0.0;
  eq.b = 1.0;
  return eq;
}

}  // namespace

// convolution quadrature: dominated by the O(n^2) weight sums
static void BM_frac_integral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = sample_grid(0.0, 1.0, n, [](double t) { return std::exp(t); });
  QuadratureOptions opt;
  opt.startup = startup_basis_for_denominator(4);
  for (auto _ : state) benchmark::DoNotOptimize(frac_integral(f, {1, 2}, opt));
  state.SetComplexityN(n);
}
BENCHMARK(BM_frac_integral)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_apply_operator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto eq = quartic_equation();
  auto f = sample_grid(0.0, 1.0, n, [](double t) { return std::exp(t); });
  for (auto _ : state) benchmark::DoNotOptimize(apply_operator(eq.T, f));
  state.SetComplexityN(n);
}
BENCHMARK(BM_apply_operator)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

static void BM_volterra_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Complex> red{{1, 0}, {-113, 0}, {2848, 0}, {-20736, 0}};
  auto w = sample_grid(0.0, 1.0, n, [](double t) { return std::exp(t); });
  for (auto _ : state) benchmark::DoNotOptimize(solve_volterra(red, w));
  state.SetComplexityN(n);
}
BENCHMARK(BM_volterra_step)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

// conjugate construction, exact vs floating, on the quartic symbol
static void BM_conjugate_minimal_exact(benchmark::State& state) {
  auto p = quartic_symbol();
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_minimal_exact(p));
}
BENCHMARK(BM_conjugate_minimal_exact);

static void BM_conjugate_minimal_floating(benchmark::State& state) {
  auto p = to_floating(quartic_symbol());
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_minimal(p, 1e-7));
}
BENCHMARK(BM_conjugate_minimal_floating);

static void BM_find_roots_deg12(benchmark::State& state) {
  IntPoly p;
  p.c = {Complex{1, 0}};
  for (int j = 0; j < 12; ++j) {
    IntPoly lin;
    lin.c = {Complex{-(0.5 * j - 3.0), 0.0}, Complex{1, 0}};
    p = mul(p, lin);
  }
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(p, 1e-7));
}
BENCHMARK(BM_find_roots_deg12);

static void BM_parse_equation(benchmark::State& state) {
  const std::string src =
      "I^{1} x + 5 I^{3/4} x + 2 I^{1/2} x - 20 I^{1/4} x - 24 x = exp(t)";
  for (auto _ : state) benchmark::DoNotOptimize(parse_equation(src));
}
BENCHMARK(BM_parse_equation);

static void BM_solve_computing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto eq = quartic_equation();
  SolveConfig cfg;
  cfg.n = n;
  for (auto _ : state) benchmark::DoNotOptimize(solve_computing(eq, cfg));
  state.SetComplexityN(n);
}
BENCHMARK(BM_solve_computing)->RangeMultiplier(2)->Range(256, 1024)->Complexity();

BENCHMARK_MAIN();
