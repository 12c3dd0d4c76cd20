#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "vortexlab/dolbeault.hpp"
#include "vortexlab/kazdan_warner.hpp"
#include "vortexlab/vortex.hpp"

using namespace vortexlab;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void PoissonSolve(benchmark::State& state) {
  const int n = int(state.range(0));
  TorusGrid g(n);
  std::vector<double> rhs(g.sites()), v;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rhs[size_t(i) * n + j] = std::sin(kTwoPi * i / n) * std::cos(2 * kTwoPi * j / n);
  for (auto _ : state) {
    g.poisson(rhs, v);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(PoissonSolve)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void DbarApply(benchmark::State& state) {
  const int n = int(state.range(0));
  TorusGrid g(n);
  ThetaSpec spec{1, {{0.5, 0.5}}, 8};
  auto [f, c] = theta_section(g, spec);
  for (auto _ : state) {
    auto d = dbar(g, c, f);
    benchmark::DoNotOptimize(d.v.data());
  }
}
BENCHMARK(DbarApply)->RangeMultiplier(2)->Range(32, 256);

void KazdanWarnerManufactured(benchmark::State& state) {
  const int n = int(state.range(0));
  TorusGrid g(n);
  KWProblem p;
  p.n = n;
  p.case_tag = KWCase::lemma;
  std::vector<double> fstar(g.sites());
  p.P.resize(g.sites());
  p.Q.assign(g.sites(), 0.5);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      fstar[size_t(i) * n + j] = 0.3 * std::cos(kTwoPi * i / n) * std::cos(kTwoPi * j / n);
      p.P[size_t(i) * n + j] = 1.0 + 0.5 * std::sin(kTwoPi * i / n);
    }
  std::vector<double> lap;
  g.laplacian(fstar, lap);
  p.w.resize(g.sites());
  for (int k = 0; k < g.sites(); ++k)
    p.w[k] = lap[k] + p.P[k] * std::exp(2 * fstar[k]) - p.Q[k] * std::exp(-2 * fstar[k]);
  for (auto _ : state) {
    auto sol = solve_kw(g, p, 1e-10);
    benchmark::DoNotOptimize(sol.f.data());
  }
}
BENCHMARK(KazdanWarnerManufactured)->RangeMultiplier(2)->Range(32, 128);

void HitchinKobayashi(benchmark::State& state) {
  const int n = int(state.range(0));
  TorusGrid g(n);
  std::array<std::vector<std::array<double, 2>>, 2> az, bz;
  az[0] = {{0.25, 0.25}};
  bz[1] = {{0.75, 0.75}};
  const auto t = theta_triple(g, 1, 0, az, bz, 2.5);
  for (auto _ : state) {
    auto s = hk_solve(g, t, 0.0, 1e-9);
    benchmark::DoNotOptimize(s.kw.f.data());
  }
}
BENCHMARK(HitchinKobayashi)->RangeMultiplier(2)->Range(32, 128);

void CohomologyCount(benchmark::State& state) {
  const int n = int(state.range(0));
  TorusGrid g(n);
  for (auto _ : state) {
    DolbeaultProblem p(g, {base_connection_with_class(g, 0, {0.31, 0.77})});
    auto rep = h0(p);
    benchmark::DoNotOptimize(rep.h0);
  }
}
BENCHMARK(CohomologyCount)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
