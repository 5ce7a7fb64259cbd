#include <benchmark/benchmark.h>

#include <carleman/bessel.hpp>
#include <carleman/grid.hpp>
#include <carleman/lower_bound.hpp>
#include <carleman/normest.hpp>
#include <carleman/symbols.hpp>

using namespace carleman;

static void BM_ApplyMultiplier(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<GridAxis> axes(3, GridAxis{n, 12.0, 0.0});
  const auto f = random_field(axes, 1, 0);
  const auto table = tabulate_symbol(axes, make_mtilde(3, 1, 1.0 / 64));
  for (auto _ : state) benchmark::DoNotOptimize(apply_multiplier(f, table));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size()));
}
BENCHMARK(BM_ApplyMultiplier)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_BesselJ(benchmark::State& state) {
  const double nu = state.range(0) / 2.0;
  double r = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(nu, r));
    r = r < 5e3 ? r * 1.01 : 0.1;
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(1)->Arg(5)->Arg(20);

static void BM_SymbolEval(benchmark::State& state) {
  const auto spec = make_mtilde(3, static_cast<int>(state.range(0)), 1.0 / 64);
  double tau = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_symbol_radial(spec, 0.999, tau));
    tau = tau < 2 ? tau + 1e-3 : 0.5;
  }
}
BENCHMARK(BM_SymbolEval)->Arg(1)->Arg(3);

static void BM_MtildeRadial(benchmark::State& state) {
  const Phi5Spec spec{5, 2, 0.125};
  for (auto _ : state) benchmark::DoNotOptimize(mtilde_radial(5, 2, 1.0 / 64, spec, 20.0, 0.0));
}
BENCHMARK(BM_MtildeRadial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
