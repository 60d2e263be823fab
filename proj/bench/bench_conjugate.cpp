#include "alphasym/grid2d.hpp"

#include <benchmark/benchmark.h>

using namespace alphasym;

static GridConvex2D quadratic(int n)
{
	return GridConvex2D::sample([](Vec2 x) { return 0.5 * (x.x - 1) * (x.x - 1) + 0.5 * (x.y - 2) * (x.y - 2); },
				    Box::square(8.0), n, n);
}

static void conjugate(benchmark::State &state, Exec exec)
{
	GridConvex2D g = quadratic(static_cast<int>(state.range(0)));
	for (auto _ : state)
		benchmark::DoNotOptimize(conjugate_grid(g, std::nullopt, 0, 0, exec));
	state.SetComplexityN(state.range(0) * state.range(0));
}

static void BM_ConjugateSerial(benchmark::State &s) { conjugate(s, Exec::Serial); }
static void BM_ConjugateParallel(benchmark::State &s) { conjugate(s, Exec::Parallel); }

BENCHMARK(BM_ConjugateSerial)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oN);
BENCHMARK(BM_ConjugateParallel)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
