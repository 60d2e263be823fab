#include "alphasym/parallel.hpp"

#include <algorithm>
#include <omp.h>

namespace alphasym
{

namespace
{
int g_threads = 0;
constexpr std::size_t kBlock = 4096;
} // namespace

void set_threads(int n)
{
	g_threads = n < 0 ? 0 : n;
	if (g_threads > 0)
		omp_set_num_threads(g_threads);
}

int get_threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

double pairwise_sum(std::span<const double> v)
{
	if (v.size() <= 8) {
		double s = 0.0;
		for (double x : v)
			s += x;
		return s;
	}
	std::size_t half = v.size() / 2;
	return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

double parallel_sum(std::span<const double> v)
{
	std::size_t nb = (v.size() + kBlock - 1) / kBlock;
	if (nb <= 1)
		return pairwise_sum(v);
	std::vector<double> partial(nb);
#pragma omp parallel for schedule(static)
	for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
		std::size_t lo = static_cast<std::size_t>(b) * kBlock;
		std::size_t len = std::min(kBlock, v.size() - lo);
		partial[b] = pairwise_sum(v.subspan(lo, len));
	}
	return pairwise_sum(partial);
}

} // namespace alphasym
