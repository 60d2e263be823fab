#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace alphasym
{

/// Execution policy for the data-parallel kernels. Serial is the reference path;
/// Parallel must give bit-identical results (no cross-row reductions are reordered).
enum class Exec
{
	Serial,
	Parallel
};

/// Set the OpenMP thread count used by Exec::Parallel kernels (0 = runtime default).
void set_threads(int n);
int get_threads();

/// Pairwise (tree) summation. The split points depend only on the length, so the
/// result is independent of thread count.
double pairwise_sum(std::span<const double> values);

/// Deterministic parallel sum: fixed-size blocks reduced pairwise in index order.
double parallel_sum(std::span<const double> values);

} // namespace alphasym
