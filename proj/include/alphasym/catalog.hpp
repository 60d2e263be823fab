#pragma once

#include "alphasym/alpha.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace alphasym
{

/// Named analytic family with its discretization. Members are defined through a
/// convex base; make(alpha) gives f = from_base(base) for real alpha and the
/// values e^{-base} for alpha = -inf.
struct CatalogEntry
{
	std::string name;
	std::string family; // gaussian (alias alpha_gaussian), indicator, pl_base, random_convex
	int dim = 1;
	// gaussian: center, diagonal curvature (1D uses the first entries; skew uses
	// the second curvature on the right of the center)
	Vec2 center{0.0, 0.0};
	Vec2 curvature{1.0, 1.0};
	// indicator: interval [lo, hi] or polygon vertices
	double lo = 0.0, hi = 1.0;
	std::vector<Vec2> polygon;
	// pl_base: breakpoints (1D)
	std::vector<double> px, pv;
	// random_convex: pieces and seed
	int pieces = 6;
	std::uint64_t seed = 0;
	// discretization: 1D interval [lo, hi] of the sampled base with n points; 2D box with n x n nodes
	double half_width = 8.0;
	Box box = Box::square(12.8);
	int n = 129;

	ConvexPL1D base1() const;
	GridConvex2D base2() const;
	AlphaFunction make(double alpha) const;
	/// True when the family is even about the origin in every coordinate.
	bool symmetric() const;
};

/// The twelve-member desk catalog: six 1D and six 2D entries.
std::vector<CatalogEntry> default_catalog();
const CatalogEntry &catalog_entry(const std::vector<CatalogEntry> &cat, const std::string &name);

/// Max of `pieces` affine functions with slope norms in [5, 8] spread around the
/// circle (coercive); offsets in [0, 1].
GridConvex2D random_pl_base(std::uint64_t seed, int pieces, Box box, int n);
/// Random convex PL base on the line with increasing slopes crossing zero.
ConvexPL1D random_pl_base_1d(std::uint64_t seed);

} // namespace alphasym
