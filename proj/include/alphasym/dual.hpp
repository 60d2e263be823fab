#pragma once

#include "alphasym/alpha.hpp"
#include "alphasym/grid2d.hpp"
#include "alphasym/parallel.hpp"
#include "alphasym/polar.hpp"

#include <memory>

namespace alphasym
{

/// Resolution of the polar dual mesh and of the Cartesian grids used to move
/// between it and the primal lattice.
struct PolarSpec
{
	double radius = 0.0; // 0: max(20, 1.25 * largest finite-difference slope norm)
	int nr = 1601;
	int nk = 768; // multiple of 64
	int cart = 2049;
	bool refine = true;
};

/// Discrete conjugate on the dual box like conjugate_grid, followed where the
/// samples are locally smooth by a Newton step on the local quadratic model
/// around the maximizing node (removes the O(h^2) lattice bias for smooth
/// functions; kinked stencils are left untouched).
GridConvex2D refined_conjugate(const GridConvex2D &psi, const Box &dual_box, int m1, int m2, Exec exec = Exec::Parallel);

/// Support function of the base of f (2D, real alpha) on the polar mesh, with
/// the support function of its domain. Reuses the dual carried by f if present.
std::shared_ptr<const PolarDual> polar_dual(const AlphaFunction &f, const PolarSpec &spec = {}, Exec exec = Exec::Parallel);

/// Dual of a grid base function from scratch.
PolarDual polar_dual_of(const GridConvex2D &psi, const PolarSpec &spec = {}, Exec exec = Exec::Parallel);

/// Conjugate of the polar field (+inf beyond its radius) on the lattice
/// (box, n1, n2), masked to the tracked domain.
GridConvex2D primal_from_polar(const PolarDual &d, const Box &box, int n1, int n2, const PolarSpec &spec = {},
			       Exec exec = Exec::Parallel);

} // namespace alphasym
