#pragma once

#include "alphasym/bodies.hpp"
#include "alphasym/convex1d.hpp"
#include "alphasym/legendre.hpp"
#include "alphasym/parallel.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace alphasym
{

struct Box
{
	double a1 = 0.0, b1 = 0.0, a2 = 0.0, b2 = 0.0;

	static Box centered(double s1, double s2) { return {-s1, s1, -s2, s2}; }
	static Box square(double s) { return {-s, s, -s, s}; }
	bool operator==(const Box &) const = default;
};

/// Uniform tensor grid: n1 points along x1 in [a1, b1], n2 along x2.
/// Values are stored row-major with i (x1) fastest: index j * n1 + i.
class GridConvex2D
{
public:
	GridConvex2D() = default;
	GridConvex2D(Box box, int n1, int n2, std::vector<double> values);
	GridConvex2D(Box box, int n1, int n2, double fill);
	static GridConvex2D sample(const std::function<double(Vec2)> &fn, Box box, int n1, int n2);

	const Box &box() const { return box_; }
	int n1() const { return n1_; }
	int n2() const { return n2_; }
	double h1() const { return (box_.b1 - box_.a1) / (n1_ - 1); }
	double h2() const { return (box_.b2 - box_.a2) / (n2_ - 1); }
	double h() const { return std::max(h1(), h2()); }
	double x1(int i) const;
	double x2(int j) const;
	Vec2 node(int i, int j) const { return {x1(i), x2(j)}; }
	std::vector<double> axis1() const;
	std::vector<double> axis2() const;

	double at(int i, int j) const { return v_[static_cast<std::size_t>(j) * n1_ + i]; }
	double &at(int i, int j) { return v_[static_cast<std::size_t>(j) * n1_ + i]; }
	const std::vector<double> &values() const { return v_; }
	std::vector<double> &values() { return v_; }

	/// Bilinear interpolation; +inf outside the box or when a contributing corner is +inf.
	double operator()(Vec2 p) const;

	std::size_t finite_count() const;
	/// Max |forward difference| between finite neighbours along axis (0 or 1).
	double max_slope(int axis) const;
	/// Finite grid nodes.
	std::vector<Vec2> finite_nodes() const;

private:
	Box box_;
	int n1_ = 0, n2_ = 0;
	std::vector<double> v_;
};

/// Dual box [-S1,S1] x [-S2,S2] with S_i = max(1.25 * max finite-difference slope, 1).
Box default_dual_box(const GridConvex2D &psi);

/// Discrete conjugate max_x <s,x> - psi(x) on the dual grid, by two passes of the
/// 1D linear-time transform. Rows with no finite value contribute nothing.
GridConvex2D conjugate_grid(const GridConvex2D &psi, std::optional<Box> dual_box = std::nullopt, int m1 = 0, int m2 = 0,
			    Exec exec = Exec::Parallel);

/// O(N^4) reference for conjugate_grid.
GridConvex2D conjugate_grid_brute(const GridConvex2D &psi, Box dual_box, int m1, int m2);

/// Exact discrete conjugate of a grid function at arbitrary slopes: per-row lower
/// hulls, O(n2 log n1) per query.
class ConjugateEvaluator
{
public:
	explicit ConjugateEvaluator(const GridConvex2D &psi);
	double operator()(Vec2 s) const;

private:
	std::vector<double> y_;
	std::vector<HullMax> rows_;
};

/// Discrete biconjugate on the same grid. Cells that were +inf stay +inf.
GridConvex2D convexify(const GridConvex2D &psi, Exec exec = Exec::Parallel);

/// (phi box) + (psi box) grid at the finer of the two spacings, computed as
/// L(L phi + L psi) and masked to dom(phi) + dom(psi). An explicit dual box that
/// does not contain the finite-difference slopes throws, naming the axis.
GridConvex2D inf_conv_grid(const GridConvex2D &phi, const GridConvex2D &psi, std::optional<Box> dual_box = std::nullopt,
			   Exec exec = Exec::Parallel);

/// Direct O(N^4) double-loop infimal convolution on the same output grid.
GridConvex2D inf_conv_grid_brute(const GridConvex2D &phi, const GridConvex2D &psi);

/// x -> lambda * psi(x / lambda): nodes map to nodes of the scaled box.
GridConvex2D epi_mult_grid(double lambda, const GridConvex2D &psi);

/// x -> c * psi(x).
GridConvex2D scale_grid(double c, const GridConvex2D &psi);

/// x -> psi(R_u x) on the bounding box of R_u(box). Axis-aligned u permutes the
/// array; other directions resample bilinearly at the input spacing.
GridConvex2D reflect_grid(const GridConvex2D &psi, const Direction &u);

/// Unit vector spanning u-perp with positive first nonzero coordinate; the
/// coordinate of projections.
Vec2 hyperplane_axis(const Direction &u);

/// t -> inf_r psi(t v + r u), v = hyperplane_axis(u), as a lower hull.
ConvexPL1D project_grid(const GridConvex2D &psi, const Direction &u);

/// Convex hull vertices of a point set, tolerant of degenerate sets (returns one
/// or two points for a point or a segment).
std::vector<Vec2> hull_points(std::span<const Vec2> pts);

/// Membership in conv(A) + conv(B) via the union of edge normals.
class SumDomain
{
public:
	SumDomain(std::vector<Vec2> a, std::vector<Vec2> b);
	bool contains(Vec2 p, double tol) const;

private:
	std::vector<Vec2> normals_;
	std::vector<double> support_;
};

/// max over nodes of |min(a,T) - min(b,T)| for two grids on the same lattice.
double capped_distance(const GridConvex2D &a, const GridConvex2D &b, double cap);

} // namespace alphasym
