#pragma once

#include "alphasym/alpha.hpp"
#include "alphasym/convex1d.hpp"
#include "alphasym/grid2d.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace alphasym
{

/// Finite point set (x_i, y_i) in an epigraph (or a hypograph for the log
/// versions). In dimension 1 only x_i.x is used.
struct BreakPointSet
{
	int dim = 1;
	std::vector<Vec2> x;
	std::vector<double> y;

	std::size_t size() const { return y.size(); }
	static BreakPointSet line(std::vector<double> xs, std::vector<double> ys);
	static BreakPointSet plane(std::vector<Vec2> xs, std::vector<double> ys);
};

/// Throws unless X has at least dim + 2 points.
void require_break_point_count(const BreakPointSet &X);

/// Lower convex hull of the vertical rays over X in 1D. Throws naming the index
/// of a point below the graph of psi (y_i < psi(x_i) - tol).
ConvexPL1D inner_linearization(const ConvexPL1D &psi, const BreakPointSet &X, double tol = 1e-9);

/// 2D inner linearization: min sum l_i y_i over l in the simplex with
/// sum l_i x_i = x, +inf outside conv{x_i}. Solved by enumerating the active sets
/// of at most three points (the basic feasible solutions), N <= 16.
class InnerLinearization2D
{
public:
	InnerLinearization2D(const std::function<double(Vec2)> &psi, BreakPointSet X, double tol = 1e-9);
	double operator()(Vec2 p) const;
	/// Values on a lattice (rows in parallel).
	GridConvex2D sample(const Box &box, int n1, int n2, Exec exec = Exec::Parallel) const;
	const BreakPointSet &points() const { return X_; }

private:
	BreakPointSet X_;
	double tol_;
};

/// conv_down Y: e^{-p} with p the inner linearization of {(x_i, -log y_i)} over
/// base f. 1D is exact; 2D samples the LP on f's lattice. Requires alpha = 0 and
/// 0 < y_i <= f(x_i) + tol.
AlphaFunction inner_log_linearization(const AlphaFunction &f, const BreakPointSet &Y, double tol = 1e-9);

struct SplitResult
{
	BreakPointSet xf, xg; // epigraph points of base f and base g
	ConvexPL1D pf = ConvexPL1D::point(0.0), pg = ConvexPL1D::point(0.0); // their inner linearizations
	double worst_gap = 0.0; // max over the check points of (pf box pg) - p, must be <= 0
};

/// 1D split: each (v_i, t_i) in epi(base f box base g) is written as
/// (a_i, r_i) + (b_i, s_i) with a_i the argmin split of the infimal convolution.
/// The inequality p >= pf box pg is verified on `checks` points of dom p.
SplitResult split_linearization(const BreakPointSet &P, const AlphaFunction &f, const AlphaFunction &g, int checks = 257,
				double tol = 1e-9);

enum class GNMode
{
	Exhaustive,
	Greedy
};

struct GNResult
{
	double value = 0.0;
	std::vector<double> x;   // optimal abscissae (ascending)
	std::vector<double> y;   // f(x_i)
	std::vector<double> candidates;
	std::uint64_t evaluated = 0;
};

/// Candidate abscissae: M uniform points over supp f trimmed where f < 1e-8 max f.
std::vector<double> gn_candidates(const AlphaFunction &f, int M);

/// w_0 of the inner log-linearization with break points (x_i, f(x_i)), x ascending.
double gn_objective(const AlphaFunction &f, const std::vector<double> &x);

/// G_N(f) over the candidate grid. Exhaustive requires M <= 40 and N <= 5 and
/// breaks ties by the lexicographically smallest abscissa tuple; greedy is forward
/// insertion followed by single-point coordinate descent.
GNResult best_G_N(const AlphaFunction &f, int N, GNMode mode = GNMode::Exhaustive, int M = 33);

/// w_0(f) - w_0(q). Throws when q exceeds f by more than tol somewhere on the
/// comparison points.
double mean_width_deficit(const AlphaFunction &f, const AlphaFunction &q, double tol = 1e-9);

} // namespace alphasym
