#pragma once

#include "alphasym/bodies.hpp"
#include "alphasym/convex1d.hpp"
#include "alphasym/grid2d.hpp"
#include "alphasym/polar.hpp"

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <variant>

namespace alphasym
{

/// alpha = -inf marks the quasiconcave class, which has no base function.
inline constexpr double kLayerAlpha = -std::numeric_limits<double>::infinity();

/// base_alpha f = (1 - f^alpha) / alpha, or -log f at alpha = 0. Zero maps to +inf.
double to_base(double f, double alpha);
/// f = (1 - alpha b)_+^(1/alpha), or e^-b at alpha = 0. +inf maps to zero.
double from_base(double b, double alpha);

/// M_alpha^(s,t)(u, v); zero when u v = 0. The log form is used for |alpha| < 1e-8.
double alpha_mean(double s, double t, double u, double v, double alpha);

/// Nonnegative piecewise-linear function on the line, zero outside [x_0, x_m].
/// Breakpoints are nondecreasing; a repeated abscissa encodes a jump and the
/// larger value is taken there (upper semicontinuity).
class QuasiPL1D
{
public:
	static QuasiPL1D make(std::vector<double> x, std::vector<double> v);
	static QuasiPL1D indicator(double a, double b, double height = 1.0);
	static QuasiPL1D sample(const std::function<double(double)> &fn, double a, double b, int n);

	const std::vector<double> &x() const { return x_; }
	const std::vector<double> &v() const { return v_; }
	double operator()(double t) const;
	double sup() const;
	double integral() const;

private:
	std::vector<double> x_;
	std::vector<double> v_;
};

/// Nonnegative values on a grid (bilinear between nodes, zero outside).
class QuasiGrid2D
{
public:
	explicit QuasiGrid2D(GridConvex2D values);
	const GridConvex2D &grid() const { return g_; }
	double operator()(Vec2 p) const;
	double sup() const;

private:
	GridConvex2D g_;
};

/// Support function of the base on a polar dual mesh together with the support
/// function of the base's domain.
struct PolarDual
{
	PolarField field;
	PolarSupport domain;
};

struct LevelStack;

/// An alpha-concave function: a base function for real alpha, nonnegative values
/// for alpha = -inf.
class AlphaFunction
{
public:
	static AlphaFunction with_base(double alpha, ConvexPL1D base);
	static AlphaFunction with_base(double alpha, GridConvex2D base, std::shared_ptr<const PolarDual> dual = nullptr);
	static AlphaFunction quasi(QuasiPL1D values);
	static AlphaFunction quasi(QuasiGrid2D values, std::shared_ptr<const LevelStack> levels = nullptr);

	double alpha() const { return alpha_; }
	bool layered() const { return alpha_ == kLayerAlpha; }
	int dim() const;

	const ConvexPL1D &base1() const;
	const GridConvex2D &base2() const;
	const QuasiPL1D &q1() const;
	const QuasiGrid2D &q2() const;
	/// Dual-side representation carried by symmetrized 2D functions.
	const PolarDual *dual() const { return dual_.get(); }
	std::shared_ptr<const PolarDual> dual_ptr() const { return dual_; }
	/// Exact level sets carried by 2D layer-cake symmetrals.
	const LevelStack *levels() const { return levels_.get(); }

	double operator()(double x) const;
	double operator()(Vec2 x) const;
	double sup() const;

	/// Values on the function's own lattice (2D) for inspection and distances.
	GridConvex2D values2() const;

private:
	double alpha_ = 0.0;
	std::variant<ConvexPL1D, GridConvex2D, QuasiPL1D, QuasiGrid2D> rep_;
	std::shared_ptr<const PolarDual> dual_;
	std::shared_ptr<const LevelStack> levels_;
	explicit AlphaFunction(double a, decltype(rep_) r)
		: alpha_(a)
		, rep_(std::move(r))
	{
	}
};

/// Base-level operations on functions sharing alpha.
AlphaFunction alpha_from_values2(double alpha, const GridConvex2D &values);

/// a x_alpha f (+)_alpha b x_alpha g by direct sup over sampled splits y + z = x.
/// Output on n uniform points (1D, n <= 257) or n x n nodes (2D, n <= 33) of the
/// sum of the supports; the split variable ranges over the same count of samples.
AlphaFunction alpha_sum_brute(const AlphaFunction &f, const AlphaFunction &g, double a, double b, int n);

/// a ._alpha f *_alpha b ._alpha g through base functions.
AlphaFunction alpha_asplund(const AlphaFunction &f, const AlphaFunction &g, double a, double b);

/// Superlevel set {f >= t}: empty, a convex body, or (2D) a degenerate point set.
struct LevelSet
{
	enum class Kind
	{
		Empty,
		Body,
		Degenerate
	};
	Kind kind = Kind::Empty;
	std::optional<ConvexBody> body;
	std::vector<Vec2> points; // hull vertices (2D), or {lo, hi} in x (1D)
	bool empty() const { return kind == Kind::Empty; }
};

/// Superlevel sets of a layer-cake sum of nested sets: lev_s f = sets[l] for
/// t[l-1] < s <= t[l]. The lattice values are its rasterization.
struct LevelStack
{
	std::vector<double> t;
	std::vector<LevelSet> sets;
};

/// Uses the carried level stack when present; otherwise extracts from the
/// representation (exact in 1D, hull of grid nodes in 2D).
LevelSet superlevel_set(const AlphaFunction &f, double t);

/// Hausdorff distance between two nonempty level sets (degenerate sets included).
double level_hausdorff(const LevelSet &a, const LevelSet &b);
/// max over points of b of the distance to a (one-sided: b within eps of a).
double level_excess(const LevelSet &a, const LevelSet &b);

/// Level ladder t_l = l * top / levels, l = 1..levels; top = 0 means sup f.
struct Ladder
{
	int levels = 64;
	double top = 0.0;
};

/// Layer-cake Minkowski symmetral of a quasiconcave function. 2D: hulls of the
/// grid superlevel sets on the ladder, symmetrized and reassembled as lower sums
/// on the input lattice. 1D: the ladder is augmented by all breakpoint values and
/// reassembly is linear in t between levels, which is exact.
AlphaFunction layer_cake_symmetral(const AlphaFunction &f, const Direction &u, Ladder ladder = {});

/// Steiner symmetral of a 1D quasiconcave function, by bisection on the level.
double steiner_value_1d(const AlphaFunction &f, double x);

/// Symmetral of a level set about u-perp, degenerate sets included.
LevelSet symmetral_level(const LevelSet &s, const Direction &u);

/// Largest violation of f(lx + (1-l)y) >= M_beta^(l,1-l)(f(x), f(y)) over random
/// segments inside the support.
double concavity_violation(const AlphaFunction &f, double beta, int segments, std::mt19937_64 &rng);

/// alpha-concave function with base equal to the given one, values for alpha = -inf.
AlphaFunction to_quasi(const AlphaFunction &f, int samples_1d = 2049);

} // namespace alphasym
