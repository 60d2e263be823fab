#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace alphasym
{

/// How a piecewise-linear convex function behaves outside its breakpoint range.
///   Bounded:  +inf outside [x_0, x_m] (coercive base functions, indicators).
///   Windowed: continues affinely with the end slopes (materialized conjugates of
///             bounded functions, which are finite on the whole line).
enum class Extent
{
	Bounded,
	Windowed
};

/// Convex piecewise-linear function on the line, stored as breakpoints and values.
/// Slopes are nondecreasing; collinear interior breakpoints are merged (1e-12).
class ConvexPL1D
{
public:
	/// Validates strict increase of x, finiteness and convexity (up to a relative
	/// 1e-10 slack, after which slopes are clamped to be monotone).
	static ConvexPL1D make(std::vector<double> x, std::vector<double> v, Extent ext = Extent::Bounded);
	static ConvexPL1D indicator(double a, double b, double c = 0.0);
	static ConvexPL1D point(double x0, double c = 0.0);
	/// Lower convex hull of a point cloud (monotone chain); x may repeat.
	static ConvexPL1D lower_hull(std::vector<std::pair<double, double>> pts, Extent ext = Extent::Bounded);
	/// Lower hull of n uniform samples of fn on [a, b].
	static ConvexPL1D sample(const std::function<double(double)> &fn, double a, double b, int n);

	Extent extent() const { return ext_; }
	bool bounded() const { return ext_ == Extent::Bounded; }
	std::size_t size() const { return x_.size(); }
	const std::vector<double> &x() const { return x_; }
	const std::vector<double> &v() const { return v_; }
	double lo() const { return x_.front(); }
	double hi() const { return x_.back(); }
	std::vector<double> slopes() const;
	double min_slope() const;
	double max_slope() const;
	double max_abs_slope() const;

	double operator()(double t) const;
	double min_value() const;

private:
	ConvexPL1D() = default;
	std::vector<double> x_;
	std::vector<double> v_;
	Extent ext_ = Extent::Bounded;
};

/// Legendre conjugate. Bounded input gives a Windowed output on [-S, S]; S <= 0
/// selects max(4 * max|slope|, 1). The window must contain every slope strictly.
/// Windowed input gives the Bounded conjugate on [first slope, last slope].
ConvexPL1D conjugate_pl(const ConvexPL1D &psi, double S = 0.0);

/// Default dual half-width used by conjugate_pl.
double default_dual_window(const ConvexPL1D &psi);

/// Infimal convolution of two Bounded functions by sorted slope merge.
ConvexPL1D inf_conv_pl(const ConvexPL1D &phi, const ConvexPL1D &psi);

/// x -> lambda * psi(x / lambda).
ConvexPL1D epi_mult_pl(double lambda, const ConvexPL1D &psi);

/// x -> c * psi(x), c > 0.
ConvexPL1D scale_pl(double c, const ConvexPL1D &psi);

/// x -> psi(-x).
ConvexPL1D reflect_pl(const ConvexPL1D &psi);

/// Pointwise sum. Bounded if either term is; the domain is then the intersection.
ConvexPL1D add_pl(const ConvexPL1D &a, const ConvexPL1D &b);

/// x -> psi(x) + c.
ConvexPL1D shift_value_pl(const ConvexPL1D &psi, double c);

/// x -> psi(x - c).
ConvexPL1D translate_pl(const ConvexPL1D &psi, double c);

/// psi restricted to [a, b] (Bounded). Throws when [a, b] misses the domain.
ConvexPL1D restrict_pl(const ConvexPL1D &psi, double a, double b);

/// Max of |a - b| over the union of breakpoints within [lo, hi], using each
/// function's own extension (inf - inf counts as 0, inf - finite as inf).
double sup_distance(const ConvexPL1D &a, const ConvexPL1D &b, double lo, double hi);

} // namespace alphasym
