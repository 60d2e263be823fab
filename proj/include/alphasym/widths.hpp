#pragma once

#include "alphasym/alpha.hpp"
#include "alphasym/dual.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace alphasym
{

struct QuadratureSpec
{
	enum class Kind
	{
		Auto,         // exact piecewise-linear integration in 1D, Gauss-Hermite in 2D
		GaussHermite, // tensor rule, `nodes` per axis
		Trapezoid,    // exact piecewise-linear in 1D, polar ring rule in 2D
		MonteCarlo
	};
	Kind kind = Kind::Auto;
	int nodes = 32;
	std::optional<std::uint64_t> seed;
	int samples = 100000;
};

const char *quadrature_name(QuadratureSpec::Kind k);

struct WidthResult
{
	double value = 0.0;
	double std_error = 0.0;  // Monte-Carlo only
	double tail_bound = 0.0; // alpha < 0: estimate of the truncated tail
};

/// Probabilists' Gauss-Hermite rule: sum w_i g(x_i) approximates the integral
/// of g against the standard Gaussian density.
struct GaussRule
{
	std::vector<double> x, w;
};
GaussRule gauss_hermite(int n);
GaussRule gauss_legendre(int n); // on [-1, 1]

/// Integral of the piecewise-linear h against the standard Gaussian (1D), exact.
double gaussian_integral_pl(const ConvexPL1D &h);

/// h_f^(alpha) = L(base f). 1D: windowed PL. 2D: polar dual.
ConvexPL1D alpha_support(const AlphaFunction &f);
std::shared_ptr<const PolarDual> alpha_support2(const AlphaFunction &f, const PolarSpec &spec = {});

/// w_alpha(f). alpha must match f's alpha. For alpha = -inf the level ladder is used.
WidthResult mean_width(const AlphaFunction &f, double alpha, const QuadratureSpec &quad = {}, Ladder ladder = {});
/// Mean width from a polar dual directly.
WidthResult mean_width_dual(const PolarDual &d, double alpha, const QuadratureSpec &quad = {});

/// J(f) = integral of f over its representation (trapezoid on the lattice in 2D).
double total_mass(const AlphaFunction &f);
/// J(f) by the layer-cake route: integral over t of vol(lev_t f).
double total_mass_layer_cake(const AlphaFunction &f, int levels = 256);
/// Lower sum over the ladder of the exact level-set volumes: the mass of the
/// layer-cake sum built from f on that ladder. Equals total_mass of a layer-cake
/// symmetral of f when the symmetral preserves volumes.
double ladder_mass(const AlphaFunction &f, Ladder ladder = {});

struct PrekopaLeindler
{
	double lhs = 0.0, rhs = 0.0;
	bool holds = false;
};
/// J(l . f * (1-l) . g) against J(f)^l J(g)^(1-l); holds means lhs >= rhs - tol.
PrekopaLeindler prekopa_leindler_check(const AlphaFunction &f, const AlphaFunction &g, double lambda, double tol = 1e-3);

} // namespace alphasym
