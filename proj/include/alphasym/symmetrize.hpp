#pragma once

#include "alphasym/alpha.hpp"
#include "alphasym/dual.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace alphasym
{

/// Dual average 1/2 L psi + 1/2 R_u L psi of a bounded 1D base (windowed).
ConvexPL1D dual_average(const ConvexPL1D &psi, const Direction &u);
/// L(1/2 L psi + 1/2 R_u L psi); exact in 1D.
ConvexPL1D conjugate_symmetral(const ConvexPL1D &psi, const Direction &u);
/// 1/2 . psi box 1/2 . R_u psi by direct infimal convolution.
ConvexPL1D direct_symmetral(const ConvexPL1D &psi, const Direction &u);

/// Dual-side average on the polar mesh (field and domain).
PolarDual dual_average(const PolarDual &d, const Direction &u);
/// 2D conjugate symmetral of a grid base, returned on the input lattice.
GridConvex2D conjugate_symmetral(const GridConvex2D &psi, const Direction &u, const PolarSpec &spec = {});

/// tau_u^alpha f. Real alpha acts on the base through the conjugate route; in 2D
/// the result carries its polar dual so that repeated symmetrals stay on the
/// dual side. alpha = -inf uses the layer-cake symmetral.
AlphaFunction alpha_minkowski_symmetral(const AlphaFunction &f, const Direction &u, const PolarSpec &spec = {});

struct Schedule
{
	enum class Kind
	{
		CyclicIrrational,
		GoldenAngle,
		RandomSeeded,
		ExplicitList
	};
	Kind kind = Kind::GoldenAngle;
	std::uint64_t seed = 0;
	std::vector<double> angles; // explicit list (radians)

	static Schedule golden() { return {}; }
	static Schedule cyclic() { return {Kind::CyclicIrrational, 0, {}}; }
	static Schedule random(std::uint64_t seed) { return {Kind::RandomSeeded, seed, {}}; }
	static Schedule list(std::vector<double> angles) { return {Kind::ExplicitList, 0, std::move(angles)}; }

	/// First m hyperplane directions for dimension dim (dim 1: always the line).
	std::vector<Direction> directions(int m, int dim) const;
};

/// Golden ratio conjugate (sqrt 5 - 1) / 2.
inline constexpr double kGoldenGamma = 0.6180339887498949;

struct ConvergenceRecord
{
	int iteration = 0;
	double distance = 0.0;
	double width = 0.0;
	double mass = 0.0;
};

struct ConvergenceReport
{
	std::vector<ConvergenceRecord> records;
	double final_distance = 0.0;
	int iterations = 0;
	std::string to_csv() const;
};

/// d_T: max |min(phi, T) - min(psi, T)| over the lattice (2D, same lattice) or over
/// breakpoints plus a uniform mesh of the union of domains (1D).
double epi_distance(const AlphaFunction &f, const AlphaFunction &g, double cap = 50.0);

/// Function with base L(angular mean of L base f): 64 angles on every ring in 2D,
/// (h(s) + h(-s)) / 2 in 1D.
AlphaFunction hypo_symmetrization_oracle(const AlphaFunction &f, const PolarSpec &spec = {});

struct IterateOptions
{
	double cap = 50.0;
	bool track_width = true;
	bool track_mass = true;
	PolarSpec spec = {};
};

std::pair<AlphaFunction, ConvergenceReport> iterate_symmetrizations(const AlphaFunction &f, const Schedule &schedule, int m,
								   const IterateOptions &opt = {});

/// Symmetrals about every coordinate hyperplane in turn.
AlphaFunction unconditionalize(const AlphaFunction &f, const PolarSpec &spec = {});

} // namespace alphasym
