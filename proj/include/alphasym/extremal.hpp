#pragma once

#include "alphasym/alpha.hpp"
#include "alphasym/bodies.hpp"
#include "alphasym/symmetrize.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace alphasym
{

/// Which way the power-mean hypothesis on F runs: Convex means
/// F(l . f * (1-l) . g)^p <= l F(f)^p + (1-l) F(g)^p with p = alpha / (n + alpha)
/// (log form at p = 0); Concave reverses it and the conclusion F(f) >= F(f_sym).
enum class Hypothesis
{
	Convex,
	Concave
};

struct FunctionalSpec
{
	std::string name;
	std::function<double(const AlphaFunction &)> eval;
	Hypothesis direction = Hypothesis::Convex;
	double alpha = 0.0;
	int dim = 1;
	std::optional<double> exponent_override;

	/// alpha / (n + alpha) unless overridden.
	double exponent() const;
};

/// J, concave hypothesis at alpha = 0.
FunctionalSpec total_mass_functional(int dim);
/// w_0: linear under Asplund sums, hence log-concave; conserved by symmetrals.
FunctionalSpec mean_width_functional(int dim);
/// G_N with the exhaustive optimizer (1D), convex hypothesis.
FunctionalSpec gn_functional(int N, int M = 33);

struct HypothesisViolation
{
	std::size_t pair = 0;
	double lambda = 0.0;
	double lhs = 0.0, rhs = 0.0; // the two sides of the power-mean inequality
};

struct HypothesisReport
{
	std::size_t cases = 0;
	std::vector<HypothesisViolation> violations;
	bool holds() const { return violations.empty(); }
};

/// Evaluates the hypothesis on every pair and lambda; report only.
HypothesisReport check_hypothesis(const FunctionalSpec &F, const std::vector<std::pair<AlphaFunction, AlphaFunction>> &pairs,
				  const std::vector<double> &lambdas, double tol = 1e-9);

struct ConclusionRecord
{
	double value = 0.0;     // F(f)
	double value_sym = 0.0; // F(f_sym)
	bool holds = false;
};

/// F(f) against F(f_sym) with f_sym from the spherical-average oracle.
ConclusionRecord check_conclusion(const FunctionalSpec &F, const AlphaFunction &f, double tol = 1e-3,
				  const PolarSpec &spec = {});

/// F along iterated symmetrals (iteration 0 is f).
std::vector<double> trajectory(const FunctionalSpec &F, const AlphaFunction &f, const Schedule &schedule, int m,
			       const PolarSpec &spec = {});

struct UrysohnRecord
{
	double volume = 0.0;
	double width = 0.0;
	double bound = 0.0; // (w / w(B))^2 vol(B)
	bool holds = false;
};

/// vol(K) <= (w(K) / w(B))^2 pi with volume and width taken from the lattice
/// indicator of K (total mass and w_{-inf}).
UrysohnRecord classical_urysohn(const ConvexBody &K, const Box &box, int n, double tol = 1e-2);

struct IndicatorLemmaRecord
{
	double radius = 0.0;         // w(K) / 2
	double oracle_distance = 0.0; // Hausdorff(lev_{1/2} oracle, disk)
	double iterate_distance = 0.0; // Hausdorff(lev_{1/2} iterate, disk)
	double h = 0.0;
};

/// Level-1/2 sets of the symmetrized indicator (alpha = 0 route) against the disk
/// with the mean width of K.
IndicatorLemmaRecord indicator_lemma(const ConvexBody &K, const Box &box, int n, int steps, const PolarSpec &spec = {});

} // namespace alphasym
