#include "alphasym/extremal.hpp"

#include "alphasym/catalog.hpp"
#include "alphasym/extended.hpp"
#include "alphasym/linearize.hpp"
#include "alphasym/widths.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace alphasym
{

namespace
{

/// Hausdorff distance between a level set and the centred disk of radius r.
double distance_to_disk(const LevelSet &s, double r)
{
	if (s.empty())
		return kInf;
	double worst = 0.0;
	for (Vec2 v : s.body ? s.body->vertices() : s.points)
		worst = std::max(worst, norm(v) - r);
	LevelSet d;
	d.kind = LevelSet::Kind::Degenerate;
	for (int k = 0; k < 720; ++k) {
		double t = 2.0 * std::numbers::pi * k / 720;
		d.points.push_back({r * std::cos(t), r * std::sin(t)});
	}
	return std::max(worst, level_excess(s, d));
}

} // namespace

double FunctionalSpec::exponent() const
{
	if (exponent_override)
		return *exponent_override;
	return alpha / (dim + alpha);
}

FunctionalSpec total_mass_functional(int dim)
{
	return {"J", [](const AlphaFunction &f) { return total_mass(f); }, Hypothesis::Concave, 0.0, dim, std::nullopt};
}

FunctionalSpec mean_width_functional(int dim)
{
	return {"w0", [](const AlphaFunction &f) { return mean_width(f, 0.0).value; }, Hypothesis::Concave, 0.0, dim,
		std::nullopt};
}

FunctionalSpec gn_functional(int N, int M)
{
	return {"G_" + std::to_string(N), [N, M](const AlphaFunction &f) { return best_G_N(f, N, GNMode::Exhaustive, M).value; },
		Hypothesis::Convex, 0.0, 1, std::nullopt};
}

HypothesisReport check_hypothesis(const FunctionalSpec &F, const std::vector<std::pair<AlphaFunction, AlphaFunction>> &pairs,
				  const std::vector<double> &lambdas, double tol)
{
	double p = F.exponent();
	HypothesisReport rep;
	for (std::size_t i = 0; i < pairs.size(); ++i) {
		const auto &[f, g] = pairs[i];
		double a = F.eval(f), b = F.eval(g);
		for (double l : lambdas) {
			double c = F.eval(alpha_asplund(f, g, l, 1.0 - l));
			double lhs, rhs;
			if (p == 0.0) {
				lhs = std::log(c);
				rhs = l * std::log(a) + (1.0 - l) * std::log(b);
			} else {
				lhs = std::pow(c, p);
				rhs = l * std::pow(a, p) + (1.0 - l) * std::pow(b, p);
			}
			++rep.cases;
			double slack = tol * (1.0 + std::abs(rhs));
			bool ok = F.direction == Hypothesis::Convex ? lhs <= rhs + slack : lhs >= rhs - slack;
			if (!ok)
				rep.violations.push_back({i, l, lhs, rhs});
		}
	}
	return rep;
}

ConclusionRecord check_conclusion(const FunctionalSpec &F, const AlphaFunction &f, double tol, const PolarSpec &spec)
{
	ConclusionRecord r;
	r.value = F.eval(f);
	r.value_sym = F.eval(hypo_symmetrization_oracle(f, spec));
	r.holds = F.direction == Hypothesis::Convex ? r.value >= r.value_sym - tol : r.value <= r.value_sym + tol;
	return r;
}

std::vector<double> trajectory(const FunctionalSpec &F, const AlphaFunction &f, const Schedule &schedule, int m,
			       const PolarSpec &spec)
{
	std::vector<double> out{F.eval(f)};
	AlphaFunction g = f;
	for (const Direction &u : schedule.directions(m, f.dim())) {
		g = alpha_minkowski_symmetral(g, u, spec);
		out.push_back(F.eval(g));
	}
	return out;
}

UrysohnRecord classical_urysohn(const ConvexBody &K, const Box &box, int n, double tol)
{
	if (K.dim() != 2)
		throw std::invalid_argument("urysohn: needs a polygon");
	CatalogEntry e;
	e.name = "urysohn", e.family = "indicator", e.dim = 2, e.polygon = K.vertices(), e.box = box, e.n = n;
	AlphaFunction f = e.make(kLayerAlpha);
	UrysohnRecord r;
	r.volume = ladder_mass(f);
	r.width = mean_width(f, kLayerAlpha).value;
	r.bound = (r.width / 2.0) * (r.width / 2.0) * std::numbers::pi;
	r.holds = r.volume <= r.bound + tol;
	return r;
}

IndicatorLemmaRecord indicator_lemma(const ConvexBody &K, const Box &box, int n, int steps, const PolarSpec &spec)
{
	CatalogEntry e;
	e.name = "lemma", e.family = "indicator", e.dim = 2, e.polygon = K.vertices(), e.box = box, e.n = n;
	AlphaFunction f = e.make(0.0);
	IndicatorLemmaRecord r;
	r.radius = mean_width_body(K) / 2.0;
	r.h = f.base2().h();
	r.oracle_distance = distance_to_disk(superlevel_set(hypo_symmetrization_oracle(f, spec), 0.5), r.radius);
	IterateOptions opt;
	opt.track_width = opt.track_mass = false;
	opt.spec = spec;
	auto [g, rep] = iterate_symmetrizations(f, Schedule::golden(), steps, opt);
	r.iterate_distance = distance_to_disk(superlevel_set(g, 0.5), r.radius);
	return r;
}

} // namespace alphasym
