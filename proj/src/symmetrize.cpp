#include "alphasym/symmetrize.hpp"

#include "alphasym/extended.hpp"
#include "alphasym/widths.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace alphasym
{

namespace
{

void require_line(const Direction &u)
{
	if (u.dim() != 1)
		throw std::invalid_argument("symmetral: a 1D function needs a direction on the line");
}

} // namespace

ConvexPL1D dual_average(const ConvexPL1D &psi, const Direction &u)
{
	require_line(u);
	ConvexPL1D h = conjugate_pl(psi);
	return add_pl(scale_pl(0.5, h), scale_pl(0.5, reflect_pl(h)));
}

ConvexPL1D conjugate_symmetral(const ConvexPL1D &psi, const Direction &u) { return conjugate_pl(dual_average(psi, u)); }

ConvexPL1D direct_symmetral(const ConvexPL1D &psi, const Direction &u)
{
	require_line(u);
	return inf_conv_pl(epi_mult_pl(0.5, psi), epi_mult_pl(0.5, reflect_pl(psi)));
}

PolarDual dual_average(const PolarDual &d, const Direction &u)
{
	return PolarDual{d.field.reflect_average(u), d.domain.reflect_average(u)};
}

GridConvex2D conjugate_symmetral(const GridConvex2D &psi, const Direction &u, const PolarSpec &spec)
{
	PolarDual avg = dual_average(polar_dual_of(psi, spec), u);
	return primal_from_polar(avg, psi.box(), psi.n1(), psi.n2(), spec);
}

AlphaFunction alpha_minkowski_symmetral(const AlphaFunction &f, const Direction &u, const PolarSpec &spec)
{
	if (f.dim() != u.dim())
		throw std::invalid_argument("symmetral: direction dimension does not match the function");
	if (f.layered())
		return layer_cake_symmetral(f, u);
	if (f.dim() == 1)
		return AlphaFunction::with_base(f.alpha(), conjugate_symmetral(f.base1(), u));
	auto avg = std::make_shared<const PolarDual>(dual_average(*polar_dual(f, spec), u));
	const GridConvex2D &b = f.base2();
	GridConvex2D grid = primal_from_polar(*avg, b.box(), b.n1(), b.n2(), spec);
	return AlphaFunction::with_base(f.alpha(), std::move(grid), avg);
}

std::vector<Direction> Schedule::directions(int m, int dim) const
{
	std::vector<Direction> out;
	if (dim == 1) {
		out.assign(m, Direction::line(1));
		return out;
	}
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> U(0.0, std::numbers::pi);
	if (kind == Kind::ExplicitList && angles.empty())
		throw std::invalid_argument("schedule: explicit list is empty");
	for (int k = 0; k < m; ++k) {
		double phi = 0.0;
		switch (kind) {
		case Kind::GoldenAngle:
			phi = std::fmod(k * std::numbers::pi * kGoldenGamma, std::numbers::pi);
			break;
		case Kind::CyclicIrrational:
			phi = k % 2 == 0 ? 0.0 : std::numbers::pi * kGoldenGamma;
			break;
		case Kind::RandomSeeded:
			phi = U(rng);
			break;
		case Kind::ExplicitList:
			phi = angles[static_cast<std::size_t>(k) % angles.size()];
			break;
		}
		out.push_back(Direction::angle(phi));
	}
	return out;
}

std::string ConvergenceReport::to_csv() const
{
	std::ostringstream os;
	os.precision(17);
	os << "iteration,distance,w_alpha,mass\n";
	for (const auto &r : records)
		os << r.iteration << ',' << r.distance << ',' << r.width << ',' << r.mass << '\n';
	return os.str();
}

double epi_distance(const AlphaFunction &f, const AlphaFunction &g, double cap)
{
	if (f.dim() != g.dim() || f.layered() != g.layered())
		throw std::invalid_argument("epi_distance: functions differ in dimension or class");
	auto capped = [cap](double v) { return is_inf(v) ? cap : std::min(v, cap); };
	if (f.dim() == 2) {
		if (f.layered()) {
			const GridConvex2D &a = f.q2().grid(), &b = g.q2().grid();
			if (!(a.box() == b.box()) || a.n1() != b.n1() || a.n2() != b.n2())
				throw std::invalid_argument("epi_distance: lattices differ");
			double d = 0.0;
			for (std::size_t q = 0; q < a.values().size(); ++q)
				d = std::max(d, std::abs(a.values()[q] - b.values()[q]));
			return d;
		}
		const GridConvex2D &a = f.base2(), &b = g.base2();
		if (!(a.box() == b.box()) || a.n1() != b.n1() || a.n2() != b.n2())
			throw std::invalid_argument("epi_distance: lattices differ");
		return capped_distance(a, b, cap);
	}
	std::vector<double> xs;
	double lo, hi;
	if (f.layered()) {
		xs = f.q1().x();
		xs.insert(xs.end(), g.q1().x().begin(), g.q1().x().end());
		lo = std::min(f.q1().x().front(), g.q1().x().front());
		hi = std::max(f.q1().x().back(), g.q1().x().back());
	} else {
		xs = f.base1().x();
		xs.insert(xs.end(), g.base1().x().begin(), g.base1().x().end());
		lo = std::min(f.base1().lo(), g.base1().lo());
		hi = std::max(f.base1().hi(), g.base1().hi());
	}
	for (int k = 0; k <= 4000; ++k)
		xs.push_back(lo + (hi - lo) * k / 4000);
	double d = 0.0;
	for (double x : xs) {
		if (f.layered())
			d = std::max(d, std::abs(f(x) - g(x)));
		else
			d = std::max(d, std::abs(capped(f.base1()(x)) - capped(g.base1()(x))));
	}
	return d;
}

AlphaFunction hypo_symmetrization_oracle(const AlphaFunction &f, const PolarSpec &spec)
{
	if (f.layered())
		throw std::invalid_argument("hypo-symmetrization oracle: needs real alpha");
	if (f.dim() == 1)
		return AlphaFunction::with_base(f.alpha(), conjugate_symmetral(f.base1(), Direction::line(1)));
	auto d = polar_dual(f, spec);
	auto avg = std::make_shared<const PolarDual>(PolarDual{d->field.angular_mean(64), PolarSupport::disk(d->domain.mean(), d->domain.nk())});
	const GridConvex2D &b = f.base2();
	GridConvex2D grid = primal_from_polar(*avg, b.box(), b.n1(), b.n2(), spec);
	return AlphaFunction::with_base(f.alpha(), std::move(grid), avg);
}

std::pair<AlphaFunction, ConvergenceReport> iterate_symmetrizations(const AlphaFunction &f, const Schedule &schedule, int m,
								   const IterateOptions &opt)
{
	if (m < 1)
		throw std::invalid_argument("iterate_symmetrizations: need at least one step");
	AlphaFunction oracle = hypo_symmetrization_oracle(f, opt.spec);
	std::vector<Direction> dirs = schedule.directions(m, f.dim());
	ConvergenceReport rep;
	auto record = [&](int it, const AlphaFunction &g) {
		ConvergenceRecord r;
		r.iteration = it;
		r.distance = epi_distance(g, oracle, opt.cap);
		if (opt.track_width)
			r.width = mean_width(g, g.alpha()).value;
		if (opt.track_mass)
			r.mass = total_mass(g);
		rep.records.push_back(r);
	};
	AlphaFunction cur = f;
	record(0, cur);
	for (int k = 0; k < m; ++k) {
		cur = alpha_minkowski_symmetral(cur, dirs[k], opt.spec);
		record(k + 1, cur);
	}
	rep.final_distance = rep.records.back().distance;
	rep.iterations = m;
	return {cur, rep};
}

AlphaFunction unconditionalize(const AlphaFunction &f, const PolarSpec &spec)
{
	if (f.dim() == 1)
		return alpha_minkowski_symmetral(f, Direction::line(1), spec);
	AlphaFunction g = alpha_minkowski_symmetral(f, Direction::axis(0), spec);
	return alpha_minkowski_symmetral(g, Direction::axis(1), spec);
}

} // namespace alphasym
