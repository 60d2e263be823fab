#include "alphasym/catalog.hpp"

#include "alphasym/extended.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace alphasym
{

ConvexPL1D random_pl_base_1d(std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> U(0.0, 1.0);
	int m = 4 + static_cast<int>(U(rng) * 5);
	std::vector<double> slopes(m - 1);
	for (auto &s : slopes)
		s = -4.0 + 8.0 * U(rng);
	std::sort(slopes.begin(), slopes.end());
	slopes.front() = std::min(slopes.front(), -0.5);
	slopes.back() = std::max(slopes.back(), 0.5);
	std::vector<double> x{-2.0 + 2.0 * U(rng)}, v{U(rng)};
	for (double s : slopes) {
		double gap = 0.2 + 0.8 * U(rng);
		x.push_back(x.back() + gap);
		v.push_back(v.back() + s * gap);
	}
	double lo = *std::min_element(v.begin(), v.end());
	for (double &t : v)
		t -= lo;
	return ConvexPL1D::make(x, v);
}

GridConvex2D random_pl_base(std::uint64_t seed, int pieces, Box box, int n)
{
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> U(0.0, 1.0);
	std::vector<Vec2> a;
	std::vector<double> b;
	double step = 2.0 * std::numbers::pi / pieces;
	for (int i = 0; i < pieces; ++i) {
		double t = i * step + (U(rng) - 0.5) * 0.6 * step;
		double r = 5.0 + 3.0 * U(rng);
		a.push_back({r * std::cos(t), r * std::sin(t)});
		b.push_back(U(rng));
	}
	return GridConvex2D::sample(
		[&](Vec2 p) {
			double m = -kInf;
			for (int i = 0; i < pieces; ++i)
				m = std::max(m, dot(a[i], p) + b[i]);
			return m;
		},
		box, n, n);
}

ConvexPL1D CatalogEntry::base1() const
{
	if (dim != 1)
		throw std::logic_error("catalog: " + name + " is not one-dimensional");
	if (family == "gaussian" || family == "alpha_gaussian") {
		double c = center.x, kl = curvature.x, kr = curvature.y;
		return ConvexPL1D::sample(
			[=](double x) { return 0.5 * (x < c ? kl : kr) * (x - c) * (x - c); }, c - half_width, c + half_width, n);
	}
	if (family == "indicator")
		return ConvexPL1D::indicator(lo, hi);
	if (family == "pl_base")
		return ConvexPL1D::make(px, pv);
	if (family == "random_convex")
		return random_pl_base_1d(seed);
	throw std::invalid_argument("catalog: unknown family '" + family + "' for " + name);
}

GridConvex2D CatalogEntry::base2() const
{
	if (dim != 2)
		throw std::logic_error("catalog: " + name + " is not two-dimensional");
	if (family == "gaussian" || family == "alpha_gaussian") {
		Vec2 c = center, k = curvature;
		return GridConvex2D::sample(
			[=](Vec2 p) { return 0.5 * (k.x * (p.x - c.x) * (p.x - c.x) + k.y * (p.y - c.y) * (p.y - c.y)); }, box, n, n);
	}
	if (family == "indicator") {
		ConvexBody K = ConvexBody::polygon(polygon);
		double tol = 1e-9 * (1.0 + std::abs(box.b1 - box.a1));
		return GridConvex2D::sample([&](Vec2 p) { return K.distance(p) <= tol ? 0.0 : kInf; }, box, n, n);
	}
	if (family == "random_convex")
		return random_pl_base(seed, pieces, box, n);
	throw std::invalid_argument("catalog: unknown family '" + family + "' for " + name);
}

AlphaFunction CatalogEntry::make(double alpha) const
{
	if (alpha == kLayerAlpha) {
		if (dim == 1)
			return to_quasi(AlphaFunction::with_base(0.0, base1()));
		GridConvex2D v = base2();
		for (double &t : v.values())
			t = std::exp(-t);
		return AlphaFunction::quasi(QuasiGrid2D(std::move(v)));
	}
	if (dim == 1)
		return AlphaFunction::with_base(alpha, base1());
	return AlphaFunction::with_base(alpha, base2());
}

bool CatalogEntry::symmetric() const
{
	if (family == "gaussian" || family == "alpha_gaussian")
		return center.x == 0.0 && center.y == 0.0 && (dim == 2 || curvature.x == curvature.y);
	if (family == "indicator" && dim == 1)
		return lo == -hi;
	return false;
}

std::vector<CatalogEntry> default_catalog()
{
	std::vector<CatalogEntry> c;
	auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };
	CatalogEntry e;

	e = {};
	e.name = "gauss_shift_1d", e.family = "gaussian", e.center = {1.0, 0.0}, e.n = 801;
	add(e);
	e = {};
	e.name = "gauss_skew_1d", e.family = "gaussian", e.center = {0.5, 0.0}, e.curvature = {0.5, 2.0}, e.half_width = 6.0, e.n = 801;
	add(e);
	e = {};
	e.name = "indicator_1d", e.family = "indicator", e.lo = 0.0, e.hi = 2.0;
	add(e);
	e = {};
	e.name = "pl_asym_1d", e.family = "pl_base", e.px = {-1.0, 0.0, 1.5, 3.0}, e.pv = {2.0, 0.3, 0.0, 1.2};
	add(e);
	e = {};
	e.name = "random_1d_a", e.family = "random_convex", e.seed = 11;
	add(e);
	e = {};
	e.name = "random_1d_b", e.family = "random_convex", e.seed = 12;
	add(e);

	e = {};
	e.name = "gauss0", e.family = "gaussian", e.dim = 2;
	add(e);
	e = {};
	e.name = "gauss_shift", e.family = "gaussian", e.dim = 2, e.center = {1.0, 2.0};
	add(e);
	e = {};
	e.name = "gauss_aniso", e.family = "gaussian", e.dim = 2, e.center = {0.5, -0.3}, e.curvature = {1.0, 2.0}, e.box = Box::square(8.0),
	e.n = 81;
	add(e);
	e = {};
	e.name = "square", e.family = "indicator", e.dim = 2, e.polygon = {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, e.box = Box::square(1.5), e.n = 61;
	add(e);
	e = {};
	e.name = "triangle", e.family = "indicator", e.dim = 2, e.polygon = {{0, 0}, {1.2, 0}, {0.3, 1}}, e.box = Box::square(1.5), e.n = 61;
	add(e);
	e = {};
	e.name = "random_pl_2d", e.family = "random_convex", e.dim = 2, e.seed = 21, e.box = Box::square(3.0), e.n = 61;
	add(e);
	return c;
}

const CatalogEntry &catalog_entry(const std::vector<CatalogEntry> &cat, const std::string &name)
{
	for (const auto &e : cat)
		if (e.name == name)
			return e;
	throw std::invalid_argument("catalog: unresolved name '" + name + "'");
}

} // namespace alphasym
