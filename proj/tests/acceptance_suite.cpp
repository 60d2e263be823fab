#include "acceptance_suite.hpp"
#include "oracles.hpp"

#include "alphasym/catalog.hpp"
#include "alphasym/dual.hpp"
#include "alphasym/extended.hpp"
#include "alphasym/extremal.hpp"
#include "alphasym/io.hpp"
#include "alphasym/linearize.hpp"
#include "alphasym/parallel.hpp"
#include "alphasym/symmetrize.hpp"
#include "alphasym/widths.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace alphasym;

namespace acceptance
{

namespace
{

constexpr double kPi = std::numbers::pi;

std::string sci(double v)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.2e", v);
	return buf;
}

/// Worst-case tracker for one named property.
struct Gauge
{
	std::string name;
	double tol = 0.0;
	double worst = 0.0;
	long cases = 0;
	long failures = 0;
	std::string where;

	Gauge(std::string n, double t)
		: name(std::move(n))
		, tol(t)
	{
	}

	void add(double err, const std::string &at = "")
	{
		++cases;
		if (!(err <= tol))
			++failures;
		if (std::isnan(err) || err > worst) {
			worst = std::isnan(err) ? kInf : err;
			where = at;
		}
	}
	/// Requires value >= -tol (signed gaps).
	void add_signed(double gap, const std::string &at = "")
	{
		add(std::max(0.0, -gap), at);
	}
	bool ok() const { return failures == 0; }
	std::string str() const
	{
		std::string s = name + " " + sci(worst) + (ok() ? " <= " : " > ") + sci(tol) + " (" + std::to_string(cases) + ")";
		if (!ok() && !where.empty())
			s += " worst at " + where;
		return s;
	}
};

CriterionResult finish(int id, std::string name, const std::vector<Gauge> &gauges)
{
	CriterionResult r{id, std::move(name), true, "", 0.0};
	for (const auto &g : gauges) {
		r.pass = r.pass && g.ok();
		r.detail += (r.detail.empty() ? "" : "; ") + g.str();
	}
	return r;
}

GridConvex2D random_convex_grid(std::mt19937_64 &rng, int n)
{
	std::uniform_real_distribution<double> U(-1, 1);
	std::vector<std::array<double, 3>> planes;
	for (int k = 0; k < 12; ++k)
		planes.push_back({3 * U(rng), 3 * U(rng), U(rng)});
	double a = 0.2 + 0.5 * (U(rng) + 1);
	return GridConvex2D::sample(
		[&](Vec2 x) {
			double m = a * dot(x, x);
			for (auto &p : planes)
				m = std::max(m, p[0] * x.x + p[1] * x.y + p[2]);
			return m;
		},
		{-2 + 0.3 * U(rng), 2, -1.5, 2 + 0.3 * U(rng)}, n, n);
}

/// Direct max over the break points of the argument, independent of the hull code.
double chord_envelope(const std::vector<double> &xs, const std::vector<double> &ys, double x)
{
	double best = kInf;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		if (xs[i] == x)
			best = std::min(best, ys[i]);
		for (std::size_t j = 0; j < xs.size(); ++j) {
			if (xs[i] < x && x < xs[j]) {
				double t = (x - xs[i]) / (xs[j] - xs[i]);
				best = std::min(best, (1 - t) * ys[i] + t * ys[j]);
			}
		}
	}
	return best;
}

double support(const LevelSet &s, Vec2 v)
{
	double m = -kInf;
	for (Vec2 p : s.points)
		m = std::max(m, dot(p, v));
	return m;
}

LevelSet reflected(const LevelSet &s, const Direction &u)
{
	LevelSet r;
	r.kind = LevelSet::Kind::Degenerate;
	for (Vec2 p : s.points)
		r.points.push_back(u.reflect(p));
	r.points = hull_points(r.points);
	return r;
}

double lattice_h(const AlphaFunction &f)
{
	if (f.dim() == 1)
		return f.layered() ? (f.q1().x().back() - f.q1().x().front()) / (f.q1().x().size() - 1) : 0.0;
	return f.layered() ? f.q2().grid().h() : f.base2().h();
}

/// t_l = l top / 16, l = 1..16, nudged below each value so the carried ladder
/// levels are selected. top is the smallest sup among the compared functions.
std::vector<double> ladder16(std::initializer_list<const AlphaFunction *> fs)
{
	double top = kInf;
	for (const AlphaFunction *f : fs)
		top = std::min(top, f->sup());
	std::vector<double> t;
	for (int l = 1; l <= 16; ++l)
		t.push_back(top * l / 16.0 * (1.0 - 1e-12));
	return t;
}

/// Catalog member with its base lowered by `lift` (a pointwise larger function).
AlphaFunction lifted(const CatalogEntry &e, double alpha, double lift)
{
	if (e.dim == 1) {
		ConvexPL1D b = shift_value_pl(e.base1(), -lift);
		if (alpha == kLayerAlpha)
			return to_quasi(AlphaFunction::with_base(0.0, b));
		return AlphaFunction::with_base(alpha, b);
	}
	GridConvex2D b = e.base2();
	for (double &v : b.values())
		v = ext_add(v, -lift);
	if (alpha == kLayerAlpha) {
		for (double &v : b.values())
			v = std::exp(-v);
		return AlphaFunction::quasi(QuasiGrid2D(std::move(b)));
	}
	return AlphaFunction::with_base(alpha, std::move(b));
}

/// A larger member of the same family: wider support or flatter profile, lifted.
AlphaFunction enlarged(CatalogEntry e, double alpha)
{
	if (e.family == "gaussian" || e.family == "alpha_gaussian")
		e.curvature = {0.8 * e.curvature.x, 0.8 * e.curvature.y};
	if (e.family == "indicator") {
		if (e.dim == 1) {
			e.lo -= 0.1, e.hi += 0.1;
		} else {
			Vec2 c{0.0, 0.0};
			for (Vec2 p : e.polygon)
				c = c + (1.0 / e.polygon.size()) * p;
			for (Vec2 &p : e.polygon)
				p = c + 1.15 * (p - c);
		}
	}
	return lifted(e, alpha, 0.1);
}

std::vector<double> sample_points_1d(const AlphaFunction &a, const AlphaFunction &b, int n = 401)
{
	auto span = [](const AlphaFunction &f) {
		if (f.layered())
			return std::pair{f.q1().x().front(), f.q1().x().back()};
		return std::pair{f.base1().lo(), f.base1().hi()};
	};
	auto [a0, a1] = span(a);
	auto [b0, b1] = span(b);
	double r = std::max({std::abs(a0), std::abs(a1), std::abs(b0), std::abs(b1)}) + 0.5;
	std::vector<double> xs;
	for (int k = 0; k < n; ++k)
		xs.push_back(-r + 2 * r * k / (n - 1));
	return xs;
}

double mass(const AlphaFunction &f, bool input)
{
	// the 2D quasiconcave input is compared through the lower sum on the ladder
	// that the layer-cake symmetral uses
	if (f.layered() && f.dim() == 2 && input)
		return ladder_mass(f);
	return total_mass(f);
}

bool same_point_set(const std::vector<Vec2> &a, const std::vector<Vec2> &b)
{
	if (a.size() != b.size())
		return false;
	for (Vec2 p : a) {
		bool found = false;
		for (Vec2 q : b)
			found = found || std::hypot(p.x - q.x, p.y - q.y) < 1e-9;
		if (!found)
			return false;
	}
	return true;
}

std::vector<Vec2> centered(std::vector<Vec2> pts)
{
	Vec2 c{0.0, 0.0};
	for (Vec2 p : pts)
		c = c + (1.0 / pts.size()) * p;
	for (Vec2 &p : pts)
		p = p - c;
	return pts;
}

/// R_u f is a translate of f (`exact`: R_u f = f).
bool mirror_translate(const CatalogEntry &e, const Direction &u, bool exact)
{
	bool gaussian = e.family == "gaussian" || e.family == "alpha_gaussian";
	if (e.dim == 1) {
		if (gaussian)
			return e.curvature.x == e.curvature.y && (!exact || e.center.x == 0.0);
		if (e.family == "indicator")
			return !exact || e.lo == -e.hi;
		return false;
	}
	if (gaussian) {
		bool form = e.curvature.x == e.curvature.y || std::abs(std::sin(2 * u.theta())) < 1e-12;
		Vec2 c = u.reflect(e.center);
		return form && (!exact || std::hypot(c.x - e.center.x, c.y - e.center.y) < 1e-12);
	}
	if (e.family == "indicator") {
		std::vector<Vec2> r;
		for (Vec2 p : e.polygon)
			r.push_back(u.reflect(p));
		return exact ? same_point_set(r, e.polygon) : same_point_set(centered(r), centered(e.polygon));
	}
	return false;
}

// ---------------------------------------------------------------------------

CriterionResult exact_calculus()
{
	std::mt19937_64 rng(2024);
	std::uniform_real_distribution<double> U(0.0, 1.0);
	Gauge inv{"LL=id", 1e-10}, conv{"L(box)=sum L", 1e-10}, epi{"epi-additivity", 1e-10}, ind{"indicators", 1e-10};
	for (int c = 0; c < 200; ++c) {
		ConvexPL1D psi = oracle::random_pl(rng), phi = oracle::random_pl(rng);
		ConvexPL1D ll = conjugate_pl(conjugate_pl(psi));
		double e = std::max(std::abs(ll.lo() - psi.lo()), std::abs(ll.hi() - psi.hi()));
		for (int k = 0; k <= 64; ++k) {
			double x = psi.lo() + (psi.hi() - psi.lo()) * k / 64;
			e = std::max(e, std::abs(ll(x) - psi(x)));
		}
		inv.add(e);

		ConvexPL1D lc = conjugate_pl(inf_conv_pl(phi, psi), 20.0);
		e = 0.0;
		for (int k = 0; k <= 80; ++k) {
			double s = -10.0 + 0.25 * k;
			double ref = oracle::conjugate_at(phi, s) + oracle::conjugate_at(psi, s);
			e = std::max(e, std::abs(lc(s) - ref) / (1.0 + std::abs(ref)));
		}
		conv.add(e);

		double l = 0.2 + 2.0 * U(rng), m = 0.2 + 2.0 * U(rng);
		ConvexPL1D lhs = inf_conv_pl(epi_mult_pl(l, psi), epi_mult_pl(m, psi));
		ConvexPL1D rhs = epi_mult_pl(l + m, psi);
		e = std::max(std::abs(lhs.lo() - rhs.lo()), std::abs(lhs.hi() - rhs.hi()));
		for (int k = 0; k <= 64; ++k) {
			double x = rhs.lo() + (rhs.hi() - rhs.lo()) * k / 64;
			e = std::max(e, std::abs(lhs(x) - rhs(x)) / (1.0 + std::abs(rhs(x))));
		}
		epi.add(e);

		double a = -2 + 2 * U(rng), b = a + 0.1 + U(rng), cc = -1 + U(rng), d = cc + 0.1 + 2 * U(rng);
		ConvexPL1D kk = inf_conv_pl(ConvexPL1D::indicator(a, b), ConvexPL1D::indicator(cc, d));
		e = std::max({std::abs(kk.lo() - (a + cc)), std::abs(kk.hi() - (b + d)), std::abs(kk((kk.lo() + kk.hi()) / 2))});
		ind.add(e);
	}
	return finish(1, "exact PL calculus", {inv, conv, epi, ind});
}

CriterionResult transform_equivalence()
{
	std::mt19937_64 rng(77);
	Gauge conj{"factored vs brute conjugate", 1e-12}, ic{"conjugate-route vs direct convolution / (4h Lip)", 1.0};
	for (int c = 0; c < 50; ++c) {
		GridConvex2D g = random_convex_grid(rng, 33);
		Box db = default_dual_box(g);
		GridConvex2D a = conjugate_grid(g, db, 33, 33);
		GridConvex2D b = conjugate_grid_brute(g, db, 33, 33);
		double e = 0.0;
		for (std::size_t q = 0; q < a.values().size(); ++q)
			e = std::max(e, std::abs(a.values()[q] - b.values()[q]));
		conj.add(e);
	}
	for (int c = 0; c < 20; ++c) {
		GridConvex2D a = random_convex_grid(rng, 33), b0 = random_convex_grid(rng, 33);
		GridConvex2D b(a.box(), 33, 33, b0.values());
		GridConvex2D r = inf_conv_grid(a, b), d = inf_conv_grid_brute(a, b);
		double lip = std::max(a.max_slope(0), a.max_slope(1)) + std::max(b.max_slope(0), b.max_slope(1));
		double bound = 4 * a.h() * lip, e = 0.0;
		for (std::size_t q = 0; q < r.values().size(); ++q) {
			if (is_inf(r.values()[q]) != is_inf(d.values()[q]))
				e = kInf;
			else if (is_finite(r.values()[q]))
				e = std::max(e, std::abs(r.values()[q] - d.values()[q]) / bound);
		}
		ic.add(e);
	}
	return finish(2, "transform equivalence on 33x33 grids", {conj, ic});
}

CriterionResult symmetral_properties()
{
	auto cat = default_catalog();
	// symmetric members so that invariance is exercised in both dimensions
	CatalogEntry g1;
	g1.name = "gauss0_1d", g1.family = "gaussian", g1.n = 801;
	CatalogEntry i1;
	i1.name = "interval_sym", i1.family = "indicator", i1.lo = -1.0, i1.hi = 1.0;
	CatalogEntry sq;
	sq.name = "square_sym", sq.family = "indicator", sq.dim = 2, sq.polygon = {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
	sq.box = Box::square(1.5), sq.n = 61;
	cat.insert(cat.end(), {g1, i1, sq});

	Gauge width{"(i) width", 0.0}, mono{"(ii) monotone", 0.0}, sym{"(iii) symmetric / 2h", 1.0},
		idem{"(iv) idempotent / 2h", 1.0}, inv{"(v) invariant / 2h", 1.0}, proj{"(vi) projection / 2h", 1.0},
		mass_up{"(vii) J gain", 1e-3}, mass_eq{"(vii) translate equality", 1e-3}, levels{"(viii) levels / 2h", 1.0};
	width.tol = 1.0, mono.tol = 1.0; // errors below are already divided by their tolerance

	auto run = [&](const CatalogEntry &e) {
		for (double alpha : {0.0, -0.25, kLayerAlpha}) {
			AlphaFunction f = e.make(alpha);
			AlphaFunction big = enlarged(e, alpha);
			double h = lattice_h(f);
			std::vector<Direction> dirs;
			if (e.dim == 1)
				dirs = {Direction::line(1.0), Direction::line(-1.0)};
			else
				dirs = {Direction::angle(0.0), Direction::angle(kPi / 4), Direction::angle(kPi * kGoldenGamma),
					Direction::angle(kPi / 2)};
			double w = mean_width(f, alpha).value;
			double J = mass(f, true);
			for (const Direction &u : dirs) try {
				const std::string at = e.name + " alpha=" + format_double(alpha) + " theta=" + sci(u.theta());
				AlphaFunction s = alpha_minkowski_symmetral(f, u);
				if (mirror_translate(e, u, true)) {
					double err = 0.0;
					if (e.dim == 1) {
						for (double x : sample_points_1d(f, s))
							err = std::max(err, std::abs(s(x) - f(x)) / 1e-9);
					} else {
						for (double t : ladder16({&f, &s}))
							err = std::max(err, level_hausdorff(superlevel_set(s, t), superlevel_set(f, t)) / (2 * h));
					}
					inv.add(err, at);
				}
				AlphaFunction ss = alpha_minkowski_symmetral(s, u);
				AlphaFunction sb = alpha_minkowski_symmetral(big, u);
				double ws = mean_width(s, alpha).value;
				double wtol = e.dim == 1 ? 1e-9 * std::max(1.0, std::abs(w)) : 1e-2;
				width.add(std::abs(ws - w) / wtol, at);
				if (e.dim == 1) {
					double em = 0.0, es = 0.0, ei = 0.0;
					for (double x : sample_points_1d(s, sb)) {
						double v = s(x);
						em = std::max(em, (v - sb(x)) / (1e-9 * (1 + std::abs(v))));
						es = std::max(es, std::abs(v - s(-x)) / 1e-9);
						ei = std::max(ei, std::abs(v - ss(x)) / 1e-9);
					}
					mono.add(em, at);
					sym.add(es, at);
					idem.add(ei, at);
					proj.add(std::abs(s.sup() - f.sup()) / 1e-9, at);
				} else {
					GridConvex2D sv = s.values2();
					double em = 0.0;
					for (int j = 0; j < sv.n2(); ++j)
						for (int i = 0; i < sv.n1(); ++i)
							em = std::max(em, (sv.at(i, j) - sb(sv.node(i, j))) / (1e-6 * (1 + sv.at(i, j))));
					mono.add(em, at);
					Vec2 v = hyperplane_axis(u);
					double es = 0.0, ei = 0.0, ep = 0.0;
					for (double t : ladder16({&f, &s, &ss})) {
						LevelSet a = superlevel_set(s, t), b = superlevel_set(ss, t), c = superlevel_set(f, t);
						es = std::max(es, level_hausdorff(a, reflected(a, u)));
						ei = std::max(ei, level_hausdorff(a, b));
						ep = std::max({ep, std::abs(support(a, v) - support(c, v)),
							       std::abs(support(a, -1.0 * v) - support(c, -1.0 * v))});
					}
					sym.add(es / (2 * h), at);
					idem.add(ei / (2 * h), at);
					proj.add(ep / (2 * h), at);
				}
				double Js = mass(s, false);
				mass_up.add_signed(Js - J, at);
				if (alpha == 0.0 && mirror_translate(e, u, false))
					mass_eq.add(std::abs(Js - J), at);
				if (alpha == kLayerAlpha) {
					double el = 0.0;
					double hl = e.dim == 1 ? std::max(h, 1e-9) : h;
					for (double t : ladder16({&f, &s}))
						el = std::max(el, level_hausdorff(superlevel_set(s, t), symmetral_level(superlevel_set(f, t), u)));
					levels.add(el / (2 * hl), at);
				}
			} catch (const std::exception &x) {
				throw std::runtime_error(e.name + " alpha " + format_double(alpha) + " theta " + format_double(u.theta()) +
							 ": " + x.what());
			}
		}
	};
	for (const auto &e : cat)
		run(e);
	return finish(3, "symmetral properties on the catalog", {width, mono, sym, idem, inv, proj, mass_up, mass_eq, levels});
}

CriterionResult layer_cake_consistency()
{
	Gauge cell{"interval / cell", 1.0}, steiner{"Steiner <= layer cake", 1e-6};
	{
		CatalogEntry e;
		e.name = "indicator_1d", e.family = "indicator", e.lo = 0.0, e.hi = 2.0;
		AlphaFunction f = e.make(kLayerAlpha);
		double h = lattice_h(f);
		AlphaFunction s = layer_cake_symmetral(f, Direction::line(1.0));
		LevelSet lev = superlevel_set(s, 0.5);
		double err = std::max(std::abs(lev.body->lo() + 1.0), std::abs(lev.body->hi() - 1.0));
		for (double x : {-0.9, -0.5, 0.0, 0.5, 0.9})
			err = std::max(err, std::abs(s(x) - 1.0));
		for (double x : {-1.0 - 1.5 * h, 1.0 + 1.5 * h, -2.0, 2.0})
			err = std::max(err, s(x));
		cell.add(err / h);
	}
	std::mt19937_64 rng(404);
	std::uniform_real_distribution<double> U(0.0, 1.0);
	for (int c = 0; c < 10; ++c) {
		// unimodal piecewise-linear profile (quasiconcave, not log-concave in general)
		int up = 2 + static_cast<int>(3 * U(rng)), down = 2 + static_cast<int>(3 * U(rng));
		std::vector<double> x{-2.0 - U(rng)}, v{0.0};
		for (int k = 0; k < up; ++k) {
			x.push_back(x.back() + 0.1 + U(rng));
			v.push_back(k + 1 == up ? 1.0 : v.back() + (1.0 - v.back()) * U(rng));
		}
		for (int k = 0; k < down; ++k) {
			x.push_back(x.back() + 0.1 + U(rng));
			v.push_back(k + 1 == down ? 0.0 : v.back() * U(rng));
		}
		AlphaFunction f = AlphaFunction::quasi(QuasiPL1D::make(x, v));
		AlphaFunction s = layer_cake_symmetral(f, Direction::line(1.0));
		double gap = 0.0;
		for (int k = 0; k <= 600; ++k) {
			double t = -6.0 + 0.02 * k;
			gap = std::max(gap, steiner_value_1d(f, t) - s(t));
		}
		steiner.add(gap);
	}
	return finish(4, "layer-cake consistency", {cell, steiner});
}

CriterionResult convergence()
{
	Gauge dist{"64-step distance", 1e-2}, drift{"w0 drift", 1e-3}, oracle2{"oracle check", 5e-3}, one{"1D one step", 1e-9},
		oracle1{"1D oracle check", 1e-9};
	std::vector<AlphaFunction> fs;
	std::vector<std::string> names{"gauss_shift"};
	fs.push_back(catalog_entry(default_catalog(), "gauss_shift").make(0.0));
	for (std::uint64_t seed : {31u, 32u, 33u}) {
		fs.push_back(AlphaFunction::with_base(0.0, random_pl_base(seed, 6, Box::square(12.8), 129)));
		names.push_back("random PL seed " + std::to_string(seed));
	}
	for (std::size_t i = 0; i < fs.size(); ++i) {
		const AlphaFunction &f = fs[i];
		IterateOptions opt;
		opt.track_mass = false;
		auto [g, rep] = iterate_symmetrizations(f, Schedule::golden(), 64, opt);
		double best = kInf, dw = 0.0;
		for (const auto &r : rep.records) {
			best = std::min(best, r.distance);
			dw = std::max(dw, std::abs(r.width - rep.records[0].width));
		}
		dist.add(best, names[i]);
		drift.add(dw, names[i]);
		AlphaFunction o = hypo_symmetrization_oracle(f);
		if (i == 0) {
			double e = 0.0;
			GridConvex2D ov = o.values2();
			for (int j = 0; j < ov.n2(); ++j)
				for (int k = 0; k < ov.n1(); ++k) {
					Vec2 x = ov.node(k, j);
					e = std::max(e, std::abs(ov.at(k, j) - std::exp(-0.5 * dot(x, x))));
				}
			oracle2.add(e);
		} else {
			// ring means of the brute-force support function
			const GridConvex2D &b = f.base2();
			double e = 0.0;
			for (double r : {0.5, 1.0, 2.0}) {
				double mean = 0.0;
				for (int k = 0; k < 256; ++k) {
					Vec2 y{r * std::cos(2 * kPi * k / 256), r * std::sin(2 * kPi * k / 256)};
					double m = -kInf;
					for (int jj = 0; jj < b.n2(); ++jj)
						for (int ii = 0; ii < b.n1(); ++ii)
							if (is_finite(b.at(ii, jj)))
								m = std::max(m, dot(b.node(ii, jj), y) - b.at(ii, jj));
					mean += m / 256;
				}
				e = std::max(e, std::abs(o.dual()->field(Vec2{r, 0.0}) - mean) / (1.0 + std::abs(mean)));
			}
			oracle2.add(e);
		}
	}
	for (const auto &e : default_catalog()) {
		if (e.dim != 1)
			continue;
		AlphaFunction f = e.make(0.0);
		auto [g, rep] = iterate_symmetrizations(f, Schedule::golden(), 3);
		one.add(rep.records[1].distance);
		// even part of the conjugate, conjugated back by a direct max over slopes
		const ConvexPL1D &b = f.base1();
		std::vector<double> slopes = b.slopes();
		std::vector<double> cand;
		for (double s : slopes)
			cand.push_back(s), cand.push_back(-s);
		auto avg = [&](double s) { return 0.5 * (oracle::conjugate_at(b, s) + oracle::conjugate_at(b, -s)); };
		const ConvexPL1D &sb = g.base1();
		double err = 0.0;
		for (int k = 0; k <= 100; ++k) {
			double x = sb.lo() + (sb.hi() - sb.lo()) * k / 100;
			double ref = -kInf;
			for (double s : cand)
				ref = std::max(ref, s * x - avg(s));
			err = std::max(err, std::abs(sb(x) - ref) / (1 + std::abs(ref)));
		}
		oracle1.add(err);
	}
	return finish(5, "convergence to the spherical average", {dist, drift, oracle2, one, oracle1});
}

CriterionResult unconditional()
{
	Gauge g0{"shifted Gaussian -> G0", 5e-3}, even{"f(x) = f(|x1|,|x2|)", 5e-3};
	AlphaFunction f = catalog_entry(default_catalog(), "gauss_shift").make(0.0);
	GridConvex2D gv = unconditionalize(f).values2();
	double e = 0.0;
	for (int j = 0; j < gv.n2(); ++j)
		for (int i = 0; i < gv.n1(); ++i) {
			Vec2 x = gv.node(i, j);
			e = std::max(e, std::abs(gv.at(i, j) - std::exp(-0.5 * dot(x, x))));
		}
	g0.add(e);
	for (const auto &c : default_catalog()) {
		if (c.dim != 2)
			continue;
		for (double alpha : {0.0, -0.25, kLayerAlpha}) {
			GridConvex2D v = unconditionalize(c.make(alpha)).values2();
			double err = 0.0;
			int n1 = v.n1(), n2 = v.n2();
			for (int j = 0; j < n2; ++j)
				for (int i = 0; i < n1; ++i)
					err = std::max({err, std::abs(v.at(i, j) - v.at(n1 - 1 - i, j)), std::abs(v.at(i, j) - v.at(i, n2 - 1 - j))});
			even.add(err);
		}
	}
	return finish(6, "unconditionalization", {g0, even});
}

CriterionResult width_values()
{
	Gauge g{"w0(G0)", 2e-3}, iv{"w0(interval)", 2e-3}, sq{"w_-inf(square)", 1e-2};
	CatalogEntry e1;
	e1.name = "g", e1.family = "gaussian", e1.n = 801;
	g.add(std::abs(mean_width(e1.make(0.0), 0.0).value - 1.0));
	g.add(std::abs(mean_width(catalog_entry(default_catalog(), "gauss0").make(0.0), 0.0).value - 1.0));
	for (double r : {0.5, 1.0, 2.0}) {
		AlphaFunction f = AlphaFunction::with_base(0.0, ConvexPL1D::indicator(-r, r));
		iv.add(std::abs(mean_width(f, 0.0).value - 2 * r * std::sqrt(2 / kPi)));
	}
	CatalogEntry s;
	s.name = "unit_square", s.family = "indicator", s.dim = 2, s.polygon = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
	s.box = Box::square(1.5), s.n = 61;
	sq.add(std::abs(mean_width(s.make(kLayerAlpha), kLayerAlpha).value - 4 / kPi));
	return finish(7, "mean-width values", {g, iv, sq});
}

CriterionResult linearizations()
{
	Gauge split{"split p <= pf * pg", 1e-9}, step{"G_N(tau f) <= G_N(f)", 1e-6}, sym{"G_N(f) >= G_N(f_sym)", 1e-6};
	std::mt19937_64 rng(808);
	std::uniform_real_distribution<double> U(0.0, 1.0);
	for (int c = 0; c < 20; ++c) {
		AlphaFunction f = AlphaFunction::with_base(0.0, oracle::random_pl(rng));
		AlphaFunction g = AlphaFunction::with_base(0.0, oracle::random_pl(rng));
		ConvexPL1D ic = inf_conv_pl(f.base1(), g.base1());
		std::vector<double> xs, ys;
		for (int k = 0; k < 5; ++k) {
			double v = ic.lo() + (ic.hi() - ic.lo()) * U(rng);
			xs.push_back(v);
			ys.push_back(ic(v) + 0.2 * U(rng));
		}
		SplitResult r = split_linearization(BreakPointSet::line(xs, ys), f, g, 257);
		// the same inequality on 257 points with independent evaluators
		double lo = *std::min_element(xs.begin(), xs.end()), hi = *std::max_element(xs.begin(), xs.end());
		double gap = r.worst_gap;
		for (int k = 0; k < 257; ++k) {
			double x = lo + (hi - lo) * k / 256;
			gap = std::max(gap, oracle::inf_conv_at(r.pf, r.pg, x) - chord_envelope(xs, ys, x));
		}
		split.add(gap);
	}
	for (const auto &e : default_catalog()) {
		if (e.dim != 1)
			continue;
		AlphaFunction f = e.make(0.0);
		AlphaFunction t = alpha_minkowski_symmetral(f, Direction::line(1.0));
		AlphaFunction o = hypo_symmetrization_oracle(f);
		for (int N : {3, 4}) {
			double a = best_G_N(f, N, GNMode::Exhaustive, 33).value;
			step.add_signed(a - best_G_N(t, N, GNMode::Exhaustive, 33).value);
			sym.add_signed(a - best_G_N(o, N, GNMode::Exhaustive, 33).value);
		}
	}
	return finish(8, "inner linearizations and G_N", {split, step, sym});
}

CriterionResult extremal_inequalities()
{
	Gauge pl{"Prekopa-Leindler", 1e-3}, tr{"translate equality", 1e-3}, ury{"J(f) <= J(f_sym)", 1e-3},
		classic{"classical Urysohn", 1e-2};
	std::mt19937_64 rng(909);
	std::uniform_real_distribution<double> U(0.0, 1.0);
	for (int c = 0; c < 50; ++c) {
		double l = 0.1 + 0.8 * U(rng);
		AlphaFunction f = c < 40 ? AlphaFunction::with_base(0.0, oracle::random_pl(rng))
					 : AlphaFunction::with_base(0.0, random_pl_base(500 + c, 5, Box::square(3.0), 61));
		AlphaFunction g = c < 40 ? AlphaFunction::with_base(0.0, oracle::random_pl(rng))
					 : AlphaFunction::with_base(0.0, random_pl_base(600 + c, 5, Box::square(3.0), 61));
		PrekopaLeindler r = prekopa_leindler_check(f, g, l);
		pl.add_signed((r.lhs - r.rhs) / std::max(1.0, r.rhs));
		if (c < 10) {
			AlphaFunction ft = AlphaFunction::with_base(0.0, translate_pl(f.base1(), -1.0 + 2.0 * U(rng)));
			PrekopaLeindler q = prekopa_leindler_check(f, ft, l);
			tr.add(std::abs(q.lhs - q.rhs));
		}
	}
	for (const auto &e : default_catalog()) {
		ConclusionRecord r = check_conclusion(total_mass_functional(e.dim), e.make(0.0));
		ury.add_signed(r.value_sym - r.value);
	}
	for (const ConvexBody &K : {ConvexBody::box(0, 1, 0, 1), ConvexBody::polygon({{0, 0}, {1.2, 0}, {0.3, 1}}),
				    ConvexBody::regular_polygon(5, 0.8, 0.2)}) {
		UrysohnRecord u = classical_urysohn(K, Box::square(1.5), 61);
		classic.add_signed(u.bound - u.volume);
	}
	return finish(9, "extremal inequalities", {pl, tr, ury, classic});
}

std::string capture(const std::string &cmd)
{
	std::string out;
	FILE *p = popen(cmd.c_str(), "r");
	if (!p)
		return "<popen failed>";
	char buf[4096];
	std::size_t n;
	while ((n = fread(buf, 1, sizeof buf, p)) > 0)
		out.append(buf, n);
	int status = pclose(p);
	if (status != 0)
		out += "<exit " + std::to_string(status) + ">";
	return out;
}

CriterionResult performance(const std::string &cli)
{
	Gauge slope{"conjugate_grid scaling exponent", 1.15}, same{"thread-count reruns differing", 0.0};
	std::vector<double> lx, ly;
	for (int n : {64, 128, 256}) {
		GridConvex2D g = GridConvex2D::sample([](Vec2 x) { return 0.5 * dot(x, x) + std::abs(x.x); }, Box::square(4.0), n, n);
		double best = kInf;
		for (int rep = 0; rep < 5; ++rep) {
			auto t0 = std::chrono::steady_clock::now();
			GridConvex2D c = conjugate_grid(g);
			best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
			if (c.values().empty())
				best = kInf;
		}
		lx.push_back(std::log(double(n) * n));
		ly.push_back(std::log(best));
	}
	double mx = (lx[0] + lx[1] + lx[2]) / 3, my = (ly[0] + ly[1] + ly[2]) / 3, sxy = 0, sxx = 0;
	for (int i = 0; i < 3; ++i)
		sxy += (lx[i] - mx) * (ly[i] - my), sxx += (lx[i] - mx) * (lx[i] - mx);
	slope.add(sxy / sxx);

	auto fingerprint = [] {
		auto cat = default_catalog();
		std::mt19937_64 rng(5);
		Json j;
		j["conjugate"] = to_json(conjugate_grid(random_convex_grid(rng, 96)));
		AlphaFunction s = alpha_minkowski_symmetral(catalog_entry(cat, "gauss_shift").make(0.0), Direction::angle(1.0));
		j["symmetral"] = to_json(s);
		j["w0"] = mean_width(s, 0.0).value;
		j["G3"] = best_G_N(catalog_entry(cat, "pl_asym_1d").make(0.0), 3).value;
		return dump_json(j);
	};
	int saved = get_threads();
	std::vector<std::string> prints;
	for (int t : {1, 2, 4, 1}) {
		set_threads(t);
		prints.push_back(fingerprint());
	}
	set_threads(saved);
	for (const auto &p : prints)
		same.add(p == prints[0] ? 0.0 : 1.0);
	if (!cli.empty()) {
		for (const std::string args : {"width --fn gauss_shift", "hyposym --fn gauss_shift --steps 4", "gn --fn pl_asym_1d --n [3]",
					       "conjugate --fn random_pl_2d"}) {
			std::vector<std::string> outs;
			for (int t : {1, 3, 1})
				outs.push_back(capture("\"" + cli + "\" " + args + " --threads " + std::to_string(t)));
			for (const auto &o : outs)
				same.add(o == outs[0] && o.find("<exit") == std::string::npos ? 0.0 : 1.0);
		}
	}
	return finish(10, "performance and determinism", {slope, same});
}

} // namespace

std::vector<CriterionResult> run_core(const SuiteOptions &opt)
{
	std::vector<std::pair<int, std::function<CriterionResult()>>> all{
		{1, exact_calculus},
		{2, transform_equivalence},
		{3, symmetral_properties},
		{4, layer_cake_consistency},
		{5, convergence},
		{6, unconditional},
		{7, width_values},
		{8, linearizations},
		{9, extremal_inequalities},
		{10, [&] { return performance(opt.cli_path); }},
	};
	std::vector<CriterionResult> out;
	for (auto &[id, fn] : all) {
		if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end())
			continue;
		auto t0 = std::chrono::steady_clock::now();
		CriterionResult r;
		try {
			r = fn();
		} catch (const std::exception &e) {
			r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0.0};
		}
		r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		if (opt.progress)
			*opt.progress << format_line(r) << std::flush;
		out.push_back(std::move(r));
	}
	return out;
}

std::string format_line(const CriterionResult &r)
{
	char t[32];
	std::snprintf(t, sizeof t, "%.1f s", r.seconds);
	return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail + " (" + t +
	       ")\n";
}

} // namespace acceptance
