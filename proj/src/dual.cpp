#include "alphasym/dual.hpp"

#include "alphasym/extended.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace alphasym
{

namespace
{

// Bilinear stencil of every node of a square Cartesian grid into a polar mesh.
struct PolarStencil
{
	std::vector<int> a, k; // a < 0 marks nodes beyond the radius
	std::vector<float> fa, fk;
};

std::shared_ptr<const PolarStencil> stencil_for(double R, int nr, int nk, int cart)
{
	using Key = std::tuple<double, int, int, int>;
	static std::mutex mu;
	static std::map<Key, std::shared_ptr<const PolarStencil>> cache;
	std::lock_guard lock(mu);
	Key key{R, nr, nk, cart};
	if (auto it = cache.find(key); it != cache.end())
		return it->second;
	auto st = std::make_shared<PolarStencil>();
	std::size_t total = static_cast<std::size_t>(cart) * cart;
	st->a.resize(total);
	st->k.resize(total);
	st->fa.resize(total);
	st->fk.resize(total);
	const double two_pi = 2.0 * std::numbers::pi;
	for (int j = 0; j < cart; ++j)
		for (int i = 0; i < cart; ++i) {
			std::size_t q = static_cast<std::size_t>(j) * cart + i;
			double sx = -R + 2.0 * R * i / (cart - 1), sy = -R + 2.0 * R * j / (cart - 1);
			double r = std::hypot(sx, sy);
			double u = r / R * (nr - 1);
			if (u > nr - 1 + 1e-9) {
				st->a[q] = -1;
				continue;
			}
			u = std::min(u, double(nr - 1));
			int a = std::min(static_cast<int>(u), nr - 2);
			double t = std::atan2(sy, sx);
			if (t < 0.0)
				t += two_pi;
			double w = t / two_pi * nk;
			int k = static_cast<int>(w);
			st->a[q] = a;
			st->fa[q] = static_cast<float>(u - a);
			st->k[q] = k % nk;
			st->fk[q] = static_cast<float>(w - k);
		}
	cache.emplace(key, st);
	return st;
}

// second differences along one axis at three consecutive nodes are positive and agree
bool smooth_axis(const GridConvex2D &g, int i, int j, int di, int dj)
{
	double d[3];
	for (int t = -1; t <= 1; ++t) {
		int a = i + t * di, b = j + t * dj;
		double m = g.at(a - di, b - dj), c = g.at(a, b), p = g.at(a + di, b + dj);
		d[t + 1] = m - 2.0 * c + p;
		if (!(d[t + 1] > 0.0) || is_inf(d[t + 1]))
			return false;
	}
	double lo = std::min({d[0], d[1], d[2]}), hi = std::max({d[0], d[1], d[2]});
	return hi <= 2.0 * lo;
}

double newton_gain(const GridConvex2D &g, int i, int j, Vec2 s)
{
	if (i < 2 || j < 2 || i > g.n1() - 3 || j > g.n2() - 3)
		return 0.0;
	for (int b = -1; b <= 1; ++b)
		for (int a = -1; a <= 1; ++a)
			if (is_inf(g.at(i + a, j + b)))
				return 0.0;
	if (!smooth_axis(g, i, j, 1, 0) || !smooth_axis(g, i, j, 0, 1))
		return 0.0;
	double h1 = g.h1(), h2 = g.h2(), c = g.at(i, j);
	double g1 = (g.at(i + 1, j) - g.at(i - 1, j)) / (2 * h1);
	double g2 = (g.at(i, j + 1) - g.at(i, j - 1)) / (2 * h2);
	double H11 = (g.at(i + 1, j) - 2 * c + g.at(i - 1, j)) / (h1 * h1);
	double H22 = (g.at(i, j + 1) - 2 * c + g.at(i, j - 1)) / (h2 * h2);
	double H12 = (g.at(i + 1, j + 1) - g.at(i + 1, j - 1) - g.at(i - 1, j + 1) + g.at(i - 1, j - 1)) / (4 * h1 * h2);
	double det = H11 * H22 - H12 * H12;
	if (!(det > 0.0))
		return 0.0;
	double r1 = s.x - g1, r2 = s.y - g2;
	double d1 = (H22 * r1 - H12 * r2) / det, d2 = (H11 * r2 - H12 * r1) / det;
	if (std::abs(d1) > h1 || std::abs(d2) > h2)
		return 0.0;
	return 0.5 * (r1 * d1 + r2 * d2);
}

double default_radius(const GridConvex2D &psi)
{
	double s = std::hypot(psi.max_slope(0), psi.max_slope(1));
	return std::max(20.0, 1.25 * s);
}

} // namespace

GridConvex2D refined_conjugate(const GridConvex2D &psi, const Box &db, int m1, int m2, Exec exec)
{
	if (psi.finite_count() == 0)
		throw std::invalid_argument("conjugate: function is identically +inf");
	const int n1 = psi.n1(), n2 = psi.n2();
	std::vector<double> x = psi.axis1(), y = psi.axis2();
	GridConvex2D shape(db, m1, m2, 0.0);
	std::vector<double> s1 = shape.axis1(), s2 = shape.axis2();
	const bool par = exec == Exec::Parallel;
	std::vector<double> g(static_cast<std::size_t>(n2) * m1);
	std::vector<int> arg1(g.size());
#pragma omp parallel for schedule(static) if (par)
	for (int j = 0; j < n2; ++j) {
		std::size_t off = static_cast<std::size_t>(j) * m1;
		std::span<const double> row(psi.values().data() + static_cast<std::size_t>(j) * n1, n1);
		llt_1d(x, row, s1, std::span<double>(g.data() + off, m1), std::span<int>(arg1.data() + off, m1));
	}
	std::vector<double> out(static_cast<std::size_t>(m2) * m1);
#pragma omp parallel if (par)
	{
		std::vector<double> col(n2), res(m2);
		std::vector<int> arg2(m2);
#pragma omp for schedule(static)
		for (int k = 0; k < m1; ++k) {
			for (int j = 0; j < n2; ++j) {
				double v = g[static_cast<std::size_t>(j) * m1 + k];
				col[j] = v == -kInf ? kInf : -v;
			}
			llt_1d(y, col, s2, res, arg2);
			for (int l = 0; l < m2; ++l) {
				double v = res[l];
				if (v != -kInf) {
					int j = arg2[l], i = arg1[static_cast<std::size_t>(j) * m1 + k];
					v += newton_gain(psi, i, j, {s1[k], s2[l]});
				}
				out[static_cast<std::size_t>(l) * m1 + k] = v;
			}
		}
	}
	return GridConvex2D(db, m1, m2, std::move(out));
}

PolarDual polar_dual_of(const GridConvex2D &psi, const PolarSpec &spec, Exec exec)
{
	if (spec.nk % 64 != 0)
		throw std::invalid_argument("polar dual: angular resolution must be a multiple of 64");
	double R = spec.radius > 0.0 ? spec.radius : default_radius(psi);
	GridConvex2D cart = spec.refine ? refined_conjugate(psi, Box::square(R), spec.cart, spec.cart, exec)
				       : conjugate_grid(psi, Box::square(R), spec.cart, spec.cart, exec);
	std::vector<double> v(static_cast<std::size_t>(spec.nr) * spec.nk);
	PolarField shape(R, spec.nr, spec.nk, v);
	const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (par)
	for (int a = 0; a < spec.nr; ++a)
		for (int k = 0; k < spec.nk; ++k) {
			double r = shape.r(a), t = shape.theta(k);
			double c = std::cos(t), s = std::sin(t);
			// keep the boundary ring on the Cartesian square
			Vec2 p{std::clamp(r * c, -R, R), std::clamp(r * s, -R, R)};
			v[static_cast<std::size_t>(a) * spec.nk + k] = cart(p);
		}
	std::vector<Vec2> nodes = psi.finite_nodes();
	return PolarDual{PolarField(R, spec.nr, spec.nk, std::move(v)), PolarSupport::of_points(nodes, spec.nk)};
}

std::shared_ptr<const PolarDual> polar_dual(const AlphaFunction &f, const PolarSpec &spec, Exec exec)
{
	if (f.dual())
		return f.dual_ptr();
	return std::make_shared<const PolarDual>(polar_dual_of(f.base2(), spec, exec));
}

GridConvex2D primal_from_polar(const PolarDual &d, const Box &box, int n1, int n2, const PolarSpec &spec, Exec exec)
{
	const int cart = spec.cart;
	const PolarField &F = d.field;
	double R = F.radius();
	auto st = stencil_for(R, F.nr(), F.nk(), cart);
	std::vector<double> v(static_cast<std::size_t>(cart) * cart);
	const int nk = F.nk();
	const bool par = exec == Exec::Parallel;
	const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for schedule(static) if (par)
	for (std::ptrdiff_t q = 0; q < total; ++q) {
		int a = st->a[q];
		if (a < 0) {
			v[q] = kInf;
			continue;
		}
		int k = st->k[q], k1 = (k + 1) % nk;
		double fa = st->fa[q], fk = st->fk[q];
		double lo = (1 - fk) * F.at(a, k) + fk * F.at(a, k1);
		double hi = (1 - fk) * F.at(a + 1, k) + fk * F.at(a + 1, k1);
		v[q] = (1 - fa) * lo + fa * hi;
	}
	GridConvex2D dual(Box::square(R), cart, cart, std::move(v));
	GridConvex2D out = spec.refine ? refined_conjugate(dual, box, n1, n2, exec) : conjugate_grid(dual, box, n1, n2, exec);
	double tol = 1e-7 * (1.0 + std::max({std::abs(box.a1), std::abs(box.b1), std::abs(box.a2), std::abs(box.b2)}));
#pragma omp parallel for schedule(static) if (par)
	for (int j = 0; j < n2; ++j)
		for (int i = 0; i < n1; ++i)
			if (!d.domain.contains(out.node(i, j), tol))
				out.at(i, j) = kInf;
	return out;
}

} // namespace alphasym
