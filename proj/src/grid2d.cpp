#include "alphasym/grid2d.hpp"

#include "alphasym/extended.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alphasym
{

namespace
{

std::vector<double> linspace(double a, double b, int n)
{
	std::vector<double> t(n);
	for (int i = 0; i < n; ++i)
		t[i] = i == n - 1 ? b : a + (b - a) * i / (n - 1);
	return t;
}

} // namespace

GridConvex2D::GridConvex2D(Box box, int n1, int n2, std::vector<double> values)
	: box_(box)
	, n1_(n1)
	, n2_(n2)
	, v_(std::move(values))
{
	if (n1 < 2 || n2 < 2)
		throw std::invalid_argument("grid: need at least two points per axis");
	if (!(box.a1 < box.b1) || !(box.a2 < box.b2))
		throw std::invalid_argument("grid: box must have positive extent");
	if (v_.size() != static_cast<std::size_t>(n1) * n2)
		throw std::invalid_argument("grid: value count does not match resolution");
	for (double v : v_)
		if (std::isnan(v) || v == -kInf)
			throw std::invalid_argument("grid: values must be finite or +inf");
}

GridConvex2D::GridConvex2D(Box box, int n1, int n2, double fill)
	: GridConvex2D(box, n1, n2, std::vector<double>(static_cast<std::size_t>(n1) * n2, fill))
{
}

GridConvex2D GridConvex2D::sample(const std::function<double(Vec2)> &fn, Box box, int n1, int n2)
{
	GridConvex2D g(box, n1, n2, 0.0);
	for (int j = 0; j < n2; ++j)
		for (int i = 0; i < n1; ++i)
			g.at(i, j) = fn(g.node(i, j));
	return g;
}

double GridConvex2D::x1(int i) const { return i == n1_ - 1 ? box_.b1 : box_.a1 + (box_.b1 - box_.a1) * i / (n1_ - 1); }
double GridConvex2D::x2(int j) const { return j == n2_ - 1 ? box_.b2 : box_.a2 + (box_.b2 - box_.a2) * j / (n2_ - 1); }
std::vector<double> GridConvex2D::axis1() const { return linspace(box_.a1, box_.b1, n1_); }
std::vector<double> GridConvex2D::axis2() const { return linspace(box_.a2, box_.b2, n2_); }

double GridConvex2D::operator()(Vec2 p) const
{
	double u = (p.x - box_.a1) / h1();
	double w = (p.y - box_.a2) / h2();
	const double eps = 1e-9;
	if (!(u >= -eps && u <= n1_ - 1 + eps && w >= -eps && w <= n2_ - 1 + eps))
		return kInf;
	u = std::clamp(u, 0.0, double(n1_ - 1));
	w = std::clamp(w, 0.0, double(n2_ - 1));
	// node coordinates recomputed from the box land within rounding of the node
	if (std::abs(u - std::round(u)) < eps)
		u = std::round(u);
	if (std::abs(w - std::round(w)) < eps)
		w = std::round(w);
	int i = std::min(static_cast<int>(u), n1_ - 2);
	int j = std::min(static_cast<int>(w), n2_ - 2);
	double fu = u - i, fw = w - j;
	double wt[4] = {(1 - fu) * (1 - fw), fu * (1 - fw), (1 - fu) * fw, fu * fw};
	double c[4] = {at(i, j), at(i + 1, j), at(i, j + 1), at(i + 1, j + 1)};
	double s = 0.0;
	for (int k = 0; k < 4; ++k) {
		if (wt[k] == 0.0)
			continue;
		if (is_inf(c[k]))
			return kInf;
		s += wt[k] * c[k];
	}
	return s;
}

std::size_t GridConvex2D::finite_count() const
{
	return static_cast<std::size_t>(std::count_if(v_.begin(), v_.end(), [](double v) { return is_finite(v); }));
}

double GridConvex2D::max_slope(int axis) const
{
	double m = 0.0;
	for (int j = 0; j < n2_; ++j)
		for (int i = 0; i < n1_; ++i) {
			int i2 = axis == 0 ? i + 1 : i, j2 = axis == 0 ? j : j + 1;
			if (i2 >= n1_ || j2 >= n2_)
				continue;
			double a = at(i, j), b = at(i2, j2);
			if (is_finite(a) && is_finite(b))
				m = std::max(m, std::abs(b - a) / (axis == 0 ? h1() : h2()));
		}
	return m;
}

std::vector<Vec2> GridConvex2D::finite_nodes() const
{
	std::vector<Vec2> p;
	for (int j = 0; j < n2_; ++j)
		for (int i = 0; i < n1_; ++i)
			if (is_finite(at(i, j)))
				p.push_back(node(i, j));
	return p;
}

Box default_dual_box(const GridConvex2D &psi)
{
	double s1 = std::max(1.25 * psi.max_slope(0), 1.0);
	double s2 = std::max(1.25 * psi.max_slope(1), 1.0);
	return Box::centered(s1, s2);
}

GridConvex2D conjugate_grid(const GridConvex2D &psi, std::optional<Box> dual_box, int m1, int m2, Exec exec)
{
	if (psi.finite_count() == 0)
		throw std::invalid_argument("conjugate_grid: function is identically +inf");
	Box db = dual_box ? *dual_box : default_dual_box(psi);
	if (m1 <= 0)
		m1 = psi.n1();
	if (m2 <= 0)
		m2 = psi.n2();
	const int n1 = psi.n1(), n2 = psi.n2();
	std::vector<double> x = psi.axis1(), y = psi.axis2();
	std::vector<double> s1 = linspace(db.a1, db.b1, m1), s2 = linspace(db.a2, db.b2, m2);
	const bool par = exec == Exec::Parallel;

	// pass 1: rows, g[j][k] = max_i s1_k x_i - psi(i, j)
	std::vector<double> g(static_cast<std::size_t>(n2) * m1);
#pragma omp parallel for schedule(static) if (par)
	for (int j = 0; j < n2; ++j) {
		std::span<const double> row(psi.values().data() + static_cast<std::size_t>(j) * n1, n1);
		llt_1d(x, row, s1, std::span<double>(g.data() + static_cast<std::size_t>(j) * m1, m1));
	}

	// pass 2: columns, out[l][k] = max_j s2_l y_j + g[j][k]
	std::vector<double> out(static_cast<std::size_t>(m2) * m1);
#pragma omp parallel if (par)
	{
		std::vector<double> col(n2), res(m2);
#pragma omp for schedule(static)
		for (int k = 0; k < m1; ++k) {
			for (int j = 0; j < n2; ++j) {
				double v = g[static_cast<std::size_t>(j) * m1 + k];
				col[j] = v == -kInf ? kInf : -v;
			}
			llt_1d(y, col, s2, res);
			for (int l = 0; l < m2; ++l)
				out[static_cast<std::size_t>(l) * m1 + k] = res[l];
		}
	}
	return GridConvex2D(db, m1, m2, std::move(out));
}

GridConvex2D conjugate_grid_brute(const GridConvex2D &psi, Box db, int m1, int m2)
{
	if (psi.finite_count() == 0)
		throw std::invalid_argument("conjugate_grid: function is identically +inf");
	std::vector<double> s1 = linspace(db.a1, db.b1, m1), s2 = linspace(db.a2, db.b2, m2);
	std::vector<double> x = psi.axis1(), y = psi.axis2();
	std::vector<double> out(static_cast<std::size_t>(m1) * m2);
	for (int l = 0; l < m2; ++l)
		for (int k = 0; k < m1; ++k) {
			double best = -kInf;
			for (int j = 0; j < psi.n2(); ++j)
				for (int i = 0; i < psi.n1(); ++i) {
					double v = psi.at(i, j);
					if (is_inf(v))
						continue;
					double g = s1[k] * x[i] - v;
					best = std::max(best, s2[l] * y[j] + g);
				}
			out[static_cast<std::size_t>(l) * m1 + k] = best;
		}
	return GridConvex2D(db, m1, m2, std::move(out));
}

ConjugateEvaluator::ConjugateEvaluator(const GridConvex2D &psi)
	: y_(psi.axis2())
{
	std::vector<double> x = psi.axis1();
	for (int j = 0; j < psi.n2(); ++j)
		rows_.emplace_back(x, std::span<const double>(psi.values().data() + static_cast<std::size_t>(j) * psi.n1(), psi.n1()));
}

double ConjugateEvaluator::operator()(Vec2 s) const
{
	double best = -kInf;
	for (std::size_t j = 0; j < rows_.size(); ++j) {
		if (rows_[j].empty())
			continue;
		best = std::max(best, s.y * y_[j] + rows_[j](s.x));
	}
	return best;
}

GridConvex2D convexify(const GridConvex2D &psi, Exec exec)
{
	GridConvex2D h = conjugate_grid(psi, std::nullopt, 2 * psi.n1() - 1, 2 * psi.n2() - 1, exec);
	GridConvex2D back = conjugate_grid(h, psi.box(), psi.n1(), psi.n2(), exec);
	for (std::size_t q = 0; q < back.values().size(); ++q)
		if (is_inf(psi.values()[q]))
			back.values()[q] = kInf;
	return back;
}

std::vector<Vec2> hull_points(std::span<const Vec2> pts)
{
	std::vector<Vec2> p(pts.begin(), pts.end());
	std::sort(p.begin(), p.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
	p.erase(std::unique(p.begin(), p.end()), p.end());
	if (p.size() < 3)
		return p;
	std::vector<Vec2> h(2 * p.size());
	std::size_t k = 0;
	for (std::size_t i = 0; i < p.size(); ++i) {
		while (k >= 2 && cross(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= 0.0)
			--k;
		h[k++] = p[i];
	}
	for (std::size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
		while (k >= t && cross(h[k - 1] - h[k - 2], p[i - 1] - h[k - 2]) <= 0.0)
			--k;
		h[k++] = p[i - 1];
	}
	h.resize(k - 1);
	return h;
}

SumDomain::SumDomain(std::vector<Vec2> a, std::vector<Vec2> b)
{
	std::vector<Vec2> ha = hull_points(a), hb = hull_points(b);
	if (ha.empty() || hb.empty())
		throw std::invalid_argument("sum domain: empty point set");
	normals_ = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
	auto add_edges = [&](const std::vector<Vec2> &h) {
		for (std::size_t i = 0; i < h.size(); ++i) {
			Vec2 e = h[(i + 1) % h.size()] - h[i];
			double n = norm(e);
			if (n == 0.0)
				continue;
			Vec2 nu{e.y / n, -e.x / n};
			normals_.push_back(nu);
			if (h.size() == 2) {
				normals_.push_back(-1.0 * nu);
				normals_.push_back((1.0 / n) * e);
				normals_.push_back((-1.0 / n) * e);
			}
		}
	};
	add_edges(ha);
	add_edges(hb);
	for (Vec2 nu : normals_) {
		double sa = -kInf, sb = -kInf;
		for (Vec2 p : ha)
			sa = std::max(sa, dot(p, nu));
		for (Vec2 p : hb)
			sb = std::max(sb, dot(p, nu));
		support_.push_back(sa + sb);
	}
}

bool SumDomain::contains(Vec2 p, double tol) const
{
	for (std::size_t k = 0; k < normals_.size(); ++k)
		if (dot(p, normals_[k]) > support_[k] + tol)
			return false;
	return true;
}

namespace
{

GridConvex2D sum_grid_shell(const GridConvex2D &phi, const GridConvex2D &psi)
{
	double h1 = std::min(phi.h1(), psi.h1()), h2 = std::min(phi.h2(), psi.h2());
	Box b{phi.box().a1 + psi.box().a1, phi.box().b1 + psi.box().b1, phi.box().a2 + psi.box().a2,
	      phi.box().b2 + psi.box().b2};
	int n1 = static_cast<int>(std::lround((b.b1 - b.a1) / h1)) + 1;
	int n2 = static_cast<int>(std::lround((b.b2 - b.a2) / h2)) + 1;
	return GridConvex2D(b, n1, n2, kInf);
}

void mask_to_sum(GridConvex2D &out, const GridConvex2D &phi, const GridConvex2D &psi)
{
	SumDomain dom(phi.finite_nodes(), psi.finite_nodes());
	double tol = 1e-9 * (1.0 + out.h());
	for (int j = 0; j < out.n2(); ++j)
		for (int i = 0; i < out.n1(); ++i)
			if (!dom.contains(out.node(i, j), tol))
				out.at(i, j) = kInf;
}

} // namespace

GridConvex2D inf_conv_grid(const GridConvex2D &phi, const GridConvex2D &psi, std::optional<Box> dual_box, Exec exec)
{
	Box db;
	if (dual_box) {
		db = *dual_box;
		const char *axis[2] = {"x1", "x2"};
		for (int a = 0; a < 2; ++a) {
			double need = std::max(phi.max_slope(a), psi.max_slope(a));
			double lo = a == 0 ? db.a1 : db.a2, hi = a == 0 ? db.b1 : db.b2;
			if (need > hi || -need < lo)
				throw std::invalid_argument(std::string("inf_conv_grid: dual window overflow on axis ") + axis[a]);
		}
	} else {
		Box d1 = default_dual_box(phi), d2 = default_dual_box(psi);
		db = Box::centered(std::max(d1.b1, d2.b1), std::max(d1.b2, d2.b2));
	}
	int m1 = 2 * std::max(phi.n1(), psi.n1()) + 1, m2 = 2 * std::max(phi.n2(), psi.n2()) + 1;
	GridConvex2D a = conjugate_grid(phi, db, m1, m2, exec);
	GridConvex2D b = conjugate_grid(psi, db, m1, m2, exec);
	for (std::size_t q = 0; q < a.values().size(); ++q)
		a.values()[q] += b.values()[q];
	GridConvex2D shell = sum_grid_shell(phi, psi);
	GridConvex2D out = conjugate_grid(a, shell.box(), shell.n1(), shell.n2(), exec);
	mask_to_sum(out, phi, psi);
	return out;
}

GridConvex2D inf_conv_grid_brute(const GridConvex2D &phi, const GridConvex2D &psi)
{
	GridConvex2D out = sum_grid_shell(phi, psi);
	std::vector<Vec2> nodes;
	std::vector<double> vals;
	for (int j = 0; j < phi.n2(); ++j)
		for (int i = 0; i < phi.n1(); ++i)
			if (is_finite(phi.at(i, j))) {
				nodes.push_back(phi.node(i, j));
				vals.push_back(phi.at(i, j));
			}
	for (int j = 0; j < out.n2(); ++j)
		for (int i = 0; i < out.n1(); ++i) {
			Vec2 x = out.node(i, j);
			double best = kInf;
			for (std::size_t q = 0; q < nodes.size(); ++q)
				best = std::min(best, ext_add(vals[q], psi(x - nodes[q])));
			out.at(i, j) = best;
		}
	return out;
}

GridConvex2D epi_mult_grid(double lambda, const GridConvex2D &psi)
{
	if (!(lambda > 0.0))
		throw std::invalid_argument("epi_mult_grid: lambda must be positive");
	Box b{lambda * psi.box().a1, lambda * psi.box().b1, lambda * psi.box().a2, lambda * psi.box().b2};
	std::vector<double> v = psi.values();
	for (auto &t : v)
		t = ext_scale(lambda, t);
	return GridConvex2D(b, psi.n1(), psi.n2(), std::move(v));
}

GridConvex2D scale_grid(double c, const GridConvex2D &psi)
{
	if (!(c > 0.0))
		throw std::invalid_argument("scale_grid: factor must be positive");
	std::vector<double> v = psi.values();
	for (auto &t : v)
		t = ext_scale(c, t);
	return GridConvex2D(psi.box(), psi.n1(), psi.n2(), std::move(v));
}

GridConvex2D reflect_grid(const GridConvex2D &psi, const Direction &u)
{
	const Box &b = psi.box();
	const int n1 = psi.n1(), n2 = psi.n2();
	Vec2 uu = u.u();
	if (std::abs(uu.y) < 1e-15) {
		GridConvex2D out({-b.b1, -b.a1, b.a2, b.b2}, n1, n2, 0.0);
		for (int j = 0; j < n2; ++j)
			for (int i = 0; i < n1; ++i)
				out.at(i, j) = psi.at(n1 - 1 - i, j);
		return out;
	}
	if (std::abs(uu.x) < 1e-15) {
		GridConvex2D out({b.a1, b.b1, -b.b2, -b.a2}, n1, n2, 0.0);
		for (int j = 0; j < n2; ++j)
			for (int i = 0; i < n1; ++i)
				out.at(i, j) = psi.at(i, n2 - 1 - j);
		return out;
	}
	Vec2 c[4] = {u.reflect({b.a1, b.a2}), u.reflect({b.b1, b.a2}), u.reflect({b.a1, b.b2}), u.reflect({b.b1, b.b2})};
	Box ob{c[0].x, c[0].x, c[0].y, c[0].y};
	for (Vec2 p : c) {
		ob.a1 = std::min(ob.a1, p.x);
		ob.b1 = std::max(ob.b1, p.x);
		ob.a2 = std::min(ob.a2, p.y);
		ob.b2 = std::max(ob.b2, p.y);
	}
	double hh = std::min(psi.h1(), psi.h2());
	int m1 = static_cast<int>(std::ceil((ob.b1 - ob.a1) / hh - 1e-9)) + 1;
	int m2 = static_cast<int>(std::ceil((ob.b2 - ob.a2) / hh - 1e-9)) + 1;
	GridConvex2D out(ob, m1, m2, 0.0);
	for (int j = 0; j < m2; ++j)
		for (int i = 0; i < m1; ++i)
			out.at(i, j) = psi(u.reflect(out.node(i, j)));
	return out;
}

Vec2 hyperplane_axis(const Direction &u)
{
	Vec2 v{-u.u().y, u.u().x};
	if (v.x < -1e-15 || (std::abs(v.x) <= 1e-15 && v.y < 0.0))
		v = -1.0 * v;
	return v;
}

ConvexPL1D project_grid(const GridConvex2D &psi, const Direction &u)
{
	std::vector<std::pair<double, double>> pts;
	Vec2 uu = u.u();
	if (std::abs(uu.x) < 1e-15 || std::abs(uu.y) < 1e-15) {
		bool along2 = std::abs(uu.x) < 1e-15; // minimize over x2
		int nt = along2 ? psi.n1() : psi.n2(), nr = along2 ? psi.n2() : psi.n1();
		for (int t = 0; t < nt; ++t) {
			double best = kInf;
			for (int r = 0; r < nr; ++r)
				best = std::min(best, along2 ? psi.at(t, r) : psi.at(r, t));
			if (is_finite(best))
				pts.emplace_back(along2 ? psi.x1(t) : psi.x2(t), best);
		}
	} else {
		Vec2 v = hyperplane_axis(u);
		const Box &b = psi.box();
		Vec2 c[4] = {{b.a1, b.a2}, {b.b1, b.a2}, {b.a1, b.b2}, {b.b1, b.b2}};
		double tlo = kInf, thi = -kInf, rlo = kInf, rhi = -kInf;
		for (Vec2 p : c) {
			tlo = std::min(tlo, dot(p, v));
			thi = std::max(thi, dot(p, v));
			rlo = std::min(rlo, dot(p, uu));
			rhi = std::max(rhi, dot(p, uu));
		}
		double hh = std::min(psi.h1(), psi.h2());
		int nt = static_cast<int>(std::ceil((thi - tlo) / hh)) + 1;
		int nr = static_cast<int>(std::ceil((rhi - rlo) / hh)) + 1;
		for (int a = 0; a < nt; ++a) {
			double t = tlo + (thi - tlo) * a / (nt - 1);
			double best = kInf;
			for (int q = 0; q < nr; ++q) {
				double r = rlo + (rhi - rlo) * q / (nr - 1);
				best = std::min(best, psi(t * v + r * uu));
			}
			if (is_finite(best))
				pts.emplace_back(t, best);
		}
	}
	if (pts.empty())
		throw std::invalid_argument("project_grid: no finite values");
	return ConvexPL1D::lower_hull(std::move(pts));
}

double capped_distance(const GridConvex2D &a, const GridConvex2D &b, double cap)
{
	if (a.n1() != b.n1() || a.n2() != b.n2())
		throw std::invalid_argument("capped_distance: grids differ in resolution");
	double d = 0.0;
	for (std::size_t q = 0; q < a.values().size(); ++q)
		d = std::max(d, std::abs(capped(a.values()[q], cap) - capped(b.values()[q], cap)));
	return d;
}

} // namespace alphasym
