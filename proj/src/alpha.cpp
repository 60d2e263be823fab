#include "alphasym/alpha.hpp"

#include "alphasym/extended.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alphasym
{

double to_base(double f, double alpha)
{
	if (alpha == kLayerAlpha)
		throw std::invalid_argument("to_base: the quasiconcave class has no base function");
	if (!(f >= 0.0))
		throw std::invalid_argument("to_base: values must be nonnegative");
	if (f == 0.0)
		return kInf;
	if (alpha == 0.0)
		return -std::log(f);
	return (1.0 - std::pow(f, alpha)) / alpha;
}

double from_base(double b, double alpha)
{
	if (alpha == kLayerAlpha)
		throw std::invalid_argument("from_base: the quasiconcave class has no base function");
	if (is_inf(b))
		return 0.0;
	if (alpha == 0.0)
		return std::exp(-b);
	double y = 1.0 - alpha * b;
	if (y <= 0.0)
		return alpha > 0.0 ? 0.0 : kInf;
	return std::pow(y, 1.0 / alpha);
}

double alpha_mean(double s, double t, double u, double v, double alpha)
{
	if (u < 0.0 || v < 0.0)
		throw std::invalid_argument("alpha_mean: values must be nonnegative");
	if (u == 0.0 || v == 0.0)
		return 0.0;
	if (alpha == -kInf)
		return std::min(u, v);
	if (alpha == kInf)
		return std::max(u, v);
	if (std::abs(alpha) < 1e-8)
		return std::exp(s * std::log(u) + t * std::log(v));
	double m = alpha < 0.0 ? std::min(u, v) : std::max(u, v);
	return m * std::pow(s * std::pow(u / m, alpha) + t * std::pow(v / m, alpha), 1.0 / alpha);
}

// ---------------------------------------------------------------------------

QuasiPL1D QuasiPL1D::make(std::vector<double> x, std::vector<double> v)
{
	if (x.empty() || x.size() != v.size())
		throw std::invalid_argument("quasi PL: need matching nonempty breakpoints and values");
	for (std::size_t i = 0; i < x.size(); ++i) {
		if (!std::isfinite(x[i]) || !std::isfinite(v[i]) || v[i] < 0.0)
			throw std::invalid_argument("quasi PL: breakpoints must be finite and values nonnegative");
		if (i > 0 && x[i] < x[i - 1])
			throw std::invalid_argument("quasi PL: breakpoints must be nondecreasing");
	}
	QuasiPL1D q;
	q.x_ = std::move(x);
	q.v_ = std::move(v);
	return q;
}

QuasiPL1D QuasiPL1D::indicator(double a, double b, double height) { return make({a, b}, {height, height}); }

QuasiPL1D QuasiPL1D::sample(const std::function<double(double)> &fn, double a, double b, int n)
{
	std::vector<double> x(n), v(n);
	for (int i = 0; i < n; ++i) {
		x[i] = i == n - 1 ? b : a + (b - a) * i / (n - 1);
		v[i] = fn(x[i]);
	}
	return make(std::move(x), std::move(v));
}

double QuasiPL1D::operator()(double t) const
{
	if (t < x_.front() || t > x_.back())
		return 0.0;
	auto lo = std::lower_bound(x_.begin(), x_.end(), t);
	auto hi = std::upper_bound(x_.begin(), x_.end(), t);
	if (lo != hi) {
		double m = 0.0;
		for (auto it = lo; it != hi; ++it)
			m = std::max(m, v_[static_cast<std::size_t>(it - x_.begin())]);
		return m;
	}
	std::size_t i = static_cast<std::size_t>(hi - x_.begin());
	double w = (t - x_[i - 1]) / (x_[i] - x_[i - 1]);
	return (1.0 - w) * v_[i - 1] + w * v_[i];
}

double QuasiPL1D::sup() const { return *std::max_element(v_.begin(), v_.end()); }

double QuasiPL1D::integral() const
{
	double s = 0.0;
	for (std::size_t i = 1; i < x_.size(); ++i)
		s += 0.5 * (v_[i] + v_[i - 1]) * (x_[i] - x_[i - 1]);
	return s;
}

QuasiGrid2D::QuasiGrid2D(GridConvex2D values)
	: g_(std::move(values))
{
	for (double v : g_.values())
		if (!(v >= 0.0) || is_inf(v))
			throw std::invalid_argument("quasi grid: values must be finite and nonnegative");
}

double QuasiGrid2D::operator()(Vec2 p) const
{
	double v = g_(p);
	return is_inf(v) ? 0.0 : v;
}

double QuasiGrid2D::sup() const { return *std::max_element(g_.values().begin(), g_.values().end()); }

// ---------------------------------------------------------------------------

AlphaFunction AlphaFunction::with_base(double alpha, ConvexPL1D base)
{
	if (alpha == kLayerAlpha || std::isnan(alpha) || is_inf(alpha))
		throw std::invalid_argument("alpha function: a base needs real alpha");
	if (!base.bounded())
		throw std::invalid_argument("alpha function: the base must have bounded domain");
	return AlphaFunction(alpha, std::move(base));
}

AlphaFunction AlphaFunction::with_base(double alpha, GridConvex2D base, std::shared_ptr<const PolarDual> dual)
{
	if (alpha == kLayerAlpha || std::isnan(alpha) || is_inf(alpha))
		throw std::invalid_argument("alpha function: a base needs real alpha");
	if (base.finite_count() == 0)
		throw std::invalid_argument("alpha function: base is identically +inf");
	AlphaFunction f(alpha, std::move(base));
	f.dual_ = std::move(dual);
	return f;
}

AlphaFunction AlphaFunction::quasi(QuasiPL1D values)
{
	if (!(values.sup() > 0.0))
		throw std::invalid_argument("alpha function: quasiconcave values need positive sup");
	return AlphaFunction(kLayerAlpha, std::move(values));
}

AlphaFunction AlphaFunction::quasi(QuasiGrid2D values, std::shared_ptr<const LevelStack> levels)
{
	if (!(values.sup() > 0.0) && !(levels && !levels->t.empty()))
		throw std::invalid_argument("alpha function: quasiconcave values need positive sup");
	AlphaFunction f(kLayerAlpha, std::move(values));
	f.levels_ = std::move(levels);
	return f;
}

int AlphaFunction::dim() const
{
	return std::holds_alternative<ConvexPL1D>(rep_) || std::holds_alternative<QuasiPL1D>(rep_) ? 1 : 2;
}

const ConvexPL1D &AlphaFunction::base1() const
{
	if (auto p = std::get_if<ConvexPL1D>(&rep_))
		return *p;
	throw std::logic_error("alpha function: not a 1D base representation");
}

const GridConvex2D &AlphaFunction::base2() const
{
	if (auto p = std::get_if<GridConvex2D>(&rep_))
		return *p;
	throw std::logic_error("alpha function: not a 2D base representation");
}

const QuasiPL1D &AlphaFunction::q1() const
{
	if (auto p = std::get_if<QuasiPL1D>(&rep_))
		return *p;
	throw std::logic_error("alpha function: not 1D quasiconcave values");
}

const QuasiGrid2D &AlphaFunction::q2() const
{
	if (auto p = std::get_if<QuasiGrid2D>(&rep_))
		return *p;
	throw std::logic_error("alpha function: not 2D quasiconcave values");
}

double AlphaFunction::operator()(double x) const
{
	if (auto p = std::get_if<ConvexPL1D>(&rep_))
		return from_base((*p)(x), alpha_);
	return q1()(x);
}

double AlphaFunction::operator()(Vec2 x) const
{
	if (auto p = std::get_if<GridConvex2D>(&rep_))
		return from_base((*p)(x), alpha_);
	return q2()(x);
}

double AlphaFunction::sup() const
{
	if (auto p = std::get_if<ConvexPL1D>(&rep_))
		return from_base(*std::min_element(p->v().begin(), p->v().end()), alpha_);
	if (auto p = std::get_if<QuasiPL1D>(&rep_))
		return p->sup();
	if (auto p = std::get_if<GridConvex2D>(&rep_))
		return from_base(*std::min_element(p->values().begin(), p->values().end()), alpha_);
	if (levels_ && !levels_->t.empty())
		return levels_->t.back();
	return q2().sup();
}

GridConvex2D AlphaFunction::values2() const
{
	if (auto p = std::get_if<GridConvex2D>(&rep_)) {
		GridConvex2D g = *p;
		for (double &v : g.values())
			v = from_base(v, alpha_);
		return g;
	}
	return q2().grid();
}

AlphaFunction alpha_from_values2(double alpha, const GridConvex2D &values)
{
	if (alpha == kLayerAlpha)
		return AlphaFunction::quasi(QuasiGrid2D(values));
	GridConvex2D b = values;
	for (double &v : b.values())
		v = to_base(v, alpha);
	return AlphaFunction::with_base(alpha, std::move(b));
}

// ---------------------------------------------------------------------------

namespace
{

double scaled_value1(const AlphaFunction &f, double lambda, double y)
{
	double v = f(y / lambda);
	double a = f.alpha();
	if (a == kLayerAlpha)
		return v;
	if (a == 0.0)
		return v == 0.0 ? 0.0 : std::pow(v, lambda);
	return std::pow(lambda, 1.0 / a) * v;
}

double scaled_value2(const AlphaFunction &f, double lambda, Vec2 y)
{
	double v = f((1.0 / lambda) * y);
	double a = f.alpha();
	if (a == kLayerAlpha)
		return v;
	if (a == 0.0)
		return v == 0.0 ? 0.0 : std::pow(v, lambda);
	return std::pow(lambda, 1.0 / a) * v;
}

std::pair<double, double> support_interval(const AlphaFunction &f)
{
	if (f.layered())
		return {f.q1().x().front(), f.q1().x().back()};
	return {f.base1().lo(), f.base1().hi()};
}

Box support_box(const AlphaFunction &f)
{
	GridConvex2D v = f.values2();
	Box b{kInf, -kInf, kInf, -kInf};
	for (int j = 0; j < v.n2(); ++j)
		for (int i = 0; i < v.n1(); ++i)
			if (v.at(i, j) > 0.0) {
				b.a1 = std::min(b.a1, v.x1(i));
				b.b1 = std::max(b.b1, v.x1(i));
				b.a2 = std::min(b.a2, v.x2(j));
				b.b2 = std::max(b.b2, v.x2(j));
			}
	return b;
}

} // namespace

AlphaFunction alpha_sum_brute(const AlphaFunction &f, const AlphaFunction &g, double a, double b, int n)
{
	if (f.dim() != g.dim() || f.alpha() != g.alpha())
		throw std::invalid_argument("alpha_sum_brute: functions differ in dimension or alpha");
	if (!(a > 0.0) || !(b > 0.0))
		throw std::invalid_argument("alpha_sum_brute: weights must be positive");
	const double alpha = f.alpha();
	if (f.dim() == 1) {
		if (n > 257)
			throw std::invalid_argument("alpha_sum_brute: grid too large for the direct oracle, use alpha_asplund");
		auto [fl, fh] = support_interval(f);
		auto [gl, gh] = support_interval(g);
		double lo = a * fl + b * gl, hi = a * fh + b * gh;
		std::vector<double> xs(n), vals(n);
		for (int k = 0; k < n; ++k) {
			double x = k == n - 1 ? hi : lo + (hi - lo) * k / (n - 1);
			double best = 0.0;
			for (int q = 0; q < n; ++q) {
				double y = q == n - 1 ? a * fh : a * fl + (a * fh - a * fl) * q / (n - 1);
				best = std::max(best, alpha_mean(1, 1, scaled_value1(f, a, y), scaled_value1(g, b, x - y), alpha));
			}
			xs[k] = x;
			vals[k] = best;
		}
		if (alpha == kLayerAlpha)
			return AlphaFunction::quasi(QuasiPL1D::make(xs, vals));
		std::vector<std::pair<double, double>> pts;
		for (int k = 0; k < n; ++k)
			if (vals[k] > 0.0)
				pts.emplace_back(xs[k], to_base(vals[k], alpha));
		return AlphaFunction::with_base(alpha, ConvexPL1D::lower_hull(std::move(pts)));
	}
	if (n > 33)
		throw std::invalid_argument("alpha_sum_brute: grid too large for the direct oracle, use alpha_asplund");
	Box bf = support_box(f), bg = support_box(g);
	Box out{a * bf.a1 + b * bg.a1, a * bf.b1 + b * bg.b1, a * bf.a2 + b * bg.a2, a * bf.b2 + b * bg.b2};
	if (!(out.a1 < out.b1) || !(out.a2 < out.b2))
		throw std::invalid_argument("alpha_sum_brute: supports have empty interior");
	Box ys{a * bf.a1, a * bf.b1, a * bf.a2, a * bf.b2};
	GridConvex2D res(out, n, n, 0.0);
	GridConvex2D ygrid(ys, n, n, 0.0);
	std::vector<std::pair<Vec2, double>> yv;
	for (int j = 0; j < n; ++j)
		for (int i = 0; i < n; ++i) {
			Vec2 y = ygrid.node(i, j);
			double v = scaled_value2(f, a, y);
			if (v > 0.0)
				yv.emplace_back(y, v);
		}
	for (int j = 0; j < n; ++j)
		for (int i = 0; i < n; ++i) {
			Vec2 x = res.node(i, j);
			double best = 0.0;
			for (auto &[y, v] : yv)
				best = std::max(best, alpha_mean(1, 1, v, scaled_value2(g, b, x - y), alpha));
			res.at(i, j) = best;
		}
	return alpha_from_values2(alpha, res);
}

AlphaFunction alpha_asplund(const AlphaFunction &f, const AlphaFunction &g, double a, double b)
{
	if (f.layered() || g.layered())
		throw std::invalid_argument("alpha_asplund: alpha = -inf has no base function; use the level-set route");
	if (f.dim() != g.dim() || f.alpha() != g.alpha())
		throw std::invalid_argument("alpha_asplund: functions differ in dimension or alpha");
	if (f.dim() == 1)
		return AlphaFunction::with_base(f.alpha(), inf_conv_pl(epi_mult_pl(a, f.base1()), epi_mult_pl(b, g.base1())));
	return AlphaFunction::with_base(f.alpha(), inf_conv_grid(epi_mult_grid(a, f.base2()), epi_mult_grid(b, g.base2())));
}

// ---------------------------------------------------------------------------

namespace
{

// {x : psi(x) <= c} for a bounded PL function
std::optional<std::pair<double, double>> sublevel_pl(const ConvexPL1D &psi, double c)
{
	const auto &x = psi.x();
	const auto &v = psi.v();
	std::size_t m = x.size();
	if (*std::min_element(v.begin(), v.end()) > c)
		return std::nullopt;
	double lo = x[0], hi = x[m - 1];
	if (v[0] > c)
		for (std::size_t i = 0; i + 1 < m; ++i)
			if (v[i + 1] <= c) {
				lo = x[i] + (c - v[i]) / (v[i + 1] - v[i]) * (x[i + 1] - x[i]);
				break;
			}
	if (v[m - 1] > c)
		for (std::size_t i = m - 1; i > 0; --i)
			if (v[i - 1] <= c) {
				hi = x[i] + (c - v[i]) / (v[i - 1] - v[i]) * (x[i - 1] - x[i]);
				break;
			}
	return std::make_pair(lo, hi);
}

// {x : q(x) >= t}; throws when the set is not an interval
std::optional<std::pair<double, double>> superlevel_quasi(const QuasiPL1D &q, double t)
{
	const auto &x = q.x();
	const auto &v = q.v();
	std::size_t m = x.size();
	std::optional<double> lo, hi;
	for (std::size_t i = 0; i < m && !lo; ++i) {
		if (v[i] >= t)
			lo = x[i];
		else if (i + 1 < m && v[i + 1] >= t)
			lo = x[i + 1] == x[i] ? x[i] : x[i] + (t - v[i]) / (v[i + 1] - v[i]) * (x[i + 1] - x[i]);
	}
	if (!lo)
		return std::nullopt;
	for (std::size_t i = m; i-- > 0 && !hi;) {
		if (v[i] >= t)
			hi = x[i];
		else if (i > 0 && v[i - 1] >= t)
			hi = x[i - 1] == x[i] ? x[i] : x[i] + (t - v[i]) / (v[i - 1] - v[i]) * (x[i - 1] - x[i]);
	}
	double slack = 1e-12 * std::max(1.0, t);
	for (std::size_t i = 0; i < m; ++i)
		if (x[i] > *lo && x[i] < *hi && q(x[i]) < t - slack)
			throw std::invalid_argument("superlevel set: values are not quasiconcave (level sets not nested intervals)");
	return std::make_pair(*lo, *hi);
}

// x-range of a convex point hull on the horizontal line y
std::optional<std::pair<double, double>> row_interval(const std::vector<Vec2> &h, double y, double tol)
{
	if (h.size() == 1) {
		if (std::abs(h[0].y - y) <= tol)
			return std::make_pair(h[0].x, h[0].x);
		return std::nullopt;
	}
	double lo = kInf, hi = -kInf;
	for (std::size_t i = 0; i < h.size(); ++i) {
		Vec2 p = h[i], q = h[(i + 1) % h.size()];
		if (std::abs(p.y - q.y) <= tol) {
			if (std::abs(p.y - y) <= tol) {
				lo = std::min({lo, p.x, q.x});
				hi = std::max({hi, p.x, q.x});
			}
			continue;
		}
		if (y < std::min(p.y, q.y) - tol || y > std::max(p.y, q.y) + tol)
			continue;
		double w = std::clamp((y - p.y) / (q.y - p.y), 0.0, 1.0);
		double xx = p.x + w * (q.x - p.x);
		lo = std::min(lo, xx);
		hi = std::max(hi, xx);
	}
	if (lo > hi)
		return std::nullopt;
	return std::make_pair(lo, hi);
}

LevelSet level_from_hull(std::vector<Vec2> h)
{
	LevelSet s;
	if (h.empty())
		return s;
	s.points = h;
	if (h.size() >= 3) {
		try {
			s.body = ConvexBody::polygon(h);
			s.kind = LevelSet::Kind::Body;
			s.points = s.body->vertices();
			return s;
		} catch (const DegenerateBodyError &) {
		}
	}
	s.kind = LevelSet::Kind::Degenerate;
	return s;
}

LevelSet grid_superlevel(const GridConvex2D &vals, double t)
{
	std::vector<Vec2> pts;
	for (int j = 0; j < vals.n2(); ++j)
		for (int i = 0; i < vals.n1(); ++i)
			if (vals.at(i, j) >= t)
				pts.push_back(vals.node(i, j));
	LevelSet s = level_from_hull(hull_points(pts));
	if (s.empty())
		return s;
	double slack = 2.0 * vals.h1();
	double tol = 1e-9 * (1.0 + vals.h());
	for (int j = 0; j < vals.n2(); ++j) {
		auto iv = row_interval(s.points, vals.x2(j), tol);
		if (!iv)
			continue;
		for (int i = 0; i < vals.n1(); ++i) {
			double x = vals.x1(i);
			if (x > iv->first + slack && x < iv->second - slack && vals.at(i, j) < t)
				throw std::invalid_argument("superlevel set: thresholded cells are not convex beyond a two-cell slack");
		}
	}
	return s;
}

double distance_to_hull(const std::vector<Vec2> &h, const std::optional<ConvexBody> &body, Vec2 p)
{
	if (body)
		return body->distance(p);
	if (h.size() == 1)
		return norm(p - h[0]);
	Vec2 a = h[0], b = h[1];
	if (h.size() >= 3) {
		LevelSet s = level_from_hull(hull_points(h));
		if (s.body)
			return s.body->distance(p);
		// too thin for a polygon: the segment between the farthest pair
		for (std::size_t i = 0; i < h.size(); ++i)
			for (std::size_t j = i + 1; j < h.size(); ++j)
				if (norm(h[i] - h[j]) > norm(a - b))
					a = h[i], b = h[j];
	}
	Vec2 ab = b - a;
	double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
	return norm(p - (a + t * ab));
}

} // namespace

LevelSet superlevel_set(const AlphaFunction &f, double t)
{
	if (!(t > 0.0))
		throw std::invalid_argument("superlevel_set: level must be positive");
	LevelSet s;
	if (f.dim() == 1) {
		std::optional<std::pair<double, double>> iv;
		if (f.layered())
			iv = superlevel_quasi(f.q1(), t);
		else
			iv = sublevel_pl(f.base1(), to_base(t, f.alpha()));
		if (!iv)
			return s;
		s.kind = LevelSet::Kind::Body;
		s.body = ConvexBody::interval(iv->first, iv->second);
		s.points = {{iv->first, 0.0}, {iv->second, 0.0}};
		return s;
	}
	if (const LevelStack *st = f.levels()) {
		auto it = std::lower_bound(st->t.begin(), st->t.end(), t);
		if (it == st->t.end())
			return s;
		return st->sets[static_cast<std::size_t>(it - st->t.begin())];
	}
	return grid_superlevel(f.values2(), t);
}

double level_excess(const LevelSet &a, const LevelSet &b)
{
	if (a.empty() || b.empty())
		throw std::invalid_argument("level distance: empty level set");
	if (a.body && a.body->dim() == 1) {
		const ConvexBody &A = *a.body, &B = *b.body;
		return std::max({0.0, A.lo() - B.lo(), B.hi() - A.hi()});
	}
	double d = 0.0;
	for (Vec2 p : b.points)
		d = std::max(d, distance_to_hull(a.points, a.body, p));
	return d;
}

double level_hausdorff(const LevelSet &a, const LevelSet &b)
{
	if (a.body && a.body->dim() == 1)
		return hausdorff(*a.body, *b.body);
	return std::max(level_excess(a, b), level_excess(b, a));
}

LevelSet symmetral_level(const LevelSet &s, const Direction &u)
{
	if (s.empty())
		return s;
	if (s.body && s.body->dim() == 1) {
		LevelSet o;
		o.kind = LevelSet::Kind::Body;
		o.body = minkowski_symmetral_body(*s.body, u);
		o.points = {{o.body->lo(), 0.0}, {o.body->hi(), 0.0}};
		return o;
	}
	if (s.body)
		return level_from_hull(minkowski_symmetral_body(*s.body, u).vertices());
	std::vector<Vec2> pts;
	for (Vec2 p : s.points)
		for (Vec2 q : s.points)
			pts.push_back(0.5 * p + 0.5 * u.reflect(q));
	return level_from_hull(hull_points(pts));
}

namespace
{

double half_length(const QuasiPL1D &q, double t)
{
	auto iv = superlevel_quasi(q, t);
	return iv ? 0.5 * (iv->second - iv->first) : 0.0;
}

AlphaFunction layer_cake_1d(const AlphaFunction &f, Ladder ladder)
{
	const QuasiPL1D &q = f.q1();
	double sup = q.sup();
	double top = ladder.top > 0.0 ? std::min(ladder.top, sup) : sup;
	std::vector<double> levels;
	for (int l = 1; l <= ladder.levels; ++l)
		levels.push_back(l == ladder.levels ? top : top * l / ladder.levels);
	for (double v : q.v())
		if (v > 0.0 && v <= top)
			levels.push_back(v);
	std::sort(levels.begin(), levels.end());
	levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

	// graph points of the symmetral on the left half, by increasing level
	std::vector<std::pair<double, double>> left; // (half length, level)
	double below = 0.0;
	for (double t : levels) {
		double mid = 0.5 * (below + t);
		double ell_plus = 2.0 * half_length(q, mid) - half_length(q, t); // limit from above at `below`
		left.emplace_back(std::max(ell_plus, 0.0), below);
		left.emplace_back(half_length(q, t), t);
		below = t;
	}
	std::vector<double> x, v;
	for (auto [ell, t] : left) {
		x.push_back(-ell);
		v.push_back(t);
	}
	for (auto it = left.rbegin(); it != left.rend(); ++it) {
		x.push_back(it->first);
		v.push_back(it->second);
	}
	// clean: enforce monotone x on each half against rounding
	for (std::size_t i = 1; i < x.size(); ++i)
		x[i] = std::max(x[i], x[i - 1]);
	return AlphaFunction::quasi(QuasiPL1D::make(std::move(x), std::move(v)));
}

AlphaFunction layer_cake_2d(const AlphaFunction &f, const Direction &u, Ladder ladder)
{
	const GridConvex2D &vals = f.q2().grid();
	double top = ladder.top > 0.0 ? ladder.top : f.sup();
	double dt = top / ladder.levels;
	GridConvex2D out(vals.box(), vals.n1(), vals.n2(), 0.0);
	double tol = 1e-9 * (1.0 + vals.h());
	auto stack = std::make_shared<LevelStack>();
	for (int l = 1; l <= ladder.levels; ++l) {
		double t = l == ladder.levels ? top : top * l / ladder.levels;
		LevelSet s = superlevel_set(f, t);
		if (s.empty())
			break;
		LevelSet ts = symmetral_level(s, u);
		stack->t.push_back(t);
		stack->sets.push_back(ts);
		for (int j = 0; j < out.n2(); ++j) {
			auto iv = row_interval(ts.points, out.x2(j), tol);
			if (!iv)
				continue;
			for (int i = 0; i < out.n1(); ++i) {
				double x = out.x1(i);
				if (x >= iv->first - tol && x <= iv->second + tol)
					out.at(i, j) += dt;
			}
		}
	}
	return AlphaFunction::quasi(QuasiGrid2D(std::move(out)), std::move(stack));
}

} // namespace

AlphaFunction layer_cake_symmetral(const AlphaFunction &f, const Direction &u, Ladder ladder)
{
	if (!f.layered())
		throw std::invalid_argument("layer_cake_symmetral: needs alpha = -inf values");
	if (ladder.levels < 16)
		throw std::invalid_argument("layer_cake_symmetral: at least 16 levels are required");
	if (f.dim() != u.dim())
		throw std::invalid_argument("layer_cake_symmetral: direction dimension mismatch");
	return f.dim() == 1 ? layer_cake_1d(f, ladder) : layer_cake_2d(f, u, ladder);
}

double steiner_value_1d(const AlphaFunction &f, double x)
{
	const QuasiPL1D &q = f.q1();
	double lo = 0.0, hi = q.sup();
	if (half_length(q, hi) >= std::abs(x))
		return hi;
	if (half_length(q, std::nextafter(0.0, 1.0)) < std::abs(x))
		return 0.0;
	for (int it = 0; it < 200 && hi - lo > 1e-15 * q.sup(); ++it) {
		double mid = 0.5 * (lo + hi);
		if (mid > 0.0 && half_length(q, mid) >= std::abs(x))
			lo = mid;
		else
			hi = mid;
	}
	return lo;
}

double concavity_violation(const AlphaFunction &f, double beta, int segments, std::mt19937_64 &rng)
{
	std::uniform_real_distribution<double> U(0.0, 1.0);
	double worst = 0.0;
	if (f.dim() == 1) {
		auto [lo, hi] = support_interval(f);
		for (int k = 0; k < segments; ++k) {
			double x = lo + (hi - lo) * U(rng), y = lo + (hi - lo) * U(rng), l = U(rng);
			double fx = f(x), fy = f(y);
			if (fx == 0.0 || fy == 0.0)
				continue;
			worst = std::max(worst, alpha_mean(l, 1 - l, fx, fy, beta) - f(l * x + (1 - l) * y));
		}
		return worst;
	}
	Box b = support_box(f);
	for (int k = 0; k < segments; ++k) {
		Vec2 x{b.a1 + (b.b1 - b.a1) * U(rng), b.a2 + (b.b2 - b.a2) * U(rng)};
		Vec2 y{b.a1 + (b.b1 - b.a1) * U(rng), b.a2 + (b.b2 - b.a2) * U(rng)};
		double l = U(rng);
		double fx = f(x), fy = f(y);
		if (fx == 0.0 || fy == 0.0)
			continue;
		worst = std::max(worst, alpha_mean(l, 1 - l, fx, fy, beta) - f(l * x + (1 - l) * y));
	}
	return worst;
}

AlphaFunction to_quasi(const AlphaFunction &f, int samples_1d)
{
	if (f.layered())
		return f;
	if (f.dim() == 2)
		return AlphaFunction::quasi(QuasiGrid2D(f.values2()));
	const ConvexPL1D &b = f.base1();
	std::vector<double> x;
	for (int i = 0; i < samples_1d; ++i)
		x.push_back(b.lo() + (b.hi() - b.lo()) * i / (samples_1d - 1));
	for (double t : b.x())
		x.push_back(t);
	std::sort(x.begin(), x.end());
	x.erase(std::unique(x.begin(), x.end()), x.end());
	std::vector<double> v;
	for (double t : x)
		v.push_back(f(t));
	return AlphaFunction::quasi(QuasiPL1D::make(std::move(x), std::move(v)));
}

} // namespace alphasym
