#include "alphasym/convex1d.hpp"

#include "alphasym/extended.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace alphasym
{

namespace
{

double rel_scale(double a, double b) { return std::max({1.0, std::abs(a), std::abs(b)}); }

} // namespace

ConvexPL1D ConvexPL1D::make(std::vector<double> x, std::vector<double> v, Extent ext)
{
	if (x.empty())
		throw std::invalid_argument("convex PL: empty breakpoint list");
	if (x.size() != v.size())
		throw std::invalid_argument("convex PL: breakpoint and value counts differ");
	if (ext == Extent::Windowed && x.size() < 2)
		throw std::invalid_argument("convex PL: a windowed function needs two breakpoints");
	for (std::size_t i = 0; i < x.size(); ++i) {
		if (!std::isfinite(x[i]) || !std::isfinite(v[i]))
			throw std::invalid_argument("convex PL: non-finite breakpoint or value at index " + std::to_string(i));
		if (i > 0 && !(x[i] > x[i - 1]))
			throw std::invalid_argument("convex PL: breakpoints not strictly increasing at index " + std::to_string(i));
	}
	for (std::size_t i = 1; i + 1 < x.size(); ++i) {
		double s0 = (v[i] - v[i - 1]) / (x[i] - x[i - 1]);
		double s1 = (v[i + 1] - v[i]) / (x[i + 1] - x[i]);
		if (s1 < s0 - 1e-10 * rel_scale(s0, s1))
			throw std::invalid_argument("convex PL: slopes decrease at breakpoint " + std::to_string(i));
	}

	ConvexPL1D f;
	f.ext_ = ext;
	f.x_.reserve(x.size());
	f.v_.reserve(x.size());
	for (std::size_t i = 0; i < x.size(); ++i) {
		while (f.x_.size() >= 2) {
			std::size_t k = f.x_.size();
			double s0 = (f.v_[k - 1] - f.v_[k - 2]) / (f.x_[k - 1] - f.x_[k - 2]);
			double s1 = (v[i] - f.v_[k - 1]) / (x[i] - f.x_[k - 1]);
			if (std::abs(s1 - s0) <= 1e-12 * rel_scale(s0, s1)) {
				f.x_.pop_back();
				f.v_.pop_back();
			} else
				break;
		}
		f.x_.push_back(x[i]);
		f.v_.push_back(v[i]);
	}
	return f;
}

ConvexPL1D ConvexPL1D::indicator(double a, double b, double c)
{
	if (!(a <= b))
		throw std::invalid_argument("convex PL: indicator needs a <= b");
	if (a == b)
		return point(a, c);
	return make({a, b}, {c, c});
}

ConvexPL1D ConvexPL1D::point(double x0, double c) { return make({x0}, {c}); }

ConvexPL1D ConvexPL1D::lower_hull(std::vector<std::pair<double, double>> pts, Extent ext)
{
	if (pts.empty())
		throw std::invalid_argument("convex PL: empty point set");
	std::sort(pts.begin(), pts.end());
	std::vector<std::pair<double, double>> u;
	for (auto p : pts)
		if (u.empty() || p.first != u.back().first)
			u.push_back(p);
	std::vector<std::pair<double, double>> h;
	for (auto p : u) {
		while (h.size() >= 2) {
			auto a = h[h.size() - 2], b = h.back();
			double cr = (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
			if (cr <= 0.0)
				h.pop_back();
			else
				break;
		}
		h.push_back(p);
	}
	std::vector<double> x, v;
	for (auto p : h) {
		x.push_back(p.first);
		v.push_back(p.second);
	}
	return make(std::move(x), std::move(v), ext);
}

ConvexPL1D ConvexPL1D::sample(const std::function<double(double)> &fn, double a, double b, int n)
{
	if (n < 2 || !(a < b))
		throw std::invalid_argument("convex PL: sample needs n >= 2 and a < b");
	std::vector<std::pair<double, double>> pts;
	for (int i = 0; i < n; ++i) {
		double t = i == n - 1 ? b : a + (b - a) * i / (n - 1);
		pts.emplace_back(t, fn(t));
	}
	return lower_hull(std::move(pts));
}

std::vector<double> ConvexPL1D::slopes() const
{
	std::vector<double> s;
	for (std::size_t i = 1; i < x_.size(); ++i)
		s.push_back((v_[i] - v_[i - 1]) / (x_[i] - x_[i - 1]));
	return s;
}

double ConvexPL1D::min_slope() const
{
	return x_.size() < 2 ? 0.0 : (v_[1] - v_[0]) / (x_[1] - x_[0]);
}

double ConvexPL1D::max_slope() const
{
	std::size_t m = x_.size();
	return m < 2 ? 0.0 : (v_[m - 1] - v_[m - 2]) / (x_[m - 1] - x_[m - 2]);
}

double ConvexPL1D::max_abs_slope() const { return std::max(std::abs(min_slope()), std::abs(max_slope())); }

double ConvexPL1D::operator()(double t) const
{
	std::size_t m = x_.size();
	if (ext_ == Extent::Bounded) {
		double eps = 1e-12 * rel_scale(x_.front(), x_.back());
		if (t < x_.front() - eps || t > x_.back() + eps)
			return kInf;
		if (m == 1)
			return v_[0];
		t = std::clamp(t, x_.front(), x_.back());
	}
	if (t <= x_.front())
		return v_[0] + min_slope() * (t - x_[0]);
	if (t >= x_.back())
		return v_[m - 1] + max_slope() * (t - x_[m - 1]);
	auto it = std::upper_bound(x_.begin(), x_.end(), t);
	std::size_t i = static_cast<std::size_t>(it - x_.begin());
	double w = (t - x_[i - 1]) / (x_[i] - x_[i - 1]);
	return (1.0 - w) * v_[i - 1] + w * v_[i];
}

double ConvexPL1D::min_value() const
{
	if (ext_ == Extent::Windowed && (min_slope() > 0.0 || max_slope() < 0.0))
		return -kInf;
	return *std::min_element(v_.begin(), v_.end());
}

double default_dual_window(const ConvexPL1D &psi) { return std::max(4.0 * psi.max_abs_slope(), 1.0); }

ConvexPL1D conjugate_pl(const ConvexPL1D &psi, double S)
{
	const auto &x = psi.x();
	const auto &v = psi.v();
	std::size_t m = x.size();
	if (psi.bounded()) {
		if (S <= 0.0)
			S = default_dual_window(psi);
		std::vector<double> s = psi.slopes();
		if (!s.empty() && (s.front() <= -S || s.back() >= S))
			throw std::invalid_argument("conjugate: dual window [-S, S] does not contain every slope");
		std::vector<double> px{-S}, pv{-S * x[0] - v[0]};
		for (std::size_t i = 0; i < s.size(); ++i) {
			px.push_back(s[i]);
			pv.push_back(s[i] * x[i] - v[i]);
		}
		px.push_back(S);
		pv.push_back(S * x[m - 1] - v[m - 1]);
		return ConvexPL1D::make(std::move(px), std::move(pv), Extent::Windowed);
	}
	std::vector<double> s = psi.slopes();
	std::vector<double> qx, qv;
	for (std::size_t j = 0; j < s.size(); ++j) {
		double val = s[j] * x[j] - v[j];
		if (!qx.empty() && s[j] <= qx.back() + 1e-15 * rel_scale(s[j], qx.back())) {
			qv.back() = std::max(qv.back(), val);
			continue;
		}
		qx.push_back(s[j]);
		qv.push_back(val);
	}
	return ConvexPL1D::make(std::move(qx), std::move(qv), Extent::Bounded);
}

ConvexPL1D inf_conv_pl(const ConvexPL1D &phi, const ConvexPL1D &psi)
{
	if (!phi.bounded() || !psi.bounded())
		throw std::invalid_argument("inf_conv: both arguments must have bounded domain");
	const auto &ax = phi.x();
	const auto &av = phi.v();
	const auto &bx = psi.x();
	const auto &bv = psi.v();
	std::vector<double> sa = phi.slopes(), sb = psi.slopes();
	std::vector<double> x{ax[0] + bx[0]}, v{av[0] + bv[0]};
	std::size_t i = 0, j = 0;
	while (i < sa.size() || j < sb.size()) {
		if (j >= sb.size() || (i < sa.size() && sa[i] < sb[j]))
			++i;
		else if (i >= sa.size() || sb[j] < sa[i])
			++j;
		else {
			++i;
			++j;
		}
		double nx = ax[i] + bx[j], nv = av[i] + bv[j];
		// a segment shorter than the rounding of the sum collapses to a point
		if (nx <= x.back() + 1e-15 * rel_scale(nx, x.back())) {
			v.back() = std::min(v.back(), nv);
			continue;
		}
		x.push_back(nx);
		v.push_back(nv);
	}
	return ConvexPL1D::make(std::move(x), std::move(v));
}

ConvexPL1D epi_mult_pl(double lambda, const ConvexPL1D &psi)
{
	if (!(lambda > 0.0))
		throw std::invalid_argument("epi_mult: lambda must be positive");
	std::vector<double> x = psi.x(), v = psi.v();
	for (auto &t : x)
		t *= lambda;
	for (auto &t : v)
		t *= lambda;
	return ConvexPL1D::make(std::move(x), std::move(v), psi.extent());
}

ConvexPL1D scale_pl(double c, const ConvexPL1D &psi)
{
	if (!(c > 0.0))
		throw std::invalid_argument("scale: factor must be positive");
	std::vector<double> v = psi.v();
	for (auto &t : v)
		t *= c;
	return ConvexPL1D::make(psi.x(), std::move(v), psi.extent());
}

ConvexPL1D reflect_pl(const ConvexPL1D &psi)
{
	std::vector<double> x(psi.x().rbegin(), psi.x().rend());
	std::vector<double> v(psi.v().rbegin(), psi.v().rend());
	for (auto &t : x)
		t = -t;
	return ConvexPL1D::make(std::move(x), std::move(v), psi.extent());
}

ConvexPL1D shift_value_pl(const ConvexPL1D &psi, double c)
{
	std::vector<double> v = psi.v();
	for (auto &t : v)
		t += c;
	return ConvexPL1D::make(psi.x(), std::move(v), psi.extent());
}

ConvexPL1D translate_pl(const ConvexPL1D &psi, double c)
{
	std::vector<double> x = psi.x();
	for (auto &t : x)
		t += c;
	return ConvexPL1D::make(std::move(x), psi.v(), psi.extent());
}

namespace
{

std::vector<double> merged_points(const ConvexPL1D &a, const ConvexPL1D &b, double lo, double hi)
{
	std::vector<double> p{lo, hi};
	for (double t : a.x())
		if (t > lo && t < hi)
			p.push_back(t);
	for (double t : b.x())
		if (t > lo && t < hi)
			p.push_back(t);
	std::sort(p.begin(), p.end());
	// near-coincident breakpoints of the two summands are one kink
	double tol = 1e-12 * rel_scale(lo, hi);
	std::vector<double> q{p.front()};
	for (std::size_t i = 1; i < p.size(); ++i) {
		if (p[i] - q.back() > tol)
			q.push_back(p[i]);
		else if (p[i] == hi)
			q.back() = hi;
	}
	return q;
}

} // namespace

ConvexPL1D add_pl(const ConvexPL1D &a, const ConvexPL1D &b)
{
	double lo, hi;
	Extent ext;
	if (!a.bounded() && !b.bounded()) {
		lo = std::min(a.lo(), b.lo());
		hi = std::max(a.hi(), b.hi());
		ext = Extent::Windowed;
	} else {
		lo = -kInf;
		hi = kInf;
		if (a.bounded()) {
			lo = std::max(lo, a.lo());
			hi = std::min(hi, a.hi());
		}
		if (b.bounded()) {
			lo = std::max(lo, b.lo());
			hi = std::min(hi, b.hi());
		}
		if (lo > hi)
			throw std::invalid_argument("add: domains do not intersect");
		ext = Extent::Bounded;
	}
	std::vector<double> x = merged_points(a, b, lo, hi);
	std::vector<double> v;
	for (double t : x)
		v.push_back(a(t) + b(t));
	return ConvexPL1D::make(std::move(x), std::move(v), ext);
}

ConvexPL1D restrict_pl(const ConvexPL1D &psi, double a, double b)
{
	double lo = psi.bounded() ? std::max(a, psi.lo()) : a;
	double hi = psi.bounded() ? std::min(b, psi.hi()) : b;
	if (!(lo <= hi))
		throw std::invalid_argument("restrict: window misses the domain");
	std::vector<double> x{lo};
	for (double t : psi.x())
		if (t > lo && t < hi)
			x.push_back(t);
	if (hi > lo)
		x.push_back(hi);
	std::vector<double> v;
	for (double t : x)
		v.push_back(psi(t));
	return ConvexPL1D::make(std::move(x), std::move(v));
}

double sup_distance(const ConvexPL1D &a, const ConvexPL1D &b, double lo, double hi)
{
	double d = 0.0;
	for (double t : merged_points(a, b, lo, hi)) {
		double fa = a(t), fb = b(t);
		if (is_inf(fa) && is_inf(fb))
			continue;
		if (is_inf(fa) || is_inf(fb))
			return kInf;
		d = std::max(d, std::abs(fa - fb));
	}
	return d;
}

} // namespace alphasym
