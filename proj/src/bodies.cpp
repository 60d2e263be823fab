#include "alphasym/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace alphasym
{

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

namespace
{

constexpr double kCollinearTol = 1e-12;

// Signed turn of a->b->c, scaled so that the test is relative to edge lengths.
double relative_turn(Vec2 a, Vec2 b, Vec2 c)
{
	Vec2 e1 = b - a;
	Vec2 e2 = c - b;
	double scale = norm(e1) * norm(e2);
	if (scale == 0.0)
		return 0.0;
	return cross(e1, e2) / scale;
}

void rotate_to_lexmin(std::vector<Vec2> &v)
{
	auto it = std::min_element(v.begin(), v.end(), [](Vec2 a, Vec2 b) {
		return a.x < b.x || (a.x == b.x && a.y < b.y);
	});
	std::rotate(v.begin(), it, v.end());
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b)
{
	Vec2 ab = b - a;
	double len2 = dot(ab, ab);
	double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
	return norm(p - (a + t * ab));
}

} // namespace

Direction Direction::line(double sign)
{
	if (sign == 0.0 || !std::isfinite(sign))
		throw std::invalid_argument("direction: 1D direction needs sign +1 or -1");
	return Direction(1, {sign > 0 ? 1.0 : -1.0, 0.0});
}

Direction Direction::angle(double theta)
{
	return Direction(2, {std::cos(theta), std::sin(theta)});
}

Direction Direction::unit(Vec2 u)
{
	double n = norm(u);
	if (std::abs(n - 1.0) > 1e-12)
		throw std::invalid_argument("direction: vector is not a unit vector");
	return Direction(2, u);
}

Direction Direction::axis(int i)
{
	if (i == 0)
		return Direction(2, {1.0, 0.0});
	if (i == 1)
		return Direction(2, {0.0, 1.0});
	throw std::invalid_argument("direction: axis index must be 0 or 1");
}

double Direction::theta() const { return std::atan2(u_.y, u_.x); }

Vec2 Direction::reflect(Vec2 x) const
{
	double s = 2.0 * dot(x, u_);
	return {x.x - s * u_.x, x.y - s * u_.y};
}

bool Direction::axis_aligned() const
{
	return dim_ == 1 || std::abs(u_.x) < 1e-15 || std::abs(u_.y) < 1e-15;
}

ConvexBody ConvexBody::interval(double a, double b)
{
	if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b))
		throw std::invalid_argument("interval: need finite a <= b");
	ConvexBody K;
	K.dim_ = 1;
	K.lo_ = a;
	K.hi_ = b;
	return K;
}

ConvexBody ConvexBody::polygon(std::vector<Vec2> v)
{
	double scale = 0.0;
	for (Vec2 p : v) {
		if (!std::isfinite(p.x) || !std::isfinite(p.y))
			throw std::invalid_argument("polygon: non-finite vertex");
		scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
	}
	double dup_tol = 1e-12 * std::max(1.0, scale);

	std::vector<Vec2> w;
	for (Vec2 p : v)
		if (w.empty() || norm(p - w.back()) > dup_tol)
			w.push_back(p);
	while (w.size() > 1 && norm(w.front() - w.back()) <= dup_tol)
		w.pop_back();
	if (w.size() < 3)
		throw DegenerateBodyError("polygon: fewer than three distinct vertices");

	double area2 = 0.0;
	for (size_t i = 0; i < w.size(); ++i)
		area2 += cross(w[i], w[(i + 1) % w.size()]);
	if (area2 < 0.0)
		std::reverse(w.begin(), w.end());

	// drop collinear vertices until stable
	bool changed = true;
	while (changed && w.size() >= 3) {
		changed = false;
		for (size_t i = 0; i < w.size(); ++i) {
			size_t n = w.size();
			Vec2 a = w[(i + n - 1) % n], b = w[i], c = w[(i + 1) % n];
			if (std::abs(relative_turn(a, b, c)) <= kCollinearTol) {
				w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
				changed = true;
				break;
			}
		}
	}
	if (w.size() < 3)
		throw DegenerateBodyError("polygon: vertices are collinear");
	for (size_t i = 0; i < w.size(); ++i) {
		size_t n = w.size();
		if (relative_turn(w[(i + n - 1) % n], w[i], w[(i + 1) % n]) < 0.0)
			throw std::invalid_argument("polygon: vertex sequence is not convex");
	}
	// a convex turn sequence can still wind twice; check total turning
	double turning = 0.0;
	for (size_t i = 0; i < w.size(); ++i) {
		size_t n = w.size();
		Vec2 e1 = w[i] - w[(i + n - 1) % n];
		Vec2 e2 = w[(i + 1) % n] - w[i];
		turning += std::atan2(cross(e1, e2), dot(e1, e2));
	}
	if (turning > 2.0 * std::numbers::pi + 1e-6)
		throw std::invalid_argument("polygon: vertex sequence winds more than once");

	rotate_to_lexmin(w);
	ConvexBody K;
	K.dim_ = 2;
	K.vertices_ = std::move(w);
	return K;
}

ConvexBody ConvexBody::hull(std::span<const Vec2> points)
{
	std::vector<Vec2> p(points.begin(), points.end());
	std::sort(p.begin(), p.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
	p.erase(std::unique(p.begin(), p.end()), p.end());
	if (p.size() < 3)
		throw DegenerateBodyError("hull: fewer than three distinct points");

	std::vector<Vec2> h(2 * p.size());
	size_t k = 0;
	for (size_t i = 0; i < p.size(); ++i) {
		while (k >= 2 && cross(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= 0.0)
			--k;
		h[k++] = p[i];
	}
	for (size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
		while (k >= t && cross(h[k - 1] - h[k - 2], p[i - 1] - h[k - 2]) <= 0.0)
			--k;
		h[k++] = p[i - 1];
	}
	h.resize(k - 1);
	return polygon(std::move(h));
}

ConvexBody ConvexBody::box(double a1, double b1, double a2, double b2)
{
	return polygon({{a1, a2}, {b1, a2}, {b1, b2}, {a1, b2}});
}

ConvexBody ConvexBody::regular_polygon(int k, double r, double phase)
{
	if (k < 3 || !(r > 0.0))
		throw std::invalid_argument("regular_polygon: need k >= 3 and r > 0");
	std::vector<Vec2> v;
	for (int i = 0; i < k; ++i) {
		double t = phase + 2.0 * std::numbers::pi * i / k;
		v.push_back({r * std::cos(t), r * std::sin(t)});
	}
	return polygon(std::move(v));
}

bool ConvexBody::contains(double x, double tol) const
{
	return x >= lo_ - tol && x <= hi_ + tol;
}

bool ConvexBody::contains(Vec2 p, double tol) const
{
	if (dim_ == 1)
		return contains(p.x, tol);
	size_t n = vertices_.size();
	for (size_t i = 0; i < n; ++i) {
		Vec2 a = vertices_[i], b = vertices_[(i + 1) % n];
		Vec2 e = b - a;
		if (cross(e, p - a) < -tol * norm(e))
			return false;
	}
	return true;
}

double ConvexBody::distance(Vec2 p) const
{
	if (dim_ == 1) {
		if (p.x < lo_)
			return lo_ - p.x;
		if (p.x > hi_)
			return p.x - hi_;
		return 0.0;
	}
	if (contains(p, 0.0))
		return 0.0;
	double d = std::numeric_limits<double>::infinity();
	size_t n = vertices_.size();
	for (size_t i = 0; i < n; ++i)
		d = std::min(d, point_segment_distance(p, vertices_[i], vertices_[(i + 1) % n]));
	return d;
}

double ConvexBody::area() const
{
	if (dim_ == 1)
		return hi_ - lo_;
	double a = 0.0;
	size_t n = vertices_.size();
	for (size_t i = 0; i < n; ++i)
		a += cross(vertices_[i], vertices_[(i + 1) % n]);
	return 0.5 * a;
}

double ConvexBody::perimeter() const
{
	if (dim_ == 1)
		return 2.0 * (hi_ - lo_);
	double p = 0.0;
	size_t n = vertices_.size();
	for (size_t i = 0; i < n; ++i)
		p += norm(vertices_[(i + 1) % n] - vertices_[i]);
	return p;
}

ConvexBody minkowski_sum(const ConvexBody &A, const ConvexBody &B, double a, double b)
{
	if (A.dim() != B.dim())
		throw std::invalid_argument("minkowski_sum: dimension mismatch");
	if (!(a > 0.0) || !(b > 0.0))
		throw std::invalid_argument("minkowski_sum: scalars must be positive");
	if (A.dim() == 1)
		return ConvexBody::interval(a * A.lo() + b * B.lo(), a * A.hi() + b * B.hi());

	// Start both scaled polygons at their lowest (then leftmost) vertex and merge
	// the edge sequences by polar angle.
	auto prepare = [](const ConvexBody &K, double s) {
		std::vector<Vec2> v;
		for (Vec2 p : K.vertices())
			v.push_back(s * p);
		auto it = std::min_element(v.begin(), v.end(), [](Vec2 p, Vec2 q) {
			return p.y < q.y || (p.y == q.y && p.x < q.x);
		});
		std::rotate(v.begin(), it, v.end());
		return v;
	};
	std::vector<Vec2> P = prepare(A, a), Q = prepare(B, b);
	size_t n = P.size(), m = Q.size();
	std::vector<Vec2> out;
	out.reserve(n + m);
	size_t i = 0, j = 0;
	while (i < n || j < m) {
		out.push_back(P[i % n] + Q[j % m]);
		Vec2 ep = P[(i + 1) % n] - P[i % n];
		Vec2 eq = Q[(j + 1) % m] - Q[j % m];
		double c = cross(ep, eq);
		if (j >= m || (i < n && c > 0.0))
			++i;
		else if (i >= n || c < 0.0)
			++j;
		else {
			++i;
			++j;
		}
	}
	return ConvexBody::polygon(std::move(out));
}

ConvexBody reflect_body(const ConvexBody &A, const Direction &u)
{
	if (A.dim() != u.dim())
		throw std::invalid_argument("reflect_body: dimension mismatch");
	if (A.dim() == 1)
		return ConvexBody::interval(-A.hi(), -A.lo());
	std::vector<Vec2> v;
	for (Vec2 p : A.vertices())
		v.push_back(u.reflect(p));
	return ConvexBody::polygon(std::move(v));
}

double support_body(const ConvexBody &A, Vec2 dir)
{
	if (A.dim() == 1)
		return dir.x >= 0.0 ? dir.x * A.hi() : dir.x * A.lo();
	double h = -std::numeric_limits<double>::infinity();
	for (Vec2 p : A.vertices())
		h = std::max(h, dot(p, dir));
	return h;
}

double support_body(const ConvexBody &A, const Direction &u)
{
	return support_body(A, u.u());
}

double mean_width_body(const ConvexBody &A)
{
	if (A.dim() == 1)
		return A.hi() - A.lo();
	return A.perimeter() / std::numbers::pi;
}

ConvexBody minkowski_symmetral_body(const ConvexBody &A, const Direction &u)
{
	return minkowski_sum(A, reflect_body(A, u), 0.5, 0.5);
}

double hausdorff(const ConvexBody &A, const ConvexBody &B)
{
	if (A.dim() != B.dim())
		throw std::invalid_argument("hausdorff: dimension mismatch");
	if (A.dim() == 1)
		return std::max(std::abs(A.lo() - B.lo()), std::abs(A.hi() - B.hi()));
	double d = 0.0;
	for (Vec2 p : A.vertices())
		d = std::max(d, B.distance(p));
	for (Vec2 p : B.vertices())
		d = std::max(d, A.distance(p));
	return d;
}

} // namespace alphasym
