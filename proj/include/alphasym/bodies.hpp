#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphasym
{

struct Vec2
{
	double x = 0.0;
	double y = 0.0;

	friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
	friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
	friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
	friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a);

/// Raised when a Minkowski operation or a constructor would produce a body with
/// empty interior (a segment or a point in the plane).
class DegenerateBodyError : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// Unit normal of a hyperplane through the origin. In one dimension the only
/// hyperplane is {0} and u is +1 or -1.
class Direction
{
public:
	static Direction line(double sign);
	static Direction angle(double theta);
	static Direction unit(Vec2 u);
	static Direction axis(int i); // e1 or e2

	int dim() const { return dim_; }
	Vec2 u() const { return u_; }
	double sign() const { return u_.x; } // dim 1 only
	double theta() const;

	/// x - 2<x,u>u
	Vec2 reflect(Vec2 x) const;
	double reflect(double x) const { return -x; }

	/// True when u is +-e1 or +-e2 up to 1e-15.
	bool axis_aligned() const;

private:
	Direction(int dim, Vec2 u)
		: dim_(dim)
		, u_(u)
	{
	}
	int dim_;
	Vec2 u_;
};

/// Closed interval (dim 1) or strictly convex counterclockwise polygon (dim 2).
/// Polygons are stored starting from the lexicographically smallest vertex.
class ConvexBody
{
public:
	static ConvexBody interval(double a, double b);
	/// Vertices of a convex polygon in either orientation. Duplicate and collinear
	/// vertices are dropped; a nonconvex or degenerate input throws.
	static ConvexBody polygon(std::vector<Vec2> vertices);
	/// Convex hull of a point cloud (monotone chain). Throws DegenerateBodyError when
	/// the hull has empty interior.
	static ConvexBody hull(std::span<const Vec2> points);
	static ConvexBody box(double a1, double b1, double a2, double b2);
	/// Regular k-gon inscribed in the disk of radius r centred at the origin.
	static ConvexBody regular_polygon(int k, double r, double phase = 0.0);

	int dim() const { return dim_; }
	double lo() const { return lo_; }
	double hi() const { return hi_; }
	const std::vector<Vec2> &vertices() const { return vertices_; }

	bool contains(Vec2 p, double tol = 1e-12) const;
	bool contains(double x, double tol = 1e-12) const;
	/// Euclidean distance from p to the body (0 inside).
	double distance(Vec2 p) const;
	double area() const;	  // dim 2; length in dim 1
	double perimeter() const; // dim 2

private:
	ConvexBody() = default;
	int dim_ = 1;
	double lo_ = 0.0;
	double hi_ = 0.0;
	std::vector<Vec2> vertices_;
};

/// a*A + b*B. Interval endpoints in dim 1; rotating-edge merge of the scaled
/// polygons in dim 2.
ConvexBody minkowski_sum(const ConvexBody &A, const ConvexBody &B, double a, double b);

ConvexBody reflect_body(const ConvexBody &A, const Direction &u);

double support_body(const ConvexBody &A, const Direction &u);
double support_body(const ConvexBody &A, Vec2 dir);

/// w(K) = 2 * integral of h_K over the sphere: b - a in dim 1, perimeter / pi in dim 2.
double mean_width_body(const ConvexBody &A);

/// 1/2 A + 1/2 R_u A.
ConvexBody minkowski_symmetral_body(const ConvexBody &A, const Direction &u);

/// Hausdorff distance. For polygons: max of vertex-to-body distances both ways.
double hausdorff(const ConvexBody &A, const ConvexBody &B);

} // namespace alphasym
