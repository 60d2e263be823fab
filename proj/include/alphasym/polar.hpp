#pragma once

#include "alphasym/bodies.hpp"
#include "alphasym/grid2d.hpp"

#include <functional>
#include <vector>

namespace alphasym
{

/// Field on a polar mesh r_a = a R / (nr - 1), theta_k = 2 pi k / K. Used for
/// support functions on the dual side, where reflections act on the angle only.
class PolarField
{
public:
	PolarField() = default;
	PolarField(double radius, int nr, int nk, std::vector<double> values);
	static PolarField from_function(const std::function<double(Vec2)> &fn, double radius, int nr, int nk);

	double radius() const { return R_; }
	int nr() const { return nr_; }
	int nk() const { return nk_; }
	double r(int a) const { return R_ * a / (nr_ - 1); }
	double theta(int k) const;
	double at(int a, int k) const { return v_[static_cast<std::size_t>(a) * nk_ + k]; }
	const std::vector<double> &values() const { return v_; }

	/// Bilinear in (r, theta); +inf beyond the radius.
	double operator()(Vec2 s) const;

	/// s -> 1/2 h(s) + 1/2 h(R_u s), angle interpolated linearly. Exact (a
	/// permutation) when 2 phi + pi is a multiple of the angular step; the
	/// angular mean of every ring is preserved exactly.
	PolarField reflect_average(const Direction &u) const;

	/// Replace every ring by the mean of m equispaced samples (m divides nk), or
	/// of all samples when m = 0.
	PolarField angular_mean(int m = 0) const;

	/// Max over rings of the angular oscillation max - min.
	double max_oscillation() const;

private:
	double R_ = 0.0;
	int nr_ = 0, nk_ = 0;
	std::vector<double> v_;
};

/// Support function of a convex set sampled on nk angles.
class PolarSupport
{
public:
	PolarSupport() = default;
	static PolarSupport of_points(std::span<const Vec2> pts, int nk);
	static PolarSupport disk(double radius, int nk);

	int nk() const { return static_cast<int>(h_.size()); }
	const std::vector<double> &values() const { return h_; }
	double mean() const;
	PolarSupport reflect_average(const Direction &u) const;
	/// <p, e_k> <= h_k + tol for every sampled direction.
	bool contains(Vec2 p, double tol) const;

private:
	void build_table();
	std::vector<double> h_;
	std::vector<double> cos_, sin_;
};

/// Linear interpolation weights for the angle map theta_k -> c - theta_k on a
/// periodic grid of nk angles: value index (k0 - k) mod nk with weight 1 - w and
/// (k0 - k + 1) mod nk with weight w.
struct AngleFlip
{
	int k0 = 0;
	double w = 0.0;
	static AngleFlip for_direction(const Direction &u, int nk);
};

} // namespace alphasym
