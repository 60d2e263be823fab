#include "alphasym/polar.hpp"

#include "alphasym/extended.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace alphasym
{

namespace
{
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PolarField::PolarField(double radius, int nr, int nk, std::vector<double> values)
	: R_(radius)
	, nr_(nr)
	, nk_(nk)
	, v_(std::move(values))
{
	if (nr < 2 || nk < 4 || !(radius > 0.0))
		throw std::invalid_argument("polar field: need nr >= 2, nk >= 4 and a positive radius");
	if (v_.size() != static_cast<std::size_t>(nr) * nk)
		throw std::invalid_argument("polar field: value count does not match mesh");
}

PolarField PolarField::from_function(const std::function<double(Vec2)> &fn, double radius, int nr, int nk)
{
	std::vector<double> v(static_cast<std::size_t>(nr) * nk);
	PolarField shape(radius, nr, nk, v);
	for (int a = 0; a < nr; ++a)
		for (int k = 0; k < nk; ++k) {
			double r = shape.r(a), t = shape.theta(k);
			v[static_cast<std::size_t>(a) * nk + k] = fn({r * std::cos(t), r * std::sin(t)});
		}
	return PolarField(radius, nr, nk, std::move(v));
}

double PolarField::theta(int k) const { return kTwoPi * k / nk_; }

double PolarField::operator()(Vec2 s) const
{
	double r = norm(s);
	double u = r / R_ * (nr_ - 1);
	if (u > nr_ - 1 + 1e-9)
		return kInf;
	u = std::min(u, double(nr_ - 1));
	int a = std::min(static_cast<int>(u), nr_ - 2);
	double fa = u - a;
	double t = std::atan2(s.y, s.x);
	if (t < 0.0)
		t += kTwoPi;
	double q = t / kTwoPi * nk_;
	int k = static_cast<int>(q);
	double fk = q - k;
	k %= nk_;
	int k1 = (k + 1) % nk_;
	double lo = (1 - fk) * at(a, k) + fk * at(a, k1);
	double hi = (1 - fk) * at(a + 1, k) + fk * at(a + 1, k1);
	return (1 - fa) * lo + fa * hi;
}

AngleFlip AngleFlip::for_direction(const Direction &u, int nk)
{
	// R_u maps direction theta to c - theta with c = 2 phi + pi
	double c = 2.0 * u.theta() + std::numbers::pi;
	double q = c / kTwoPi * nk;
	double fl = std::floor(q);
	double w = q - fl;
	if (w > 1.0 - 1e-12) {
		fl += 1.0;
		w = 0.0;
	} else if (w < 1e-12)
		w = 0.0;
	int k0 = static_cast<int>(std::fmod(std::fmod(fl, nk) + nk, nk));
	return {k0, w};
}

namespace
{

// out_k = 1/2 in_k + 1/2 [ (1-w) in_{k0-k} + w in_{k0-k+1} ]
void flip_average(const double *in, double *out, int nk, AngleFlip f)
{
	for (int k = 0; k < nk; ++k) {
		int m = ((f.k0 - k) % nk + nk) % nk;
		double refl = in[m];
		if (f.w != 0.0)
			refl = (1.0 - f.w) * in[m] + f.w * in[(m + 1) % nk];
		out[k] = 0.5 * in[k] + 0.5 * refl;
	}
}

} // namespace

PolarField PolarField::reflect_average(const Direction &u) const
{
	AngleFlip f = AngleFlip::for_direction(u, nk_);
	std::vector<double> out(v_.size());
	for (int a = 0; a < nr_; ++a)
		flip_average(v_.data() + static_cast<std::size_t>(a) * nk_, out.data() + static_cast<std::size_t>(a) * nk_, nk_, f);
	return PolarField(R_, nr_, nk_, std::move(out));
}

PolarField PolarField::angular_mean(int m) const
{
	if (m == 0)
		m = nk_;
	if (nk_ % m != 0)
		throw std::invalid_argument("angular_mean: sample count must divide the angular resolution");
	int step = nk_ / m;
	std::vector<double> out(v_.size());
	for (int a = 0; a < nr_; ++a) {
		std::vector<double> ring;
		for (int k = 0; k < nk_; k += step)
			ring.push_back(at(a, k));
		double mean = pairwise_sum(ring) / m;
		std::fill(out.begin() + static_cast<std::ptrdiff_t>(a) * nk_, out.begin() + static_cast<std::ptrdiff_t>(a + 1) * nk_, mean);
	}
	return PolarField(R_, nr_, nk_, std::move(out));
}

double PolarField::max_oscillation() const
{
	double m = 0.0;
	for (int a = 0; a < nr_; ++a) {
		auto b = v_.begin() + static_cast<std::ptrdiff_t>(a) * nk_;
		auto [lo, hi] = std::minmax_element(b, b + nk_);
		m = std::max(m, *hi - *lo);
	}
	return m;
}

PolarSupport PolarSupport::of_points(std::span<const Vec2> pts, int nk)
{
	std::vector<Vec2> h = hull_points(pts);
	if (h.empty())
		throw std::invalid_argument("polar support: empty point set");
	PolarSupport s;
	s.h_.resize(nk);
	for (int k = 0; k < nk; ++k) {
		double t = kTwoPi * k / nk;
		Vec2 e{std::cos(t), std::sin(t)};
		double m = -kInf;
		for (Vec2 p : h)
			m = std::max(m, dot(p, e));
		s.h_[k] = m;
	}
	s.build_table();
	return s;
}

void PolarSupport::build_table()
{
	int nk = this->nk();
	cos_.resize(nk);
	sin_.resize(nk);
	for (int k = 0; k < nk; ++k) {
		cos_[k] = std::cos(kTwoPi * k / nk);
		sin_[k] = std::sin(kTwoPi * k / nk);
	}
}

PolarSupport PolarSupport::disk(double radius, int nk)
{
	PolarSupport s;
	s.h_.assign(nk, radius);
	s.build_table();
	return s;
}

double PolarSupport::mean() const { return pairwise_sum(h_) / static_cast<double>(h_.size()); }

PolarSupport PolarSupport::reflect_average(const Direction &u) const
{
	PolarSupport s;
	s.h_.resize(h_.size());
	flip_average(h_.data(), s.h_.data(), nk(), AngleFlip::for_direction(u, nk()));
	s.cos_ = cos_;
	s.sin_ = sin_;
	return s;
}

bool PolarSupport::contains(Vec2 p, double tol) const
{
	for (int k = 0; k < nk(); ++k)
		if (p.x * cos_[k] + p.y * sin_[k] > h_[k] + tol)
			return false;
	return true;
}

} // namespace alphasym
