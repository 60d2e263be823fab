#pragma once

#include <span>
#include <vector>

namespace alphasym
{

/// Lower convex hull of the finite samples (x_i, f_i), x increasing. Indices of the
/// hull vertices are returned; +inf samples are skipped.
std::vector<int> lower_hull_indices(std::span<const double> x, std::span<const double> f);

/// Linear-time discrete Legendre transform on the line:
///   out[k] = max_i s[k] * x[i] - f[i]
/// with x and s increasing. Samples equal to +inf are ignored; an all-infinite
/// input yields -inf everywhere. When argmax is non-null it receives the
/// maximizing index (smallest index on exact ties).
void llt_1d(std::span<const double> x, std::span<const double> f, std::span<const double> s, std::span<double> out,
	    std::span<int> argmax = {});

/// O(n m) reference for llt_1d.
void brute_conjugate_1d(std::span<const double> x, std::span<const double> f, std::span<const double> s,
			std::span<double> out, std::span<int> argmax = {});

/// Max over a precomputed lower hull, evaluated at one slope by binary search.
class HullMax
{
public:
	HullMax() = default;
	HullMax(std::span<const double> x, std::span<const double> f);
	bool empty() const { return hx_.empty(); }
	/// max_i s * x_i - f_i
	double operator()(double s) const;

private:
	std::vector<double> hx_;
	std::vector<double> hf_;
	std::vector<double> slope_; // slope_[k] between hull vertex k and k+1
};

} // namespace alphasym
