#include "alphasym/legendre.hpp"

#include "alphasym/extended.hpp"

#include <algorithm>
#include <stdexcept>

namespace alphasym
{

std::vector<int> lower_hull_indices(std::span<const double> x, std::span<const double> f)
{
	std::vector<int> h;
	for (int i = 0; i < static_cast<int>(x.size()); ++i) {
		if (is_inf(f[i]))
			continue;
		while (h.size() >= 2) {
			int a = h[h.size() - 2], b = h.back();
			// pop b when it lies on or above the chord a -> i
			double lhs = (f[b] - f[a]) * (x[i] - x[a]);
			double rhs = (f[i] - f[a]) * (x[b] - x[a]);
			if (lhs >= rhs)
				h.pop_back();
			else
				break;
		}
		h.push_back(i);
	}
	return h;
}

void llt_1d(std::span<const double> x, std::span<const double> f, std::span<const double> s, std::span<double> out,
	    std::span<int> argmax)
{
	if (x.size() != f.size() || s.size() != out.size())
		throw std::invalid_argument("llt: size mismatch");
	std::vector<int> h = lower_hull_indices(x, f);
	if (h.empty()) {
		std::fill(out.begin(), out.end(), -kInf);
		if (!argmax.empty())
			std::fill(argmax.begin(), argmax.end(), -1);
		return;
	}
	std::size_t k = 0;
	for (std::size_t q = 0; q < s.size(); ++q) {
		// advance while the next hull vertex is strictly better
		while (k + 1 < h.size()) {
			int a = h[k], b = h[k + 1];
			if (s[q] * x[b] - f[b] > s[q] * x[a] - f[a])
				++k;
			else
				break;
		}
		out[q] = s[q] * x[h[k]] - f[h[k]];
		if (!argmax.empty())
			argmax[q] = h[k];
	}
}

void brute_conjugate_1d(std::span<const double> x, std::span<const double> f, std::span<const double> s,
			std::span<double> out, std::span<int> argmax)
{
	for (std::size_t q = 0; q < s.size(); ++q) {
		double best = -kInf;
		int bi = -1;
		for (std::size_t i = 0; i < x.size(); ++i) {
			if (is_inf(f[i]))
				continue;
			double val = s[q] * x[i] - f[i];
			if (val > best) {
				best = val;
				bi = static_cast<int>(i);
			}
		}
		out[q] = best;
		if (!argmax.empty())
			argmax[q] = bi;
	}
}

HullMax::HullMax(std::span<const double> x, std::span<const double> f)
{
	for (int i : lower_hull_indices(x, f)) {
		hx_.push_back(x[i]);
		hf_.push_back(f[i]);
	}
	for (std::size_t k = 0; k + 1 < hx_.size(); ++k)
		slope_.push_back((hf_[k + 1] - hf_[k]) / (hx_[k + 1] - hx_[k]));
}

double HullMax::operator()(double s) const
{
	if (hx_.empty())
		return -kInf;
	// first hull edge whose slope exceeds s; its left vertex is the maximizer
	std::size_t k = static_cast<std::size_t>(std::upper_bound(slope_.begin(), slope_.end(), s) - slope_.begin());
	double best = s * hx_[k] - hf_[k];
	// guard against rounding in the slope table
	if (k > 0)
		best = std::max(best, s * hx_[k - 1] - hf_[k - 1]);
	if (k + 1 < hx_.size())
		best = std::max(best, s * hx_[k + 1] - hf_[k + 1]);
	return best;
}

} // namespace alphasym
