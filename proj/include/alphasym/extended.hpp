#pragma once

#include <cmath>
#include <limits>

namespace alphasym
{

/// +infinity marker for convex functions. All grid and PL code uses IEEE +inf and
/// routes arithmetic through the helpers below so that inf - inf never occurs.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double v) { return v == kInf; }
inline bool is_finite(double v) { return std::isfinite(v); }

/// inf + r = inf for any finite r.
inline double ext_add(double a, double b)
{
	if (is_inf(a) || is_inf(b))
		return kInf;
	return a + b;
}

/// c * v for c > 0, with c * inf = inf.
inline double ext_scale(double c, double v)
{
	return is_inf(v) ? kInf : c * v;
}

inline double ext_min(double a, double b) { return a < b ? a : b; }

/// Cap used by the epi-distance proxy: min(v, cap) with inf mapped to cap.
inline double capped(double v, double cap) { return v < cap ? v : cap; }

} // namespace alphasym
