#include "alphasym/linearize.hpp"

#include "alphasym/extended.hpp"
#include "alphasym/widths.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace alphasym
{

namespace
{

void require_log_concave(const AlphaFunction &f, const char *what)
{
	if (f.layered() || f.alpha() != 0.0)
		throw std::invalid_argument(std::string(what) + ": needs a log-concave function (alpha = 0)");
}

ConvexPL1D hull_1d(const BreakPointSet &X)
{
	std::vector<std::pair<double, double>> pts;
	for (std::size_t i = 0; i < X.size(); ++i)
		pts.emplace_back(X.x[i].x, X.y[i]);
	return ConvexPL1D::lower_hull(std::move(pts));
}

void check_shape(const BreakPointSet &X, int dim)
{
	if (X.size() == 0)
		throw std::invalid_argument("break points: empty set");
	if (X.x.size() != X.y.size())
		throw std::invalid_argument("break points: abscissa and height counts differ");
	if (X.dim != dim)
		throw std::invalid_argument("break points: dimension does not match the host function");
}

/// {psi <= c} for a bounded convex PL psi.
std::pair<double, double> sublevel(const ConvexPL1D &psi, double c)
{
	const auto &x = psi.x();
	const auto &v = psi.v();
	std::size_t k = std::min_element(v.begin(), v.end()) - v.begin();
	double lo = x[k], hi = x[k];
	for (std::size_t i = k; i-- > 0;) {
		if (v[i] > c) {
			lo = x[i + 1] - (c - v[i + 1]) / (v[i] - v[i + 1]) * (x[i + 1] - x[i]);
			break;
		}
		lo = x[i];
	}
	for (std::size_t i = k + 1; i < x.size(); ++i) {
		if (v[i] > c) {
			hi = x[i - 1] + (c - v[i - 1]) / (v[i] - v[i - 1]) * (x[i] - x[i - 1]);
			break;
		}
		hi = x[i];
	}
	return {lo, hi};
}

} // namespace

BreakPointSet BreakPointSet::line(std::vector<double> xs, std::vector<double> ys)
{
	BreakPointSet X;
	X.dim = 1;
	for (double t : xs)
		X.x.push_back({t, 0.0});
	X.y = std::move(ys);
	return X;
}

BreakPointSet BreakPointSet::plane(std::vector<Vec2> xs, std::vector<double> ys)
{
	BreakPointSet X;
	X.dim = 2;
	X.x = std::move(xs);
	X.y = std::move(ys);
	return X;
}

void require_break_point_count(const BreakPointSet &X)
{
	if (X.size() < static_cast<std::size_t>(X.dim + 2))
		throw std::invalid_argument("break points: need at least " + std::to_string(X.dim + 2) + " points in dimension " +
					    std::to_string(X.dim) + ", got " + std::to_string(X.size()));
}

ConvexPL1D inner_linearization(const ConvexPL1D &psi, const BreakPointSet &X, double tol)
{
	check_shape(X, 1);
	for (std::size_t i = 0; i < X.size(); ++i)
		if (!(X.y[i] >= psi(X.x[i].x) - tol))
			throw std::invalid_argument("inner linearization: break point " + std::to_string(i) +
						    " lies below the graph");
	return hull_1d(X);
}

InnerLinearization2D::InnerLinearization2D(const std::function<double(Vec2)> &psi, BreakPointSet X, double tol)
	: X_(std::move(X))
	, tol_(tol)
{
	check_shape(X_, 2);
	if (X_.size() > 16)
		throw std::invalid_argument("inner linearization: the 2D evaluator takes at most 16 points");
	for (std::size_t i = 0; i < X_.size(); ++i)
		if (!(X_.y[i] >= psi(X_.x[i]) - tol))
			throw std::invalid_argument("inner linearization: break point " + std::to_string(i) +
						    " lies below the graph");
}

double InnerLinearization2D::operator()(Vec2 p) const
{
	const auto &x = X_.x;
	const auto &y = X_.y;
	std::size_t n = x.size();
	double scale = 1.0;
	for (Vec2 q : x)
		scale = std::max({scale, std::abs(q.x), std::abs(q.y)});
	double eps = 1e-12 * scale;
	double best = kInf;
	for (std::size_t i = 0; i < n; ++i)
		if (norm(p - x[i]) <= eps)
			best = std::min(best, y[i]);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			Vec2 d = x[j] - x[i];
			double len2 = dot(d, d);
			if (len2 <= eps * eps)
				continue;
			if (std::abs(cross(d, p - x[i])) > eps * std::sqrt(len2))
				continue;
			double t = dot(p - x[i], d) / len2;
			if (t < -1e-12 || t > 1.0 + 1e-12)
				continue;
			t = std::clamp(t, 0.0, 1.0);
			best = std::min(best, (1.0 - t) * y[i] + t * y[j]);
		}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = j + 1; k < n; ++k) {
				double det = cross(x[j] - x[i], x[k] - x[i]);
				if (std::abs(det) <= eps * eps)
					continue;
				double lj = cross(p - x[i], x[k] - x[i]) / det;
				double lk = cross(x[j] - x[i], p - x[i]) / det;
				double li = 1.0 - lj - lk;
				if (li < -1e-12 || lj < -1e-12 || lk < -1e-12)
					continue;
				best = std::min(best, li * y[i] + lj * y[j] + lk * y[k]);
			}
	return best;
}

GridConvex2D InnerLinearization2D::sample(const Box &box, int n1, int n2, Exec exec) const
{
	GridConvex2D out(box, n1, n2, kInf);
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
	for (int j = 0; j < n2; ++j)
		for (int i = 0; i < n1; ++i)
			out.at(i, j) = (*this)(out.node(i, j));
	return out;
}

AlphaFunction inner_log_linearization(const AlphaFunction &f, const BreakPointSet &Y, double tol)
{
	require_log_concave(f, "inner log-linearization");
	check_shape(Y, f.dim());
	BreakPointSet X = Y;
	for (std::size_t i = 0; i < Y.size(); ++i) {
		double fx = f.dim() == 1 ? f(Y.x[i].x) : f(Y.x[i]);
		if (!(Y.y[i] > 0.0))
			throw std::invalid_argument("inner log-linearization: height " + std::to_string(i) + " is not positive");
		if (Y.y[i] > fx + tol)
			throw std::invalid_argument("inner log-linearization: point " + std::to_string(i) +
						    " lies above the graph of f");
		X.y[i] = -std::log(Y.y[i]);
	}
	if (f.dim() == 1)
		return AlphaFunction::with_base(0.0, hull_1d(X));
	const GridConvex2D &b = f.base2();
	InnerLinearization2D p([](Vec2) { return -kInf; }, X);
	return AlphaFunction::with_base(0.0, p.sample(b.box(), b.n1(), b.n2()));
}

SplitResult split_linearization(const BreakPointSet &P, const AlphaFunction &f, const AlphaFunction &g, int checks,
				double tol)
{
	require_log_concave(f, "split");
	require_log_concave(g, "split");
	if (f.dim() != 1 || g.dim() != 1)
		throw std::invalid_argument("split: one-dimensional functions only");
	check_shape(P, 1);
	const ConvexPL1D &phi = f.base1();
	const ConvexPL1D &psi = g.base1();
	SplitResult r;
	r.xf.dim = r.xg.dim = 1;
	for (std::size_t i = 0; i < P.size(); ++i) {
		double v = P.x[i].x, t = P.y[i];
		// phi(a) + psi(v - a) is convex PL in a with kinks at phi's breakpoints and v - psi's
		std::vector<double> cand(phi.x());
		for (double z : psi.x())
			cand.push_back(v - z);
		double best = kInf, arg = 0.0;
		for (double a : cand) {
			double val = ext_add(phi(a), psi(v - a));
			if (val < best) {
				best = val;
				arg = a;
			}
		}
		if (!(best <= t + tol))
			throw std::invalid_argument("split: break point " + std::to_string(i) +
						    " has no decomposition into epi(base f) + epi(base g)");
		double rf = phi(arg);
		r.xf.x.push_back({arg, 0.0});
		r.xf.y.push_back(rf);
		r.xg.x.push_back({v - arg, 0.0});
		r.xg.y.push_back(t - rf);
	}
	r.pf = hull_1d(r.xf);
	r.pg = hull_1d(r.xg);
	ConvexPL1D p = hull_1d(P);
	ConvexPL1D sum = inf_conv_pl(r.pf, r.pg);
	r.worst_gap = -kInf;
	for (int k = 0; k < checks; ++k) {
		double x = checks == 1 ? p.lo() : p.lo() + (p.hi() - p.lo()) * k / (checks - 1);
		r.worst_gap = std::max(r.worst_gap, sum(x) - p(x));
	}
	if (r.worst_gap > tol * (1.0 + std::abs(p.min_value())))
		throw std::runtime_error("split: p >= pf box pg fails by " + std::to_string(r.worst_gap));
	return r;
}

std::vector<double> gn_candidates(const AlphaFunction &f, int M)
{
	require_log_concave(f, "G_N");
	if (f.dim() != 1)
		throw std::invalid_argument("G_N: one-dimensional functions only");
	if (M < 2)
		throw std::invalid_argument("G_N: candidate grid needs at least two points");
	const ConvexPL1D &psi = f.base1();
	auto [lo, hi] = sublevel(psi, psi.min_value() + std::log(1e8));
	std::vector<double> c(M);
	for (int k = 0; k < M; ++k)
		c[k] = lo + (hi - lo) * k / (M - 1);
	c.back() = hi;
	return c;
}

double gn_objective(const AlphaFunction &f, const std::vector<double> &x)
{
	const ConvexPL1D &psi = f.base1();
	std::vector<std::pair<double, double>> pts;
	for (double t : x)
		pts.emplace_back(t, psi(t));
	ConvexPL1D p = ConvexPL1D::lower_hull(std::move(pts));
	return 2.0 * gaussian_integral_pl(conjugate_pl(p));
}

GNResult best_G_N(const AlphaFunction &f, int N, GNMode mode, int M)
{
	require_log_concave(f, "G_N");
	if (N < f.dim() + 2)
		throw std::invalid_argument("G_N: need N >= " + std::to_string(f.dim() + 2));
	if (N > M)
		throw std::invalid_argument("G_N: N exceeds the candidate count");
	GNResult res;
	res.candidates = gn_candidates(f, M);
	const auto &c = res.candidates;
	auto pick = [&](const std::vector<int> &idx) {
		std::vector<double> x;
		for (int i : idx)
			x.push_back(c[i]);
		return x;
	};
	std::vector<int> best_idx;
	if (mode == GNMode::Exhaustive) {
		if (M > 40 || N > 5)
			throw std::invalid_argument("G_N: exhaustive search needs M <= 40 and N <= 5");
		std::vector<std::vector<int>> combos;
		std::vector<int> idx(N);
		for (int i = 0; i < N; ++i)
			idx[i] = i;
		while (true) {
			combos.push_back(idx);
			int k = N - 1;
			while (k >= 0 && idx[k] == M - N + k)
				--k;
			if (k < 0)
				break;
			++idx[k];
			for (int j = k + 1; j < N; ++j)
				idx[j] = idx[j - 1] + 1;
		}
		std::vector<double> val(combos.size());
#pragma omp parallel for schedule(static)
		for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(combos.size()); ++q)
			val[q] = gn_objective(f, pick(combos[q]));
		std::size_t arg = 0;
		for (std::size_t q = 1; q < val.size(); ++q)
			if (val[q] > val[arg])
				arg = q;
		best_idx = combos[arg];
		res.value = val[arg];
		res.evaluated = combos.size();
	} else {
		std::vector<char> used(M, 0);
		double best = -kInf;
		for (int k = 0; k < N; ++k) {
			int arg = -1;
			double bv = -kInf;
			for (int i = 0; i < M; ++i) {
				if (used[i])
					continue;
				std::vector<int> trial = best_idx;
				trial.push_back(i);
				std::sort(trial.begin(), trial.end());
				double v = gn_objective(f, pick(trial));
				++res.evaluated;
				if (v > bv) {
					bv = v;
					arg = i;
				}
			}
			used[arg] = 1;
			best_idx.push_back(arg);
			std::sort(best_idx.begin(), best_idx.end());
			best = bv;
		}
		for (int round = 0; round < 100; ++round) {
			bool improved = false;
			for (int k = 0; k < N; ++k)
				for (int i = 0; i < M; ++i) {
					if (used[i])
						continue;
					std::vector<int> trial = best_idx;
					trial[k] = i;
					std::sort(trial.begin(), trial.end());
					double v = gn_objective(f, pick(trial));
					++res.evaluated;
					if (v > best + 1e-15 * std::abs(best)) {
						used[best_idx[k]] = 0;
						used[i] = 1;
						best_idx = trial;
						best = v;
						improved = true;
					}
				}
			if (!improved)
				break;
		}
		res.value = best;
	}
	res.x = pick(best_idx);
	for (double t : res.x)
		res.y.push_back(f(t));
	return res;
}

double mean_width_deficit(const AlphaFunction &f, const AlphaFunction &q, double tol)
{
	require_log_concave(f, "deficit");
	require_log_concave(q, "deficit");
	if (f.dim() != q.dim())
		throw std::invalid_argument("deficit: dimensions differ");
	if (f.dim() == 1) {
		const ConvexPL1D &b = q.base1();
		std::vector<double> pts(b.x());
		pts.insert(pts.end(), f.base1().x().begin(), f.base1().x().end());
		for (int k = 0; k <= 2048; ++k)
			pts.push_back(b.lo() + (b.hi() - b.lo()) * k / 2048);
		for (double x : pts)
			if (q(x) > f(x) + tol)
				throw std::invalid_argument("deficit: q exceeds f at x = " + std::to_string(x));
	} else {
		const GridConvex2D &b = q.base2();
		for (int j = 0; j < b.n2(); ++j)
			for (int i = 0; i < b.n1(); ++i) {
				Vec2 x = b.node(i, j);
				if (from_base(b.at(i, j), 0.0) > f(x) + tol)
					throw std::invalid_argument("deficit: q exceeds f at (" + std::to_string(x.x) + ", " +
								    std::to_string(x.y) + ")");
			}
	}
	return mean_width(f, 0.0).value - mean_width(q, 0.0).value;
}

} // namespace alphasym
