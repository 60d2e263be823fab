#include "alphasym/widths.hpp"

#include "alphasym/extended.hpp"
#include "alphasym/parallel.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace alphasym
{

const char *quadrature_name(QuadratureSpec::Kind k)
{
	switch (k) {
	case QuadratureSpec::Kind::Auto:
		return "auto";
	case QuadratureSpec::Kind::GaussHermite:
		return "gauss-hermite";
	case QuadratureSpec::Kind::Trapezoid:
		return "trapezoid";
	case QuadratureSpec::Kind::MonteCarlo:
		return "monte-carlo";
	}
	return "?";
}

GaussRule gauss_hermite(int n)
{
	if (n < 1 || n > 200)
		throw std::invalid_argument("gauss_hermite: node count must be in [1, 200]");
	// Newton on the orthonormal Hermite recurrence (physicists' weight e^{-t^2})
	const double pim4 = 0.7511255444649425; // pi^{-1/4}
	std::vector<double> t(n), w(n);
	int m = (n + 1) / 2;
	double z = 0.0;
	for (int i = 0; i < m; ++i) {
		if (i == 0)
			z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
		else if (i == 1)
			z -= 1.14 * std::pow(double(n), 0.426) / z;
		else if (i == 2)
			z = 1.86 * z - 0.86 * t[0];
		else if (i == 3)
			z = 1.91 * z - 0.91 * t[1];
		else
			z = 2.0 * z - t[i - 2];
		double pp = 0.0;
		for (int it = 0; it < 100; ++it) {
			double p1 = pim4, p2 = 0.0;
			for (int j = 0; j < n; ++j) {
				double p3 = p2;
				p2 = p1;
				p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
			}
			pp = std::sqrt(2.0 * n) * p2;
			double z1 = z;
			z = z1 - p1 / pp;
			if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z)))
				break;
		}
		t[i] = z;
		t[n - 1 - i] = -z;
		w[i] = w[n - 1 - i] = 2.0 / (pp * pp);
	}
	GaussRule r;
	for (int i = n - 1; i >= 0; --i) {
		r.x.push_back(std::numbers::sqrt2 * t[i]);
		r.w.push_back(w[i] / std::sqrt(std::numbers::pi));
	}
	return r;
}

GaussRule gauss_legendre(int n)
{
	GaussRule r;
	r.x.resize(n);
	r.w.resize(n);
	for (int i = 0; i < (n + 1) / 2; ++i) {
		double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5)), pp = 0.0;
		for (int it = 0; it < 100; ++it) {
			double p1 = 1.0, p2 = 0.0;
			for (int j = 0; j < n; ++j) {
				double p3 = p2;
				p2 = p1;
				p1 = ((2.0 * j + 1) * z * p2 - j * p3) / (j + 1);
			}
			pp = n * (z * p1 - p2) / (z * z - 1.0);
			double z1 = z;
			z = z1 - p1 / pp;
			if (std::abs(z - z1) <= 1e-15)
				break;
		}
		r.x[i] = -z;
		r.x[n - 1 - i] = z;
		r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
	}
	return r;
}

namespace
{

double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

// Gaussian mass of [a, b], accurate in both tails
double gauss_mass(double a, double b)
{
	if (a >= 0.0)
		return 0.5 * (std::erfc(a / std::numbers::sqrt2) - std::erfc(b / std::numbers::sqrt2));
	if (b <= 0.0)
		return 0.5 * (std::erfc(-b / std::numbers::sqrt2) - std::erfc(-a / std::numbers::sqrt2));
	return 1.0 - 0.5 * std::erfc(-a / std::numbers::sqrt2) - 0.5 * std::erfc(b / std::numbers::sqrt2);
}

// integral over [a, b] of (c0 + c1 s) phi(s)
double affine_gauss(double c0, double c1, double a, double b)
{
	double pa = std::isinf(a) ? 0.0 : phi(a), pb = std::isinf(b) ? 0.0 : phi(b);
	return c0 * gauss_mass(a, b) + c1 * (pa - pb);
}

// integral of g over [a, b] by Gauss-Legendre on `chunks` equal pieces
template <class G> double gl_integral(const G &g, double a, double b, int chunks, const GaussRule &rule)
{
	std::vector<double> parts(chunks);
	double len = (b - a) / chunks;
	for (int c = 0; c < chunks; ++c) {
		double lo = a + c * len, mid = lo + 0.5 * len, s = 0.0;
		for (std::size_t q = 0; q < rule.x.size(); ++q)
			s += rule.w[q] * g(mid + 0.5 * len * rule.x[q]);
		parts[c] = 0.5 * len * s;
	}
	return pairwise_sum(parts);
}

double weight_alpha(double r2, double alpha)
{
	double y = 1.0 - 0.5 * alpha * r2;
	if (y <= 0.0)
		return 0.0;
	return std::pow(y, (1.0 - alpha) / alpha);
}

// radius beyond which the weight is below 1e-10 (alpha < 0)
double truncation_radius(double alpha)
{
	double e = (1.0 - alpha) / alpha; // negative
	double y = std::pow(1e-10, 1.0 / e);
	return std::sqrt(2.0 * (y - 1.0) / -alpha);
}

std::string point_text(Vec2 p)
{
	std::ostringstream os;
	os.precision(6);
	os << "(" << p.x << ", " << p.y << ")";
	return os.str();
}

double level_width(const LevelSet &s)
{
	if (s.empty())
		return 0.0;
	if (s.body)
		return s.body->dim() == 1 ? s.body->hi() - s.body->lo() : mean_width_body(*s.body);
	if (s.points.size() == 2)
		return 2.0 * norm(s.points[1] - s.points[0]) / std::numbers::pi;
	return 0.0;
}

// ring means of a polar field, linear in r between rings
std::vector<double> ring_means(const PolarField &F)
{
	std::vector<double> m(F.nr());
	for (int a = 0; a < F.nr(); ++a)
		m[a] = pairwise_sum(std::span<const double>(F.values().data() + static_cast<std::size_t>(a) * F.nk(), F.nk())) / F.nk();
	return m;
}

// integral over [0, rmax] of ring-mean(r) * g(r) dr
template <class G> double radial_integral(const PolarField &F, const std::vector<double> &m, double rmax, const G &g)
{
	static const GaussRule rule = gauss_legendre(8);
	double dr = F.radius() / (F.nr() - 1);
	std::vector<double> parts;
	for (int a = 0; a + 1 < F.nr(); ++a) {
		double r0 = a * dr, r1 = std::min((a + 1) * dr, rmax);
		if (r1 <= r0)
			break;
		double mid = 0.5 * (r0 + r1), half = 0.5 * (r1 - r0), s = 0.0;
		for (std::size_t q = 0; q < rule.x.size(); ++q) {
			double r = mid + half * rule.x[q];
			double w = (r - a * dr) / dr;
			s += rule.w[q] * ((1 - w) * m[a] + w * m[a + 1]) * g(r);
		}
		parts.push_back(half * s);
	}
	return pairwise_sum(parts);
}

} // namespace

double gaussian_integral_pl(const ConvexPL1D &h)
{
	const auto &x = h.x();
	const auto &v = h.v();
	std::size_t m = x.size();
	std::vector<double> parts;
	auto piece = [&](double a, double b, double xa, double va, double slope) {
		parts.push_back(affine_gauss(va - slope * xa, slope, a, b));
	};
	if (m == 1)
		return h.bounded() ? 0.0 : v[0];
	double inf = std::numeric_limits<double>::infinity();
	if (!h.bounded())
		piece(-inf, x[0], x[0], v[0], (v[1] - v[0]) / (x[1] - x[0]));
	for (std::size_t i = 0; i + 1 < m; ++i)
		piece(x[i], x[i + 1], x[i], v[i], (v[i + 1] - v[i]) / (x[i + 1] - x[i]));
	if (!h.bounded())
		piece(x[m - 1], inf, x[m - 1], v[m - 1], (v[m - 1] - v[m - 2]) / (x[m - 1] - x[m - 2]));
	return pairwise_sum(parts);
}

ConvexPL1D alpha_support(const AlphaFunction &f)
{
	if (f.layered())
		throw std::invalid_argument("alpha_support: alpha = -inf has no support function");
	return conjugate_pl(f.base1());
}

std::shared_ptr<const PolarDual> alpha_support2(const AlphaFunction &f, const PolarSpec &spec)
{
	if (f.layered())
		throw std::invalid_argument("alpha_support: alpha = -inf has no support function");
	return polar_dual(f, spec);
}

WidthResult mean_width_dual(const PolarDual &d, double alpha, const QuadratureSpec &quad)
{
	const PolarField &F = d.field;
	WidthResult res;
	if (alpha == 0.0) {
		auto kind = quad.kind == QuadratureSpec::Kind::Auto ? QuadratureSpec::Kind::GaussHermite : quad.kind;
		if (kind == QuadratureSpec::Kind::GaussHermite) {
			GaussRule g = gauss_hermite(quad.nodes);
			std::vector<double> parts;
			for (std::size_t j = 0; j < g.x.size(); ++j)
				for (std::size_t i = 0; i < g.x.size(); ++i) {
					Vec2 s{g.x[i], g.x[j]};
					double h = F(s);
					if (is_inf(h))
						throw std::domain_error("mean width: support function is +inf at quadrature point " + point_text(s));
					parts.push_back(g.w[i] * g.w[j] * h);
				}
			res.value = pairwise_sum(parts);
			return res;
		}
		if (kind == QuadratureSpec::Kind::Trapezoid) {
			std::vector<double> m = ring_means(F);
			res.value = radial_integral(F, m, F.radius(), [](double r) { return r * std::exp(-0.5 * r * r); });
			return res;
		}
		if (!quad.seed)
			throw std::invalid_argument("mean width: monte-carlo quadrature needs a seed");
		std::mt19937_64 rng(*quad.seed);
		std::normal_distribution<double> N(0.0, 1.0);
		std::vector<double> vals(quad.samples), sq(quad.samples);
		for (int q = 0; q < quad.samples; ++q) {
			double a = N(rng), b = N(rng);
			double h = F(Vec2{a, b});
			if (is_inf(h))
				throw std::domain_error("mean width: support function is +inf at sample " + point_text({a, b}));
			vals[q] = h;
		}
		double mean = pairwise_sum(vals) / quad.samples;
		for (int q = 0; q < quad.samples; ++q)
			sq[q] = (vals[q] - mean) * (vals[q] - mean);
		res.value = mean;
		res.std_error = std::sqrt(pairwise_sum(sq) / (quad.samples - 1) / quad.samples);
		return res;
	}
	if (is_inf(alpha) || std::isnan(alpha))
		throw std::invalid_argument("mean width: the dual route needs real alpha");
	std::vector<double> m = ring_means(F);
	auto g = [alpha](double r) { return 2.0 * std::numbers::pi * r * weight_alpha(r * r, alpha); };
	double rmax = alpha > 0.0 ? std::sqrt(2.0 / alpha) : truncation_radius(alpha);
	if (alpha > 0.0 && rmax > F.radius())
		throw std::domain_error("mean width: support function is +inf at " + point_text({F.radius() * 1.000001, 0.0}) +
					" inside the weight's support");
	double reach = std::min(rmax, F.radius());
	res.value = radial_integral(F, m, reach, g);
	if (alpha < 0.0) {
		// beyond the mesh h is bounded by quadratic growth from the outer ring
		double hR = std::abs(m.back()), R = F.radius();
		double hi = std::max(rmax, R) * 4.0;
		res.tail_bound = gl_integral([&](double r) { return hR * (r / R) * (r / R) * g(r); }, reach, hi, 256, gauss_legendre(8));
	}
	return res;
}

WidthResult mean_width(const AlphaFunction &f, double alpha, const QuadratureSpec &quad, Ladder ladder)
{
	if (alpha == kLayerAlpha) {
		double top = ladder.top > 0.0 ? ladder.top : f.sup();
		double dt = top / ladder.levels;
		std::vector<double> parts;
		for (int l = 1; l <= ladder.levels; ++l) {
			double t = l == ladder.levels ? top : top * l / ladder.levels;
			parts.push_back(level_width(superlevel_set(f, t)) * dt);
		}
		return {pairwise_sum(parts), 0.0, 0.0};
	}
	if (f.alpha() != alpha)
		throw std::invalid_argument("mean width: alpha does not match the function's class");
	if (f.dim() == 2)
		return mean_width_dual(*polar_dual(f), alpha, quad);

	ConvexPL1D h = alpha_support(f);
	WidthResult res;
	if (alpha == 0.0) {
		switch (quad.kind) {
		case QuadratureSpec::Kind::Auto:
		case QuadratureSpec::Kind::Trapezoid:
			res.value = 2.0 * gaussian_integral_pl(h);
			return res;
		case QuadratureSpec::Kind::GaussHermite: {
			GaussRule g = gauss_hermite(quad.nodes);
			std::vector<double> parts;
			for (std::size_t i = 0; i < g.x.size(); ++i)
				parts.push_back(g.w[i] * h(g.x[i]));
			res.value = 2.0 * pairwise_sum(parts);
			return res;
		}
		case QuadratureSpec::Kind::MonteCarlo: {
			if (!quad.seed)
				throw std::invalid_argument("mean width: monte-carlo quadrature needs a seed");
			std::mt19937_64 rng(*quad.seed);
			std::normal_distribution<double> N(0.0, 1.0);
			std::vector<double> vals(quad.samples), sq(quad.samples);
			for (int q = 0; q < quad.samples; ++q)
				vals[q] = 2.0 * h(N(rng));
			double mean = pairwise_sum(vals) / quad.samples;
			for (int q = 0; q < quad.samples; ++q)
				sq[q] = (vals[q] - mean) * (vals[q] - mean);
			res.value = mean;
			res.std_error = std::sqrt(pairwise_sum(sq) / (quad.samples - 1) / quad.samples);
			return res;
		}
		}
	}
	auto g = [&](double x) { return h(x) * weight_alpha(x * x, alpha); };
	double T = alpha > 0.0 ? std::sqrt(2.0 / alpha) : truncation_radius(alpha);
	// integrate piece by piece so the kinks of h sit on chunk boundaries
	std::vector<double> cuts{-T};
	for (double x : h.x())
		if (x > -T && x < T)
			cuts.push_back(x);
	cuts.push_back(T);
	static const GaussRule rule = gauss_legendre(8);
	std::vector<double> parts;
	for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
		int chunks = std::max(1, static_cast<int>(std::ceil((cuts[i + 1] - cuts[i]) / (T / 512))));
		parts.push_back(gl_integral(g, cuts[i], cuts[i + 1], chunks, rule));
	}
	res.value = pairwise_sum(parts);
	if (alpha < 0.0) {
		auto a = [&](double x) { return std::abs(g(x)) + std::abs(g(-x)); };
		res.tail_bound = gl_integral(a, T, 50.0 * T, 2048, rule);
	}
	return res;
}

double total_mass(const AlphaFunction &f)
{
	static const GaussRule rule = gauss_legendre(8);
	if (f.dim() == 1) {
		if (f.layered())
			return f.q1().integral();
		const ConvexPL1D &b = f.base1();
		if (b.size() == 1)
			return 0.0;
		double span = b.hi() - b.lo();
		std::vector<double> parts;
		for (std::size_t i = 0; i + 1 < b.size(); ++i) {
			double a = b.x()[i], c = b.x()[i + 1];
			int chunks = std::max(1, static_cast<int>(std::ceil((c - a) / (span / 1024))));
			parts.push_back(gl_integral([&](double x) { return f(x); }, a, c, chunks, rule));
		}
		return pairwise_sum(parts);
	}
	if (const LevelStack *st = f.levels()) {
		std::vector<double> parts;
		for (std::size_t l = 0; l < st->t.size(); ++l) {
			const LevelSet &s = st->sets[l];
			parts.push_back((st->t[l] - (l ? st->t[l - 1] : 0.0)) * (s.body ? s.body->area() : 0.0));
		}
		return pairwise_sum(parts);
	}
	GridConvex2D v = f.values2();
	std::vector<double> w(v.values().size());
	for (int j = 0; j < v.n2(); ++j)
		for (int i = 0; i < v.n1(); ++i) {
			double c = (i == 0 || i == v.n1() - 1 ? 0.5 : 1.0) * (j == 0 || j == v.n2() - 1 ? 0.5 : 1.0);
			w[static_cast<std::size_t>(j) * v.n1() + i] = c * v.at(i, j);
		}
	return parallel_sum(w) * v.h1() * v.h2();
}

double total_mass_layer_cake(const AlphaFunction &f, int levels)
{
	double top = f.sup();
	double dt = top / levels;
	std::vector<double> parts;
	if (f.dim() == 1) {
		for (int l = 0; l < levels; ++l) {
			LevelSet s = superlevel_set(f, (l + 0.5) * dt);
			parts.push_back(s.empty() ? 0.0 : (s.body->hi() - s.body->lo()) * dt);
		}
		return pairwise_sum(parts);
	}
	// node-counting volume with trapezoid cell weights
	GridConvex2D v = f.values2();
	for (int l = 0; l < levels; ++l) {
		double t = (l + 0.5) * dt, vol = 0.0;
		for (int j = 0; j < v.n2(); ++j)
			for (int i = 0; i < v.n1(); ++i)
				if (v.at(i, j) >= t)
					vol += (i == 0 || i == v.n1() - 1 ? 0.5 : 1.0) * (j == 0 || j == v.n2() - 1 ? 0.5 : 1.0);
		parts.push_back(vol * v.h1() * v.h2() * dt);
	}
	return pairwise_sum(parts);
}

double ladder_mass(const AlphaFunction &f, Ladder ladder)
{
	double top = ladder.top > 0.0 ? ladder.top : f.sup();
	std::vector<double> parts;
	for (int l = 1; l <= ladder.levels; ++l) {
		double t = l == ladder.levels ? top : top * l / ladder.levels;
		LevelSet s = superlevel_set(f, t);
		if (s.empty())
			break;
		double vol = 0.0;
		if (s.body)
			vol = f.dim() == 2 ? s.body->area() : s.body->hi() - s.body->lo();
		parts.push_back(top / ladder.levels * vol);
	}
	return pairwise_sum(parts);
}

PrekopaLeindler prekopa_leindler_check(const AlphaFunction &f, const AlphaFunction &g, double lambda, double tol)
{
	if (f.alpha() != 0.0 || g.alpha() != 0.0)
		throw std::invalid_argument("prekopa_leindler_check: needs log-concave functions");
	if (!(lambda > 0.0 && lambda < 1.0))
		throw std::invalid_argument("prekopa_leindler_check: lambda must lie in (0, 1)");
	PrekopaLeindler r;
	r.lhs = total_mass(alpha_asplund(f, g, lambda, 1.0 - lambda));
	r.rhs = std::pow(total_mass(f), lambda) * std::pow(total_mass(g), 1.0 - lambda);
	r.holds = r.lhs >= r.rhs - tol;
	return r;
}

} // namespace alphasym
