#include "doctest.h"

#include "alphasym/dual.hpp"
#include "alphasym/extended.hpp"

#include <cmath>
#include <numbers>

using namespace alphasym;

namespace
{

const PolarSpec kSmall{0.0, 401, 256, 513, true};

GridConvex2D shifted_quadratic(double c1, double c2, Box box, int n)
{
	return GridConvex2D::sample([=](Vec2 x) { return 0.5 * ((x.x - c1) * (x.x - c1) + (x.y - c2) * (x.y - c2)); }, box,
				    n, n);
}

} // namespace

TEST_SUITE("dual")
{
	TEST_CASE("refined conjugate removes the lattice bias of smooth inputs")
	{
		GridConvex2D psi = shifted_quadratic(0, 0, Box::square(6.0), 61);
		Box dual = Box::square(3.0);
		GridConvex2D plain = conjugate_grid(psi, dual, 61, 61);
		GridConvex2D ref = refined_conjugate(psi, dual, 61, 61);
		double e_plain = 0.0, e_ref = 0.0;
		for (int j = 0; j < 61; ++j)
			for (int i = 0; i < 61; ++i) {
				Vec2 s = ref.node(i, j);
				double exact = 0.5 * dot(s, s);
				e_plain = std::max(e_plain, std::abs(plain.at(i, j) - exact));
				e_ref = std::max(e_ref, std::abs(ref.at(i, j) - exact));
			}
		double h = psi.h();
		CHECK(e_plain > 0.05 * h * h);
		CHECK(e_ref < 1e-10);
	}

	TEST_CASE("refined conjugate leaves piecewise-linear inputs alone")
	{
		GridConvex2D ind = GridConvex2D::sample(
			[](Vec2 x) { return x.x >= 0 && x.x <= 1 && x.y >= 0 && x.y <= 1 ? 0.0 : kInf; }, Box::square(1.5), 31, 31);
		Box dual = Box::square(2.0);
		GridConvex2D plain = conjugate_grid(ind, dual, 41, 41);
		GridConvex2D ref = refined_conjugate(ind, dual, 41, 41);
		CHECK(plain.values() == ref.values());
		for (int j = 0; j < 41; ++j)
			for (int i = 0; i < 41; ++i) {
				Vec2 s = ref.node(i, j);
				CHECK(ref.at(i, j) == doctest::Approx(std::max(s.x, 0.0) + std::max(s.y, 0.0)).epsilon(1e-12));
			}
	}

	TEST_CASE("serial and parallel refined conjugates are bit-identical")
	{
		GridConvex2D psi = shifted_quadratic(0.5, -1.0, Box::square(5.0), 51);
		Box dual = Box::square(4.0);
		CHECK(refined_conjugate(psi, dual, 57, 57, Exec::Serial).values() ==
		      refined_conjugate(psi, dual, 57, 57, Exec::Parallel).values());
	}

	TEST_CASE("polar dual of a shifted quadratic")
	{
		double c1 = 1.0, c2 = 2.0;
		GridConvex2D psi = shifted_quadratic(c1, c2, Box::square(12.8), 129);
		PolarDual d = polar_dual_of(psi, kSmall);
		CHECK(d.field.radius() >= 20.0);
		// L psi(s) = <s, c> + |s|^2 / 2 where the maximizer c + s stays in the box
		double worst = 0.0;
		for (int a = 0; a < d.field.nr(); a += 20)
			for (int k = 0; k < d.field.nk(); k += 8) {
				double r = d.field.r(a), t = d.field.theta(k);
				Vec2 s{r * std::cos(t), r * std::sin(t)};
				Vec2 x = Vec2{c1, c2} + s;
				if (std::abs(x.x) > 12.0 || std::abs(x.y) > 12.0)
					continue;
				worst = std::max(worst, std::abs(d.field.at(a, k) - (dot(s, {c1, c2}) + 0.5 * r * r)));
			}
		CHECK(worst < 2e-2);
		// domain support: the box [-12.8, 12.8]^2
		CHECK(d.domain.contains({12.0, -12.0}, 1e-9));
		CHECK_FALSE(d.domain.contains({13.5, 0.0}, 1e-9));
	}

	TEST_CASE("primal from polar round trip")
	{
		GridConvex2D psi = shifted_quadratic(1.0, -0.5, Box::square(8.0), 81);
		PolarDual d = polar_dual_of(psi, kSmall);
		GridConvex2D back = primal_from_polar(d, psi.box(), 81, 81, kSmall);
		double worst = 0.0;
		for (int j = 0; j < 81; ++j)
			for (int i = 0; i < 81; ++i) {
				Vec2 x = psi.node(i, j);
				if (norm(x - Vec2{1.0, -0.5}) > 5.0)
					continue;
				worst = std::max(worst, std::abs(back.at(i, j) - psi.at(i, j)));
			}
		CHECK(worst < 5e-3);
	}

	TEST_CASE("polar mesh settings are validated")
	{
		GridConvex2D psi = shifted_quadratic(0, 0, Box::square(4.0), 41);
		PolarSpec bad = kSmall;
		bad.nk = 100;
		CHECK_THROWS(polar_dual_of(psi, bad));
	}

	TEST_CASE("reflect average keeps ring means and symmetrizes")
	{
		PolarField f = PolarField::from_function([](Vec2 s) { return s.x + 2 * s.y + 0.5 * dot(s, s); }, 5.0, 21, 128);
		for (double th : {0.0, std::numbers::pi / 4, 0.3})
		{
			Direction u = Direction::angle(th);
			PolarField g = f.reflect_average(u);
			PolarField mf = f.angular_mean(), mg = g.angular_mean();
			for (int a = 0; a < f.nr(); ++a)
				CHECK(mg.at(a, 0) == doctest::Approx(mf.at(a, 0)).epsilon(1e-12));
		}
		PolarField m = f.angular_mean(64);
		CHECK(m.max_oscillation() < 1e-12);
		// linear terms average out on every ring
		CHECK(m.at(10, 0) == doctest::Approx(0.5 * f.r(10) * f.r(10)).epsilon(1e-12));
	}

	TEST_CASE("polar support of points")
	{
		std::vector<Vec2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
		PolarSupport s = PolarSupport::of_points(sq, 64);
		CHECK(s.values()[0] == doctest::Approx(1.0));
		CHECK(s.values()[8] == doctest::Approx(std::sqrt(2.0)));
		CHECK(s.contains({0.5, 0.5}, 0.0));
		CHECK_FALSE(s.contains({1.1, 0.5}, 1e-9));
		CHECK(PolarSupport::disk(2.0, 64).mean() == doctest::Approx(2.0));
		PolarSupport r = s.reflect_average(Direction::axis(0));
		CHECK(r.values()[0] == doctest::Approx(0.5));
		CHECK(r.values()[32] == doctest::Approx(0.5));
	}
}
