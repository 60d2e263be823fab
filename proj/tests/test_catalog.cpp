#include "doctest.h"

#include "alphasym/catalog.hpp"
#include "alphasym/extended.hpp"

#include <cmath>
#include <set>

using namespace alphasym;

TEST_SUITE("catalog")
{
	TEST_CASE("default catalog shape")
	{
		auto cat = default_catalog();
		REQUIRE(cat.size() == 12);
		std::set<std::string> names;
		int d1 = 0, d2 = 0;
		for (const auto &e : cat) {
			names.insert(e.name);
			(e.dim == 1 ? d1 : d2)++;
		}
		CHECK(names.size() == 12);
		CHECK(d1 == 6);
		CHECK(d2 == 6);
		CHECK(catalog_entry(cat, "gauss0").symmetric());
		CHECK_FALSE(catalog_entry(cat, "gauss_shift").symmetric());
		CHECK_THROWS_WITH(catalog_entry(cat, "nope"), doctest::Contains("unresolved name"));
	}

	TEST_CASE("every entry builds at every alpha")
	{
		for (const auto &e : default_catalog())
			for (double a : {0.0, -0.25, kLayerAlpha}) {
				AlphaFunction f = e.make(a);
				CHECK(f.dim() == e.dim);
				CHECK(f.sup() > 0.0);
				CHECK(f.sup() <= 1.0 + 1e-12);
			}
	}

	TEST_CASE("gaussian entries match their closed forms")
	{
		auto cat = default_catalog();
		AlphaFunction f = catalog_entry(cat, "gauss_shift").make(0.0);
		for (Vec2 x : {Vec2{1, 2}, Vec2{0, 0}, Vec2{2.2, 1.8}})
			CHECK(f(x) == doctest::Approx(std::exp(-0.5 * dot(x - Vec2{1, 2}, x - Vec2{1, 2}))).epsilon(1e-2));
		AlphaFunction g = catalog_entry(cat, "gauss_skew_1d").make(-0.25);
		// base 0.5 * 2 * (x - 0.5)^2 right of the center
		double x = 1.5, b = (x - 0.5) * (x - 0.5);
		CHECK(g(x) == doctest::Approx(std::pow(1 + 0.25 * b, -4.0)).epsilon(1e-4));
		CatalogEntry ga = catalog_entry(cat, "gauss0");
		ga.family = "alpha_gaussian";
		AlphaFunction G = ga.make(-0.25);
		CHECK(G({1.0, 0.0}) == doctest::Approx(std::pow(1 + 0.125, -4.0)).epsilon(1e-3));
	}

	TEST_CASE("random bases are convex and coercive")
	{
		for (std::uint64_t s : {1u, 2u, 11u, 12u}) {
			ConvexPL1D p = random_pl_base_1d(s);
			CHECK(p.min_slope() < 0.0);
			CHECK(p.max_slope() > 0.0);
			CHECK(p.min_value() == doctest::Approx(0.0));
			CHECK(random_pl_base_1d(s).x() == p.x());
		}
		GridConvex2D g = random_pl_base(21, 6, Box::square(3.0), 61);
		// coercive: the boundary ring sits well above the minimum
		double mn = *std::min_element(g.values().begin(), g.values().end());
		for (int i = 0; i < 61; ++i) {
			CHECK(g.at(i, 0) > mn + 5.0);
			CHECK(g.at(i, 60) > mn + 5.0);
		}
		// discretely convex along rows
		for (int j = 0; j < 61; ++j)
			for (int i = 1; i < 60; ++i)
				CHECK(g.at(i - 1, j) + g.at(i + 1, j) - 2 * g.at(i, j) >= -1e-9);
	}

	TEST_CASE("indicator entries")
	{
		auto cat = default_catalog();
		AlphaFunction sq = catalog_entry(cat, "square").make(0.0);
		CHECK(sq({0.5, 0.5}) == 1.0);
		CHECK(sq({1.2, 0.5}) == 0.0);
		AlphaFunction seg = catalog_entry(cat, "indicator_1d").make(kLayerAlpha);
		CHECK(seg(1.0) == 1.0);
		CHECK(seg(2.5) == 0.0);
		CatalogEntry bad = catalog_entry(cat, "square");
		bad.family = "wavelet";
		CHECK_THROWS(bad.make(0.0));
	}
}
