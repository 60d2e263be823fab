#include "doctest.h"

#include "alphasym/cli.hpp"
#include "alphasym/config.hpp"
#include "alphasym/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace alphasym;

namespace
{

struct Captured
{
	int code = 0;
	std::string out, err;
};

Captured call(std::vector<std::string> args)
{
	args.insert(args.begin(), "alphasym");
	std::vector<char *> argv;
	for (auto &a : args)
		argv.push_back(a.data());
	std::ostringstream out, err;
	auto *o = std::cout.rdbuf(out.rdbuf());
	auto *e = std::cerr.rdbuf(err.rdbuf());
	int code = run(static_cast<int>(argv.size()), argv.data());
	std::cout.rdbuf(o);
	std::cerr.rdbuf(e);
	return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &text)
{
	std::string path = "/tmp/alphasym_test_" + name;
	std::ofstream(path) << text;
	return path;
}

std::string slurp(const std::string &path)
{
	std::ifstream in(path);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

std::vector<std::string> errors_of(const std::string &text)
{
	try {
		parse_config_text(text);
	} catch (const ConfigError &e) {
		return e.errors();
	}
	return {};
}

bool mentions(const std::vector<std::string> &errs, const std::string &what)
{
	for (const auto &e : errs)
		if (e.find(what) != std::string::npos)
			return true;
	return false;
}

} // namespace

TEST_SUITE("cli")
{
	TEST_CASE("minimal valid config")
	{
		ExperimentConfig c = parse_config_text("operation = width\nfn = gauss0\n");
		CHECK(c.operation == "width");
		CHECK(c.fn == "gauss0");
		CHECK(c.alpha == 0.0);
		CHECK(c.resolve("gauss0").dim == 2);
	}

	TEST_CASE("sections, comments, lists across lines and catalog entries")
	{
		const char *text = R"(# shifted Gaussian experiment
operation = hyposym
fn = "shifted"
alpha = -inf
steps = 8

[schedule]
kind = list
angles = [0.0,
          0.5, # second
          1.0]

[catalog.shifted]
family = gaussian
dim = 2
center = [0.5, -0.25]
curvature = [1, 2]
box = [-6, 6, -6, 6]
n = 65

[catalog.tri]
family = indicator
dim = 2
polygon = [[0, 0], [1, 0], [0, 1]]
)";
		ExperimentConfig c = parse_config_text(text);
		CHECK(c.alpha == -std::numeric_limits<double>::infinity());
		CHECK(c.steps == 8);
		REQUIRE(c.schedule.angles.size() == 3);
		CHECK(c.schedule.angles[1] == 0.5);
		CatalogEntry e = c.resolve("shifted");
		CHECK(e.center.x == 0.5);
		CHECK(e.center.y == -0.25);
		CHECK(e.curvature.y == 2.0);
		CHECK(e.n == 65);
		CHECK(c.resolve("tri").polygon.size() == 3);
	}

	TEST_CASE("configured entries shadow built-in ones")
	{
		ExperimentConfig c = parse_config_text("[catalog.gauss0]\nfamily = indicator\ninterval = [0, 2]\n");
		CHECK(c.resolve("gauss0").family == "indicator");
		CHECK(c.resolve("gauss0").dim == 1);
		CHECK(c.resolve("square").dim == 2);
	}

	TEST_CASE("missing seed on monte-carlo quadrature names the key")
	{
		auto errs = errors_of("[quad]\nkind = monte_carlo\n");
		REQUIRE(errs.size() == 1);
		CHECK(errs[0].find("quad.seed") != std::string::npos);
		CHECK(errors_of("[quad]\nkind = monte_carlo\nseed = 4\n").empty());
	}

	TEST_CASE("stochastic parts need seeds")
	{
		CHECK(mentions(errors_of("[schedule]\nkind = random\n"), "schedule.seed"));
		CHECK(mentions(errors_of("[catalog.r]\nfamily = random_convex\ndim = 2\n"), "catalog.r.seed"));
	}

	TEST_CASE("duplicate catalog name lists both definitions")
	{
		auto errs = errors_of("[catalog.a]\nfamily = gaussian\n\n[catalog.a]\nfamily = indicator\ninterval = [0, 1]\n");
		REQUIRE(!errs.empty());
		CHECK(mentions(errs, "duplicate catalog name 'a'"));
		CHECK(mentions(errs, "line 1"));
		CHECK(mentions(errs, "line 4"));
	}

	TEST_CASE("every error is reported, not just the first")
	{
		auto errs = errors_of("tol = -1\nbogus = 3\nsteps = x\n[quad]\nkind = monte_carlo\n");
		CHECK(errs.size() >= 4);
		CHECK(mentions(errs, "tol"));
		CHECK(mentions(errs, "bogus"));
		CHECK(mentions(errs, "steps"));
		CHECK(mentions(errs, "quad.seed"));
	}

	TEST_CASE("unresolved names are reported separately after validation")
	{
		CHECK_THROWS_AS(parse_config_text("fn = nowhere\n"), UnresolvedNameError);
		CHECK_THROWS_AS(parse_config_text("fn = nowhere\ntol = -1\n"), ConfigError);
		try {
			parse_config_text("fn = gauss0\n[extremal]\nfns = [square, a1, a2]\n");
			FAIL("expected an unresolved name");
		} catch (const UnresolvedNameError &e) {
			std::string m = e.what();
			CHECK(m.find("'a1'") != std::string::npos);
			CHECK(m.find("'a2'") != std::string::npos);
		}
	}

	TEST_CASE("overrides replace keys of the file")
	{
		ConfigTree o;
		o["alpha"] = parse_value("-0.25");
		o["gn.n"] = parse_value("[3, 5]");
		ExperimentConfig c = parse_config_text("alpha = 0\n[gn]\nn = [3]\n", o);
		CHECK(c.alpha == -0.25);
		CHECK(c.gn_n == std::vector<int>{3, 5});
	}

	TEST_CASE("value grammar")
	{
		CHECK(std::get<double>(parse_value("1e-3").v) == 1e-3);
		CHECK(std::get<double>(parse_value("-inf").v) == -std::numeric_limits<double>::infinity());
		CHECK(std::get<std::string>(parse_value("\"a b\"").v) == "a b");
		CHECK(std::get<std::string>(parse_value("gauss0").v) == "gauss0");
		auto l = std::get<std::vector<ConfigValue>>(parse_value("[[0, 1], [2, 3]]").v);
		REQUIRE(l.size() == 2);
		CHECK(l[1].is_list());
	}

	TEST_CASE("unreadable config file")
	{
		CHECK_THROWS_AS(parse_config("/nonexistent/x.toml"), ConfigError);
	}

	TEST_CASE("input errors exit 2 with distinct messages")
	{
		Captured a = call({"frobnicate"});
		CHECK(a.code == 2);
		CHECK(a.err.find("unknown subcommand") != std::string::npos);

		Captured b = call({"width", "--config", temp_file("bad.toml", "tol = -1\n")});
		CHECK(b.code == 2);
		CHECK(b.err.find("config error") != std::string::npos);

		Captured c = call({"width", "--fn", "nowhere"});
		CHECK(c.code == 2);
		CHECK(c.err.find("unresolved catalog name") != std::string::npos);

		Captured d = call({"width", "--steps"});
		CHECK(d.code == 2);

		Captured e = call({"linearize", "--fn", "square", "--x", "[0, 1]"});
		CHECK(e.code == 2);
	}

	TEST_CASE("width of the standard Gaussian")
	{
		Captured r = call({"width", "--fn", "gauss0", "--alpha", "0"});
		REQUIRE(r.code == 0);
		Json j = Json::parse(r.out);
		CHECK(std::abs(j["w0"].get<double>() - 1.0) < 2e-3);
		CHECK(j["quadrature"]["kind"] == "auto");

		Captured q = call({"width", "--fn", "gauss0", "--alpha", "-0.25"});
		REQUIRE(q.code == 0);
		CHECK(Json::parse(q.out).contains("w_alpha"));
	}

	TEST_CASE("hyposym from a config writes a convergence curve")
	{
		std::string cfg = temp_file("shift.toml", "fn = gauss_shift\nsteps = 3\n");
		Captured r = call({"hyposym", "--config", cfg});
		REQUIRE(r.code == 0);
		CHECK(r.out.rfind("iteration,distance,", 0) == 0);
		CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
	}

	TEST_CASE("gn and linearize emit N, G_N, deficit")
	{
		std::string csv = "/tmp/alphasym_test_gn.csv";
		Captured r = call({"gn", "--fn", "pl_asym_1d", "--n", "[3, 4]", "--csv", csv});
		REQUIRE(r.code == 0);
		std::string text = slurp(csv);
		CHECK(text.rfind("N,G_N,deficit\n3,", 0) == 0);
		Json j = Json::parse(r.out);
		REQUIRE(j["records"].size() == 2);
		CHECK(j["records"][1]["G_N"].get<double>() >= j["records"][0]["G_N"].get<double>() - 1e-12);
		CHECK(j["records"][0]["deficit"].get<double>() >= 0.0);

		Captured l = call({"linearize", "--fn", "gauss_shift_1d", "--x", "[-1, 0, 1, 2]"});
		REQUIRE(l.code == 0);
		Json k = Json::parse(l.out);
		CHECK(k["break_points"].size() == 4);
		CHECK(k["deficit"].get<double>() >= 0.0);
	}

	TEST_CASE("operations on catalog members")
	{
		CHECK(call({"conjugate", "--fn", "pl_asym_1d"}).code == 0);
		CHECK(call({"infconv", "--fn", "gauss_shift_1d", "--fn2", "indicator_1d", "--lambda-f", "0.5"}).code == 0);
		CHECK(call({"infconv", "--fn", "gauss_shift_1d"}).code == 2);
		Captured s = call({"symmetrize", "--fn", "square", "--theta", "0.3"});
		REQUIRE(s.code == 0);
		Json j = Json::parse(s.out);
		CHECK(std::abs(j["width_after"].get<double>() - j["width_before"].get<double>()) < 1e-2);
		Captured m = call({"mass", "--fn", "indicator_1d"});
		REQUIRE(m.code == 0);
		CHECK(std::abs(Json::parse(m.out)["J"].get<double>() - 2.0) < 1e-9);
		Captured x = call({"extremal", "--fns", "[gauss_shift_1d, pl_asym_1d]"});
		REQUIRE(x.code == 0);
		CHECK(Json::parse(x.out)["holds"] == true);
	}

	TEST_CASE("reruns are byte-identical for any thread count")
	{
		std::string a = "/tmp/alphasym_test_a.json", b = "/tmp/alphasym_test_b.json";
		REQUIRE(call({"symmetrize", "--fn", "gauss_shift", "--theta", "1", "--threads", "1", "--json", a}).code == 0);
		REQUIRE(call({"symmetrize", "--fn", "gauss_shift", "--theta", "1", "--threads", "3", "--json", b}).code == 0);
		CHECK(slurp(a) == slurp(b));
		CHECK(!slurp(a).empty());
	}

	TEST_CASE("check runs the selected criteria")
	{
		Captured r = call({"check", "--suite", "core", "--only", "[1, 7]"});
		CHECK(r.code == 0);
		CHECK(r.out.find("[PASS] 1 ") != std::string::npos);
		CHECK(r.out.find("[PASS] 7 ") != std::string::npos);
		CHECK(r.out.find("] 2 ") == std::string::npos);
		CHECK(call({"check", "--suite", "extended"}).code == 2);
	}
}
