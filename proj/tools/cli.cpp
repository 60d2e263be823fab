#include "alphasym/cli.hpp"

#include "acceptance_suite.hpp"
#include "alphasym/config.hpp"
#include "alphasym/extremal.hpp"
#include "alphasym/io.hpp"
#include "alphasym/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace alphasym
{

namespace
{

/// Input problem found while running an operation (exit 2).
struct InputError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct Output
{
	Json json = Json::object();
	std::string csv;
	bool ok = true;
	std::string stdout_text; // empty: JSON goes to stdout
};

std::string values_csv(const AlphaFunction &f)
{
	if (f.dim() == 2)
		return to_csv(f.values2());
	std::ostringstream os;
	os << "x,value\n";
	if (f.layered()) {
		for (std::size_t i = 0; i < f.q1().x().size(); ++i)
			os << format_double(f.q1().x()[i]) << ',' << format_double(f.q1().v()[i]) << '\n';
		return os.str();
	}
	double lo = f.base1().lo(), hi = f.base1().hi();
	for (int k = 0; k <= 400; ++k) {
		double x = lo + (hi - lo) * k / 400;
		os << format_double(x) << ',' << format_double(f(x)) << '\n';
	}
	return os.str();
}

Json quad_json(const QuadratureSpec &q)
{
	Json j;
	j["kind"] = quadrature_name(q.kind);
	j["nodes"] = q.nodes;
	j["samples"] = q.samples;
	j["seed"] = q.seed ? Json(*q.seed) : Json(nullptr);
	return j;
}

Json header(const ExperimentConfig &c)
{
	Json j;
	j["operation"] = c.operation;
	j["fn"] = c.fn;
	j["alpha"] = number_json(c.alpha);
	return j;
}

FunctionalSpec functional(const ExperimentConfig &c, int dim)
{
	if (c.functional == "J")
		return total_mass_functional(dim);
	if (c.functional == "w0")
		return mean_width_functional(dim);
	if (dim != 1)
		throw InputError("extremal: G_N is available for one-dimensional functions only");
	return gn_functional(std::stoi(c.functional.substr(2)), c.gn_m);
}

Output op_conjugate(const ExperimentConfig &c)
{
	CatalogEntry e = c.resolve(c.fn);
	Output o;
	o.json = header(c);
	if (e.dim == 1) {
		ConvexPL1D l = conjugate_pl(e.base1());
		o.json["conjugate"] = to_json(l);
		o.csv = to_csv(l);
	} else {
		GridConvex2D g = e.base2();
		GridConvex2D l = conjugate_grid(g, default_dual_box(g), g.n1(), g.n2());
		o.json["conjugate"] = to_json(l);
		o.csv = to_csv(l);
	}
	return o;
}

Output op_infconv(const ExperimentConfig &c)
{
	if (c.fn2.empty())
		throw InputError("infconv: fn2 is required");
	if (c.alpha == kLayerAlpha)
		throw InputError("infconv: alpha must be real");
	CatalogEntry a = c.resolve(c.fn), b = c.resolve(c.fn2);
	if (a.dim != b.dim)
		throw InputError("infconv: fn and fn2 have different dimensions");
	AlphaFunction r = alpha_asplund(a.make(c.alpha), b.make(c.alpha), c.lambda_f, c.lambda_g);
	Output o;
	o.json = header(c);
	o.json["fn2"] = c.fn2;
	o.json["lambda_f"] = c.lambda_f;
	o.json["lambda_g"] = c.lambda_g;
	o.json["result"] = to_json(r);
	o.json["mass"] = total_mass(r);
	o.csv = values_csv(r);
	return o;
}

Direction direction(const ExperimentConfig &c, int dim)
{
	return dim == 1 ? Direction::line(1.0) : Direction::angle(c.theta);
}

Output op_symmetrize(const ExperimentConfig &c)
{
	CatalogEntry e = c.resolve(c.fn);
	AlphaFunction f = e.make(c.alpha);
	AlphaFunction s = alpha_minkowski_symmetral(f, direction(c, e.dim));
	Output o;
	o.json = header(c);
	o.json["theta"] = c.theta;
	o.json["width_before"] = number_json(mean_width(f, c.alpha, c.quad).value);
	o.json["width_after"] = number_json(mean_width(s, c.alpha, c.quad).value);
	o.json["mass_before"] = total_mass(f);
	o.json["mass_after"] = total_mass(s);
	o.json["result"] = to_json(s);
	o.csv = values_csv(s);
	return o;
}

Output op_hyposym(const ExperimentConfig &c)
{
	CatalogEntry e = c.resolve(c.fn);
	auto [g, rep] = iterate_symmetrizations(e.make(c.alpha), c.schedule, c.steps);
	Output o;
	o.json = header(c);
	o.json["steps"] = c.steps;
	Json recs = Json::array();
	for (const auto &r : rep.records)
		recs.push_back({{"iteration", r.iteration},
				{"distance", number_json(r.distance)},
				{"width", number_json(r.width)},
				{"mass", number_json(r.mass)}});
	o.json["records"] = recs;
	o.json["final_distance"] = number_json(rep.final_distance);
	o.csv = rep.to_csv();
	o.stdout_text = o.csv;
	return o;
}

Output op_width(const ExperimentConfig &c)
{
	CatalogEntry e = c.resolve(c.fn);
	WidthResult w = mean_width(e.make(c.alpha), c.alpha, c.quad);
	Output o;
	o.json = header(c);
	o.json[c.alpha == 0.0 ? "w0" : "w_alpha"] = number_json(w.value);
	o.json["std_error"] = w.std_error;
	o.json["tail_bound"] = w.tail_bound;
	o.json["quadrature"] = quad_json(c.quad);
	o.csv = "alpha,width\n" + format_double(c.alpha) + ',' + format_double(w.value) + '\n';
	return o;
}

Output op_mass(const ExperimentConfig &c)
{
	CatalogEntry e = c.resolve(c.fn);
	AlphaFunction f = e.make(c.alpha);
	Output o;
	o.json = header(c);
	o.json["J"] = total_mass(f);
	o.json["J_layer_cake"] = total_mass_layer_cake(f);
	o.json["w"] = number_json(mean_width(f, c.alpha, c.quad).value);
	o.json["quadrature"] = quad_json(c.quad);
	o.csv = "J,J_layer_cake\n" + format_double(o.json["J"].get<double>()) + ',' +
		format_double(o.json["J_layer_cake"].get<double>()) + '\n';
	return o;
}

Output op_linearize(const ExperimentConfig &c)
{
	CatalogEntry e = c.resolve(c.fn);
	if (e.dim != 1)
		throw InputError("linearize: fn must be one-dimensional");
	if (c.break_x.empty())
		throw InputError("linearize: linearize.x is required");
	AlphaFunction f = e.make(0.0);
	std::vector<double> x = c.break_x, y;
	std::sort(x.begin(), x.end());
	for (double v : x)
		y.push_back(f(v));
	BreakPointSet Y = BreakPointSet::line(x, y);
	AlphaFunction q = inner_log_linearization(f, Y);
	double w = mean_width(q, 0.0).value;
	double deficit = mean_width_deficit(f, q);
	Output o;
	o.json = header(c);
	o.json["alpha"] = 0.0;
	Json pts = Json::array();
	for (std::size_t i = 0; i < x.size(); ++i)
		pts.push_back({x[i], y[i]});
	o.json["break_points"] = pts;
	o.json["linearization"] = to_json(q);
	o.json["w0"] = w;
	o.json["deficit"] = deficit;
	o.csv = "N,G_N,deficit\n" + std::to_string(x.size()) + ',' + format_double(w) + ',' + format_double(deficit) + '\n';
	return o;
}

Output op_gn(const ExperimentConfig &c)
{
	CatalogEntry e = c.resolve(c.fn);
	if (e.dim != 1)
		throw InputError("gn: fn must be one-dimensional");
	AlphaFunction f = e.make(0.0);
	double w = mean_width(f, 0.0).value;
	Output o;
	o.json = header(c);
	o.json["alpha"] = 0.0;
	o.json["m"] = c.gn_m;
	o.json["mode"] = c.gn_mode == GNMode::Exhaustive ? "exhaustive" : "greedy";
	o.json["w0"] = w;
	Json recs = Json::array();
	o.csv = "N,G_N,deficit\n";
	for (int N : c.gn_n) {
		GNResult r = best_G_N(f, N, c.gn_mode, c.gn_m);
		recs.push_back({{"N", N},
				{"G_N", r.value},
				{"deficit", w - r.value},
				{"x", r.x},
				{"y", r.y},
				{"evaluated", r.evaluated}});
		o.csv += std::to_string(N) + ',' + format_double(r.value) + ',' + format_double(w - r.value) + '\n';
	}
	o.json["records"] = recs;
	return o;
}

Output op_extremal(const ExperimentConfig &c)
{
	std::vector<std::string> names = c.fns.empty() ? std::vector<std::string>{c.fn} : c.fns;
	Output o;
	o.json = header(c);
	o.json.erase("fn");
	o.json["functional"] = c.functional;
	o.json["tol"] = c.tol;
	Json recs = Json::array();
	o.csv = "fn,value,value_sym,holds\n";
	for (const auto &n : names) {
		CatalogEntry e = c.resolve(n);
		FunctionalSpec F = functional(c, e.dim);
		ConclusionRecord r = check_conclusion(F, e.make(c.alpha), c.tol);
		recs.push_back({{"fn", n}, {"value", r.value}, {"value_sym", r.value_sym}, {"holds", r.holds}});
		o.csv += n + ',' + format_double(r.value) + ',' + format_double(r.value_sym) + ',' + (r.holds ? "1" : "0") + '\n';
		o.ok = o.ok && r.holds;
	}
	o.json["verdicts"] = recs;
	o.json["holds"] = o.ok;
	return o;
}

std::string self_path(const char *argv0)
{
	std::error_code ec;
	auto p = std::filesystem::read_symlink("/proc/self/exe", ec);
	return ec ? std::string(argv0) : p.string();
}

Output op_check(const ExperimentConfig &c, const char *argv0)
{
	if (c.suite != "core")
		throw InputError("check: unknown suite '" + c.suite + "'");
	acceptance::SuiteOptions opt;
	opt.only = c.only;
	opt.cli_path = self_path(argv0);
	opt.progress = &std::cout;
	Output o;
	o.json["operation"] = "check";
	o.json["suite"] = c.suite;
	Json recs = Json::array();
	o.csv = "id,name,pass,seconds\n";
	for (const auto &r : acceptance::run_core(opt)) {
		recs.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
		o.csv += std::to_string(r.id) + ',' + r.name + ',' + (r.pass ? "1" : "0") + ',' + format_double(r.seconds) + '\n';
		o.ok = o.ok && r.pass;
	}
	o.json["criteria"] = recs;
	o.json["pass"] = o.ok;
	o.stdout_text = o.ok ? "all criteria passed\n" : "some criteria failed\n";
	return o;
}

void write_file(const std::string &path, const std::string &text)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw InputError("cannot write '" + path + "'");
	out << text;
}

const std::vector<std::string> kSubcommands{"conjugate", "infconv", "symmetrize", "hyposym", "width",
					    "mass",      "linearize", "gn",         "extremal", "check"};

} // namespace

int run(int argc, char **argv)
{
	if (argc < 2) {
		std::cerr << "usage: alphasym <subcommand> [options]; subcommands: conjugate infconv symmetrize hyposym width mass "
			     "linearize gn extremal check\n";
		return 2;
	}
	std::string sub = argv[1];
	if (sub == "--help" || sub == "-h") {
		std::cout << "usage: alphasym <subcommand> [options]; run 'alphasym <subcommand> --help' for options\n";
		return 0;
	}
	if (std::find(kSubcommands.begin(), kSubcommands.end(), sub) == kSubcommands.end()) {
		std::cerr << "unknown subcommand '" << sub << "'\n";
		return 2;
	}

	CLI::App app{"alphasym " + sub};
	app.name("alphasym " + sub);
	std::string config_path;
	int threads = 0;
	std::map<std::string, std::string> flags;
	app.add_option("--config", config_path, "configuration file");
	app.add_option("--threads", threads, "worker threads (0: library default)");
	const std::vector<std::pair<std::string, std::string>> keys{
		{"fn", "fn"},           {"fn2", "fn2"},           {"alpha", "alpha"},         {"theta", "theta"},
		{"steps", "steps"},     {"lambda-f", "lambda_f"}, {"lambda-g", "lambda_g"},   {"tol", "tol"},
		{"schedule", "schedule.kind"}, {"schedule-seed", "schedule.seed"}, {"angles", "schedule.angles"},
		{"quad", "quad.kind"},  {"nodes", "quad.nodes"},  {"samples", "quad.samples"}, {"quad-seed", "quad.seed"},
		{"x", "linearize.x"},   {"n", "gn.n"},            {"m", "gn.m"},              {"mode", "gn.mode"},
		{"functional", "extremal.functional"}, {"fns", "extremal.fns"}, {"suite", "check.suite"},
		{"only", "check.only"}, {"json", "output.json"}, {"csv", "output.csv"}};
	for (const auto &[flag, key] : keys)
		app.add_option("--" + flag, flags[key], "sets " + key);
	try {
		app.parse(argc - 1, argv + 1);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		std::cerr << "invalid arguments: " << e.what() << '\n';
		return 2;
	}

	ExperimentConfig c;
	try {
		ConfigTree overrides;
		overrides["operation"] = ConfigValue{std::string(sub), 0};
		for (const auto &[key, text] : flags)
			if (!text.empty()) {
				ConfigValue v = parse_value(text);
				bool list = key == "gn.n" || key == "check.only" || key == "linearize.x" || key == "extremal.fns" ||
					    key == "schedule.angles";
				if (list && !v.is_list())
					v = ConfigValue{std::vector<ConfigValue>{v}, 0};
				overrides[key] = v;
			}
		c = config_path.empty() ? parse_config_text("", overrides) : parse_config(config_path, overrides);
	} catch (const ConfigError &e) {
		std::cerr << e.what() << '\n';
		return 2;
	} catch (const UnresolvedNameError &e) {
		std::cerr << e.what() << '\n';
		return 2;
	}
	if (threads > 0)
		c.threads = threads;
	if (c.threads > 0)
		set_threads(c.threads);

	try {
		Output o;
		if (sub == "conjugate")
			o = op_conjugate(c);
		else if (sub == "infconv")
			o = op_infconv(c);
		else if (sub == "symmetrize")
			o = op_symmetrize(c);
		else if (sub == "hyposym")
			o = op_hyposym(c);
		else if (sub == "width")
			o = op_width(c);
		else if (sub == "mass")
			o = op_mass(c);
		else if (sub == "linearize")
			o = op_linearize(c);
		else if (sub == "gn")
			o = op_gn(c);
		else if (sub == "extremal")
			o = op_extremal(c);
		else
			o = op_check(c, argv[0]);
		std::string json = dump_json(o.json);
		if (!c.json.empty())
			write_file(c.json, json);
		if (!c.csv.empty())
			write_file(c.csv, o.csv);
		std::cout << (o.stdout_text.empty() ? json : o.stdout_text);
		return o.ok ? 0 : 1;
	} catch (const UnresolvedNameError &e) {
		std::cerr << e.what() << '\n';
		return 2;
	} catch (const std::exception &e) {
		std::cerr << sub << ": " << e.what() << '\n';
		return 2;
	}
}

} // namespace alphasym
