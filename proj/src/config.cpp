#include "alphasym/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace alphasym
{

namespace
{

std::string join(const std::vector<std::string> &items, const std::string &sep)
{
	std::string out;
	for (std::size_t i = 0; i < items.size(); ++i)
		out += (i ? sep : "") + items[i];
	return out;
}

std::string trim(const std::string &s)
{
	std::size_t a = 0, b = s.size();
	while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
		++a;
	while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
		--b;
	return s.substr(a, b - a);
}

bool valid_key(const std::string &k)
{
	if (k.empty() || k.front() == '.' || k.back() == '.' || k.find("..") != std::string::npos)
		return false;
	for (char c : k)
		if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.')
			return false;
	return true;
}

/// Strips a comment outside quotes.
std::string strip_comment(const std::string &s)
{
	bool quoted = false;
	for (std::size_t i = 0; i < s.size(); ++i) {
		if (s[i] == '"')
			quoted = !quoted;
		else if (s[i] == '#' && !quoted)
			return s.substr(0, i);
	}
	return s;
}

int bracket_balance(const std::string &s)
{
	int depth = 0;
	bool quoted = false;
	for (char c : s) {
		if (c == '"')
			quoted = !quoted;
		else if (!quoted && c == '[')
			++depth;
		else if (!quoted && c == ']')
			--depth;
	}
	return depth;
}

class ValueParser
{
public:
	explicit ValueParser(const std::string &s)
		: s_(s)
	{
	}

	ConfigValue parse()
	{
		ConfigValue v = value();
		skip();
		if (i_ != s_.size())
			throw std::invalid_argument("unexpected text after value: '" + s_.substr(i_) + "'");
		return v;
	}

private:
	const std::string &s_;
	std::size_t i_ = 0;

	void skip()
	{
		while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
			++i_;
	}

	ConfigValue value()
	{
		skip();
		if (i_ >= s_.size())
			throw std::invalid_argument("missing value");
		if (s_[i_] == '[') {
			++i_;
			std::vector<ConfigValue> items;
			skip();
			if (i_ < s_.size() && s_[i_] == ']') {
				++i_;
				return {items};
			}
			for (;;) {
				items.push_back(value());
				skip();
				if (i_ >= s_.size())
					throw std::invalid_argument("unterminated list");
				if (s_[i_] == ']') {
					++i_;
					return {items};
				}
				if (s_[i_] != ',')
					throw std::invalid_argument("expected ',' or ']' in list");
				++i_;
			}
		}
		if (s_[i_] == '"') {
			std::size_t end = s_.find('"', i_ + 1);
			if (end == std::string::npos)
				throw std::invalid_argument("unterminated string");
			std::string out = s_.substr(i_ + 1, end - i_ - 1);
			i_ = end + 1;
			return {out};
		}
		std::size_t start = i_;
		while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != ',' && s_[i_] != ']' &&
		       s_[i_] != '[')
			++i_;
		std::string tok = s_.substr(start, i_ - start);
		if (tok.empty())
			throw std::invalid_argument("empty value");
		char *end = nullptr;
		double d = std::strtod(tok.c_str(), &end);
		if (end == tok.c_str() + tok.size() && !std::isnan(d))
			return {d};
		for (char c : tok)
			if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.' && c != '/')
				throw std::invalid_argument("bare word '" + tok + "' needs quotes");
		return {tok};
	}
};

// ---------------------------------------------------------------------------
// typed readers; each records an error and returns nullopt on mismatch

struct Reader
{
	std::vector<std::string> &errors;

	std::string where(const std::string &key, const ConfigValue &v) const
	{
		return key + (v.line > 0 ? " (line " + std::to_string(v.line) + ")" : " (command line)");
	}

	std::optional<double> number(const std::string &key, const ConfigValue &v) const
	{
		if (!v.is_number()) {
			errors.push_back(where(key, v) + ": expected a number");
			return std::nullopt;
		}
		return std::get<double>(v.v);
	}

	std::optional<double> positive(const std::string &key, const ConfigValue &v) const
	{
		auto d = number(key, v);
		if (d && !(*d > 0.0 && std::isfinite(*d))) {
			errors.push_back(where(key, v) + ": must be positive");
			return std::nullopt;
		}
		return d;
	}

	std::optional<long long> integer(const std::string &key, const ConfigValue &v, long long lo) const
	{
		auto d = number(key, v);
		if (!d)
			return std::nullopt;
		if (!std::isfinite(*d) || std::floor(*d) != *d || *d < static_cast<double>(lo)) {
			errors.push_back(where(key, v) + ": expected an integer >= " + std::to_string(lo));
			return std::nullopt;
		}
		return static_cast<long long>(*d);
	}

	std::optional<std::string> string(const std::string &key, const ConfigValue &v) const
	{
		if (!v.is_string()) {
			errors.push_back(where(key, v) + ": expected a string");
			return std::nullopt;
		}
		return std::get<std::string>(v.v);
	}

	std::optional<std::string> choice(const std::string &key, const ConfigValue &v, const std::vector<std::string> &opts) const
	{
		auto s = string(key, v);
		if (!s)
			return std::nullopt;
		for (const auto &o : opts)
			if (*s == o)
				return s;
		errors.push_back(where(key, v) + ": '" + *s + "' is not one of {" + join(opts, ", ") + "}");
		return std::nullopt;
	}

	std::optional<std::vector<double>> numbers(const std::string &key, const ConfigValue &v, std::size_t count = 0) const
	{
		if (!v.is_list()) {
			errors.push_back(where(key, v) + ": expected a list of numbers");
			return std::nullopt;
		}
		std::vector<double> out;
		for (const auto &e : std::get<std::vector<ConfigValue>>(v.v)) {
			if (!e.is_number()) {
				errors.push_back(where(key, v) + ": expected a list of numbers");
				return std::nullopt;
			}
			out.push_back(std::get<double>(e.v));
		}
		if (count && out.size() != count) {
			errors.push_back(where(key, v) + ": expected " + std::to_string(count) + " numbers");
			return std::nullopt;
		}
		return out;
	}

	std::optional<std::vector<std::string>> strings(const std::string &key, const ConfigValue &v) const
	{
		if (!v.is_list()) {
			errors.push_back(where(key, v) + ": expected a list of names");
			return std::nullopt;
		}
		std::vector<std::string> out;
		for (const auto &e : std::get<std::vector<ConfigValue>>(v.v)) {
			if (!e.is_string()) {
				errors.push_back(where(key, v) + ": expected a list of names");
				return std::nullopt;
			}
			out.push_back(std::get<std::string>(e.v));
		}
		return out;
	}

	/// [[x, y], ...]
	std::optional<std::vector<Vec2>> pairs(const std::string &key, const ConfigValue &v) const
	{
		std::vector<Vec2> out;
		bool ok = v.is_list();
		if (ok)
			for (const auto &e : std::get<std::vector<ConfigValue>>(v.v)) {
				if (!e.is_list() || std::get<std::vector<ConfigValue>>(e.v).size() != 2) {
					ok = false;
					break;
				}
				const auto &p = std::get<std::vector<ConfigValue>>(e.v);
				if (!p[0].is_number() || !p[1].is_number()) {
					ok = false;
					break;
				}
				out.push_back({std::get<double>(p[0].v), std::get<double>(p[1].v)});
			}
		if (!ok) {
			errors.push_back(where(key, v) + ": expected a list of [x, y] pairs");
			return std::nullopt;
		}
		return out;
	}
};

const std::vector<std::string> kOperations{"conjugate", "infconv", "symmetrize", "hyposym", "width",
					   "mass",      "linearize", "gn",         "extremal", "check"};
const std::vector<std::string> kFamilies{"gaussian", "alpha_gaussian", "indicator", "pl_base", "random_convex"};

void read_catalog_field(CatalogEntry &e, const std::string &field, const std::string &key, const ConfigValue &v,
			const Reader &r, std::set<std::string> &seen)
{
	seen.insert(field);
	if (field == "family") {
		if (auto s = r.choice(key, v, kFamilies))
			e.family = *s;
	} else if (field == "dim") {
		if (auto d = r.integer(key, v, 1)) {
			if (*d > 2)
				r.errors.push_back(r.where(key, v) + ": dimension must be 1 or 2");
			else
				e.dim = static_cast<int>(*d);
		}
	} else if (field == "center" || field == "curvature") {
		Vec2 p{};
		if (v.is_number())
			p = {std::get<double>(v.v), field == "curvature" ? std::get<double>(v.v) : 0.0};
		else if (auto xs = r.numbers(key, v, 2))
			p = {(*xs)[0], (*xs)[1]};
		else
			return;
		(field == "center" ? e.center : e.curvature) = p;
	} else if (field == "interval") {
		if (auto xs = r.numbers(key, v, 2))
			e.lo = (*xs)[0], e.hi = (*xs)[1];
	} else if (field == "polygon") {
		if (auto ps = r.pairs(key, v))
			e.polygon = *ps;
	} else if (field == "points") {
		if (auto ps = r.pairs(key, v)) {
			e.px.clear(), e.pv.clear();
			for (Vec2 p : *ps)
				e.px.push_back(p.x), e.pv.push_back(p.y);
		}
	} else if (field == "pieces") {
		if (auto d = r.integer(key, v, 1))
			e.pieces = static_cast<int>(*d);
	} else if (field == "seed") {
		if (auto d = r.integer(key, v, 0))
			e.seed = static_cast<std::uint64_t>(*d);
	} else if (field == "half_width") {
		if (auto d = r.positive(key, v))
			e.half_width = *d;
	} else if (field == "box") {
		if (v.is_number()) {
			if (auto d = r.positive(key, v))
				e.box = Box::square(*d);
		} else if (auto xs = r.numbers(key, v, 4)) {
			e.box = {(*xs)[0], (*xs)[1], (*xs)[2], (*xs)[3]};
		}
	} else if (field == "n") {
		if (auto d = r.integer(key, v, 3))
			e.n = static_cast<int>(*d);
	} else {
		seen.erase(field);
		r.errors.push_back(r.where(key, v) + ": unknown catalog field '" + field + "'");
	}
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
	: std::runtime_error("config error: " + join(errors, "; "))
	, errors_(std::move(errors))
{
}

std::vector<CatalogEntry> ExperimentConfig::full_catalog() const
{
	std::vector<CatalogEntry> out;
	for (auto &e : default_catalog()) {
		bool shadowed = false;
		for (const auto &c : catalog)
			shadowed = shadowed || c.name == e.name;
		if (!shadowed)
			out.push_back(std::move(e));
	}
	out.insert(out.end(), catalog.begin(), catalog.end());
	return out;
}

CatalogEntry ExperimentConfig::resolve(const std::string &name) const
{
	for (const auto &e : catalog)
		if (e.name == name)
			return e;
	for (const auto &e : default_catalog())
		if (e.name == name)
			return e;
	throw UnresolvedNameError("unresolved catalog name '" + name + "'");
}

ConfigValue parse_value(const std::string &text)
{
	return ValueParser(text).parse();
}

ConfigTree parse_tree(const std::string &text, std::vector<std::string> &errors)
{
	ConfigTree tree;
	std::map<std::string, int> catalog_lines; // catalog name -> line of its definition
	std::istringstream in(text);
	std::string raw, prefix;
	bool skipping = false; // inside a repeated catalog section
	int lineno = 0;
	while (std::getline(in, raw)) {
		++lineno;
		int start = lineno;
		std::string line = trim(strip_comment(raw));
		if (line.empty())
			continue;
		if (line.front() == '[' && line.find('=') == std::string::npos) {
			if (line.back() != ']') {
				errors.push_back("line " + std::to_string(start) + ": malformed section header");
				continue;
			}
			prefix = trim(line.substr(1, line.size() - 2));
			skipping = false;
			if (!valid_key(prefix)) {
				errors.push_back("line " + std::to_string(start) + ": malformed section name '" + prefix + "'");
				skipping = true;
				continue;
			}
			if (prefix.rfind("catalog.", 0) == 0 && prefix.find('.', 8) == std::string::npos) {
				std::string name = prefix.substr(8);
				auto [it, fresh] = catalog_lines.emplace(name, start);
				if (!fresh) {
					errors.push_back("duplicate catalog name '" + name + "': defined on line " + std::to_string(it->second) +
							 " and on line " + std::to_string(start));
					skipping = true;
				}
			}
			continue;
		}
		std::size_t eq = line.find('=');
		if (eq == std::string::npos) {
			errors.push_back("line " + std::to_string(start) + ": expected 'key = value'");
			continue;
		}
		std::string key = trim(line.substr(0, eq));
		std::string value = trim(line.substr(eq + 1));
		while (bracket_balance(value) > 0 && std::getline(in, raw)) {
			++lineno;
			value += " " + trim(strip_comment(raw));
		}
		if (skipping)
			continue;
		if (!valid_key(key)) {
			errors.push_back("line " + std::to_string(start) + ": malformed key '" + key + "'");
			continue;
		}
		std::string full = prefix.empty() ? key : prefix + "." + key;
		if (full.rfind("catalog.", 0) == 0 && prefix.empty()) {
			std::string name = full.substr(8, full.find('.', 8) - 8);
			catalog_lines.emplace(name, start);
		}
		ConfigValue v;
		try {
			v = parse_value(value);
		} catch (const std::invalid_argument &e) {
			errors.push_back("line " + std::to_string(start) + ": " + key + ": " + e.what());
			continue;
		}
		v.line = start;
		auto [it, fresh] = tree.emplace(full, v);
		if (!fresh)
			errors.push_back("line " + std::to_string(start) + ": duplicate key '" + full + "' (first set on line " +
					 std::to_string(it->second.line) + ")");
	}
	return tree;
}

namespace
{

ExperimentConfig build_impl(const ConfigTree &tree, std::vector<std::string> errors)
{
	Reader r{errors};
	ExperimentConfig c;
	std::map<std::string, CatalogEntry> entries;
	std::map<std::string, std::set<std::string>> fields;
	std::optional<std::uint64_t> schedule_seed, quad_seed;
	std::string schedule_kind = "golden", quad_kind = "auto";
	std::string functional_key;

	for (const auto &[key, v] : tree) {
		if (key.rfind("catalog.", 0) == 0) {
			std::size_t dot = key.find('.', 8);
			if (dot == std::string::npos) {
				errors.push_back(r.where(key, v) + ": catalog keys read catalog.<name>.<field>");
				continue;
			}
			std::string name = key.substr(8, dot - 8);
			CatalogEntry &e = entries[name];
			e.name = name;
			read_catalog_field(e, key.substr(dot + 1), key, v, r, fields[name]);
			continue;
		}
		if (key == "operation") {
			if (auto s = r.choice(key, v, kOperations))
				c.operation = *s;
		} else if (key == "fn" || key == "fn2") {
			if (auto s = r.string(key, v))
				(key == "fn" ? c.fn : c.fn2) = *s;
		} else if (key == "alpha") {
			if (auto d = r.number(key, v)) {
				if (std::isinf(*d) && *d > 0)
					errors.push_back(r.where(key, v) + ": alpha = +inf is not a class");
				else
					c.alpha = *d;
			}
		} else if (key == "lambda_f" || key == "lambda_g") {
			if (auto d = r.positive(key, v))
				(key == "lambda_f" ? c.lambda_f : c.lambda_g) = *d;
		} else if (key == "theta") {
			if (auto d = r.number(key, v))
				c.theta = *d;
		} else if (key == "steps") {
			if (auto d = r.integer(key, v, 0))
				c.steps = static_cast<int>(*d);
		} else if (key == "threads") {
			if (auto d = r.integer(key, v, 0))
				c.threads = static_cast<int>(*d);
		} else if (key == "tol") {
			if (auto d = r.positive(key, v))
				c.tol = *d;
		} else if (key == "schedule.kind") {
			if (auto s = r.choice(key, v, {"golden", "cyclic", "random", "list"}))
				schedule_kind = *s;
		} else if (key == "schedule.seed") {
			if (auto d = r.integer(key, v, 0))
				schedule_seed = static_cast<std::uint64_t>(*d);
		} else if (key == "schedule.angles") {
			if (auto xs = r.numbers(key, v))
				c.schedule.angles = *xs;
		} else if (key == "quad.kind") {
			if (auto s = r.choice(key, v, {"auto", "gauss_hermite", "trapezoid", "monte_carlo"}))
				quad_kind = *s;
		} else if (key == "quad.nodes") {
			if (auto d = r.integer(key, v, 1))
				c.quad.nodes = static_cast<int>(*d);
		} else if (key == "quad.samples") {
			if (auto d = r.integer(key, v, 1))
				c.quad.samples = static_cast<int>(*d);
		} else if (key == "quad.seed") {
			if (auto d = r.integer(key, v, 0))
				quad_seed = static_cast<std::uint64_t>(*d);
		} else if (key == "linearize.x") {
			if (auto xs = r.numbers(key, v))
				c.break_x = *xs;
		} else if (key == "gn.n") {
			if (auto xs = r.numbers(key, v)) {
				c.gn_n.clear();
				for (double x : *xs) {
					if (std::floor(x) != x || x < 1) {
						errors.push_back(r.where(key, v) + ": expected positive integers");
						break;
					}
					c.gn_n.push_back(static_cast<int>(x));
				}
			}
		} else if (key == "gn.m") {
			if (auto d = r.integer(key, v, 2))
				c.gn_m = static_cast<int>(*d);
		} else if (key == "gn.mode") {
			if (auto s = r.choice(key, v, {"exhaustive", "greedy"}))
				c.gn_mode = *s == "greedy" ? GNMode::Greedy : GNMode::Exhaustive;
		} else if (key == "extremal.functional") {
			if (auto s = r.string(key, v)) {
				bool gn = s->size() > 2 && (*s)[0] == 'G' && (*s)[1] == '_' &&
					  s->find_first_not_of("0123456789", 2) == std::string::npos;
				if (*s == "J" || *s == "w0" || gn)
					c.functional = *s;
				else
					errors.push_back(r.where(key, v) + ": '" + *s + "' is not one of {J, w0, G_<N>}");
			}
		} else if (key == "extremal.fns") {
			if (auto xs = r.strings(key, v))
				c.fns = *xs;
		} else if (key == "check.suite") {
			if (auto s = r.choice(key, v, {"core"}))
				c.suite = *s;
		} else if (key == "check.only") {
			if (auto xs = r.numbers(key, v))
				for (double x : *xs) {
					if (std::floor(x) != x || x < 1 || x > 10) {
						errors.push_back(r.where(key, v) + ": criteria are numbered 1 to 10");
						break;
					}
					c.only.push_back(static_cast<int>(x));
				}
		} else if (key == "output.csv" || key == "output.json") {
			if (auto s = r.string(key, v))
				(key == "output.csv" ? c.csv : c.json) = *s;
		} else {
			errors.push_back(r.where(key, v) + ": unknown key");
		}
	}

	if (schedule_kind == "golden")
		c.schedule = Schedule::golden();
	else if (schedule_kind == "cyclic")
		c.schedule = Schedule::cyclic();
	else if (schedule_kind == "random") {
		if (!schedule_seed)
			errors.push_back("schedule.seed: required when schedule.kind = random");
		c.schedule = Schedule::random(schedule_seed.value_or(0));
	} else {
		if (c.schedule.angles.empty())
			errors.push_back("schedule.angles: required when schedule.kind = list");
		c.schedule = Schedule::list(c.schedule.angles);
	}

	if (quad_kind == "auto")
		c.quad.kind = QuadratureSpec::Kind::Auto;
	else if (quad_kind == "gauss_hermite")
		c.quad.kind = QuadratureSpec::Kind::GaussHermite;
	else if (quad_kind == "trapezoid")
		c.quad.kind = QuadratureSpec::Kind::Trapezoid;
	else {
		c.quad.kind = QuadratureSpec::Kind::MonteCarlo;
		if (!quad_seed)
			errors.push_back("quad.seed: required when quad.kind = monte_carlo");
	}
	c.quad.seed = quad_seed;

	for (auto &[name, e] : entries) {
		const auto &f = fields[name];
		std::string k = "catalog." + name;
		if (!f.count("family")) {
			errors.push_back(k + ".family: required");
			continue;
		}
		if (e.family == "random_convex" && !f.count("seed"))
			errors.push_back(k + ".seed: required for family random_convex");
		if (e.family == "pl_base" && !f.count("points"))
			errors.push_back(k + ".points: required for family pl_base");
		if (e.family == "pl_base" && e.dim != 1)
			errors.push_back(k + ": family pl_base is one-dimensional");
		if (e.family == "indicator" && e.dim == 2 && !f.count("polygon"))
			errors.push_back(k + ".polygon: required for a 2D indicator");
		if (e.family == "indicator" && e.dim == 1 && f.count("interval") && !(e.lo < e.hi))
			errors.push_back(k + ".interval: needs lo < hi");
		if (!errors.empty())
			continue;
		try {
			(void)e.make(0.0);
		} catch (const std::exception &ex) {
			errors.push_back(k + ": " + ex.what());
		}
		c.catalog.push_back(e);
	}

	if (!errors.empty())
		throw ConfigError(errors);

	std::vector<std::string> missing;
	auto check = [&](const std::string &key, const std::string &name) {
		try {
			(void)c.resolve(name);
		} catch (const UnresolvedNameError &) {
			missing.push_back("'" + name + "' (" + key + ")");
		}
	};
	if (!c.fn.empty())
		check("fn", c.fn);
	if (!c.fn2.empty())
		check("fn2", c.fn2);
	for (const auto &n : c.fns)
		check("extremal.fns", n);
	if (!missing.empty())
		throw UnresolvedNameError("unresolved catalog name " + join(missing, ", "));
	return c;
}

} // namespace

ExperimentConfig build_config(const ConfigTree &tree)
{
	return build_impl(tree, {});
}

ExperimentConfig parse_config_text(const std::string &text, const ConfigTree &overrides)
{
	std::vector<std::string> errors;
	ConfigTree tree = parse_tree(text, errors);
	for (const auto &[k, v] : overrides)
		tree[k] = v;
	return build_impl(tree, std::move(errors));
}

ExperimentConfig parse_config(const std::string &path, const ConfigTree &overrides)
{
	std::ifstream in(path);
	if (!in)
		throw ConfigError({"cannot read config file '" + path + "'"});
	std::ostringstream ss;
	ss << in.rdbuf();
	return parse_config_text(ss.str(), overrides);
}

} // namespace alphasym
