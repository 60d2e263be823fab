#include "alphasym/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace alphasym
{

namespace
{

double parse_number(const Json &j)
{
	if (j.is_number())
		return j.get<double>();
	if (j.is_string()) {
		const std::string &s = j.get_ref<const std::string &>();
		if (s == "inf")
			return kInf;
		if (s == "-inf")
			return -kInf;
	}
	throw std::invalid_argument("json: expected a number or an inf token");
}

void write(std::string &out, const Json &j, int indent, int depth)
{
	auto newline = [&](int d) {
		if (indent < 0)
			return;
		out += '\n';
		out.append(static_cast<std::size_t>(indent * d), ' ');
	};
	switch (j.type()) {
	case Json::value_t::object: {
		if (j.empty()) {
			out += "{}";
			return;
		}
		out += '{';
		bool first = true;
		for (auto it = j.begin(); it != j.end(); ++it) {
			if (!first)
				out += ',';
			first = false;
			newline(depth + 1);
			out += Json(it.key()).dump();
			out += indent < 0 ? ":" : ": ";
			write(out, it.value(), indent, depth + 1);
		}
		newline(depth);
		out += '}';
		return;
	}
	case Json::value_t::array: {
		if (j.empty()) {
			out += "[]";
			return;
		}
		// arrays of scalars stay on one line
		bool flat = true;
		for (const auto &e : j)
			flat = flat && !e.is_structured();
		out += '[';
		for (std::size_t i = 0; i < j.size(); ++i) {
			if (i)
				out += flat ? ", " : ",";
			if (!flat)
				newline(depth + 1);
			write(out, j[i], indent, depth + 1);
		}
		if (!flat)
			newline(depth);
		out += ']';
		return;
	}
	case Json::value_t::number_float: {
		double v = j.get<double>();
		out += std::isnan(v) ? "null" : format_double(v);
		return;
	}
	default:
		out += j.dump();
	}
}

} // namespace

std::string format_double(double v)
{
	if (v == kInf)
		return "inf";
	if (v == -kInf)
		return "-inf";
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

Json number_json(double v)
{
	if (std::isinf(v))
		return v > 0 ? "inf" : "-inf";
	return v;
}

Json to_json(const ConvexPL1D &psi)
{
	Json pts = Json::array();
	for (std::size_t i = 0; i < psi.size(); ++i)
		pts.push_back({psi.x()[i], psi.v()[i]});
	return {{"extent", psi.bounded() ? "bounded" : "windowed"}, {"points", pts}};
}

Json to_json(const GridConvex2D &g)
{
	Json vals = Json::array();
	for (double v : g.values())
		vals.push_back(number_json(v));
	const Box &b = g.box();
	return {{"box", {b.a1, b.b1, b.a2, b.b2}}, {"n1", g.n1()}, {"n2", g.n2()}, {"values", vals}};
}

Json to_json(const AlphaFunction &f)
{
	Json j{{"alpha", number_json(f.alpha())}, {"dim", f.dim()}};
	if (!f.layered()) {
		j["base"] = f.dim() == 1 ? to_json(f.base1()) : to_json(f.base2());
		return j;
	}
	if (f.dim() == 1) {
		Json pts = Json::array();
		for (std::size_t i = 0; i < f.q1().x().size(); ++i)
			pts.push_back({f.q1().x()[i], f.q1().v()[i]});
		j["values"] = {{"points", pts}};
	} else {
		j["values"] = to_json(f.q2().grid());
	}
	return j;
}

ConvexPL1D pl_from_json(const Json &j)
{
	std::vector<double> x, v;
	for (const auto &p : j.at("points")) {
		x.push_back(parse_number(p.at(0)));
		v.push_back(parse_number(p.at(1)));
	}
	Extent ext = j.value("extent", std::string("bounded")) == "windowed" ? Extent::Windowed : Extent::Bounded;
	return ConvexPL1D::make(std::move(x), std::move(v), ext);
}

GridConvex2D grid_from_json(const Json &j)
{
	const Json &b = j.at("box");
	Box box{parse_number(b.at(0)), parse_number(b.at(1)), parse_number(b.at(2)), parse_number(b.at(3))};
	std::vector<double> vals;
	for (const auto &v : j.at("values"))
		vals.push_back(parse_number(v));
	return GridConvex2D(box, j.at("n1").get<int>(), j.at("n2").get<int>(), std::move(vals));
}

std::string dump_json(const Json &j, int indent)
{
	std::string out;
	write(out, j, indent, 0);
	out += '\n';
	return out;
}

std::string to_csv(const ConvexPL1D &psi)
{
	std::ostringstream os;
	os << "x,value\n";
	for (std::size_t i = 0; i < psi.size(); ++i)
		os << format_double(psi.x()[i]) << ',' << format_double(psi.v()[i]) << '\n';
	return os.str();
}

std::string to_csv(const GridConvex2D &g)
{
	std::ostringstream os;
	os << "x1,x2,value\n";
	for (int j = 0; j < g.n2(); ++j)
		for (int i = 0; i < g.n1(); ++i)
			os << format_double(g.x1(i)) << ',' << format_double(g.x2(j)) << ',' << format_double(g.at(i, j)) << '\n';
	return os.str();
}

} // namespace alphasym
