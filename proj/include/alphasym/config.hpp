#pragma once

#include "alphasym/catalog.hpp"
#include "alphasym/linearize.hpp"
#include "alphasym/symmetrize.hpp"
#include "alphasym/widths.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace alphasym
{

/// Value of a key: number, string (quoted or bare) or list.
struct ConfigValue
{
	std::variant<double, std::string, std::vector<ConfigValue>> v;
	int line = 0;

	bool is_number() const { return v.index() == 0; }
	bool is_string() const { return v.index() == 1; }
	bool is_list() const { return v.index() == 2; }
};

/// Flat tree: dotted keys (section prefix applied) to values.
using ConfigTree = std::map<std::string, ConfigValue>;

/// Every problem found while reading or validating a configuration.
class ConfigError : public std::runtime_error
{
public:
	explicit ConfigError(std::vector<std::string> errors);
	const std::vector<std::string> &errors() const { return errors_; }

private:
	std::vector<std::string> errors_;
};

/// A catalog reference that names no built-in or configured entry.
class UnresolvedNameError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

struct ExperimentConfig
{
	std::string operation;
	std::vector<CatalogEntry> catalog; // configured entries; they shadow built-ins
	std::string fn = "gauss0";
	std::string fn2;
	double alpha = 0.0;
	double lambda_f = 1.0, lambda_g = 1.0;
	double theta = 0.0;
	int steps = 64;
	Schedule schedule;
	QuadratureSpec quad;
	std::vector<double> break_x;
	std::vector<int> gn_n{3, 4};
	int gn_m = 33;
	GNMode gn_mode = GNMode::Exhaustive;
	std::string functional = "J";
	std::vector<std::string> fns;
	std::string suite = "core";
	std::vector<int> only;
	double tol = 1e-3;
	std::string csv, json;
	int threads = 0;

	/// Built-in entries followed by configured ones (configured names win).
	std::vector<CatalogEntry> full_catalog() const;
	/// Throws UnresolvedNameError.
	CatalogEntry resolve(const std::string &name) const;
};

/// Parses the key-value text; syntax errors are collected, not thrown.
ConfigTree parse_tree(const std::string &text, std::vector<std::string> &errors);

/// Builds and validates a configuration from a tree. Throws ConfigError listing
/// every problem; unresolved catalog names are reported separately by
/// UnresolvedNameError once the tree itself is valid.
ExperimentConfig build_config(const ConfigTree &tree);

/// Reads a file and builds it; `overrides` (from command-line flags) replace
/// keys of the file.
ExperimentConfig parse_config(const std::string &path, const ConfigTree &overrides = {});
ExperimentConfig parse_config_text(const std::string &text, const ConfigTree &overrides = {});

/// A single value in the config grammar (used for command-line overrides).
ConfigValue parse_value(const std::string &text);

} // namespace alphasym
