#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acceptance
{

struct CriterionResult
{
	int id = 0;
	std::string name;
	bool pass = false;
	std::string detail;
	double seconds = 0.0;
};

struct SuiteOptions
{
	std::vector<int> only;  // empty: all ten
	std::string cli_path;   // CLI executable for the rerun check; empty skips it
	std::ostream *progress = nullptr;
};

std::vector<CriterionResult> run_core(const SuiteOptions &opt);

/// One "[PASS] n name: detail (t s)" line per criterion.
std::string format_line(const CriterionResult &r);

} // namespace acceptance
