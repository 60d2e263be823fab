#pragma once

#include "alphasym/alpha.hpp"
#include "alphasym/convex1d.hpp"
#include "alphasym/extended.hpp"
#include "alphasym/grid2d.hpp"

#include <json.hpp>

#include <string>

namespace alphasym
{

using Json = nlohmann::ordered_json;

/// 17 significant digits; "inf" and "-inf" for infinities.
std::string format_double(double v);

/// JSON number, or the string token "inf" / "-inf".
Json number_json(double v);

/// {"extent": ..., "points": [[x, v], ...]}
Json to_json(const ConvexPL1D &psi);
/// {"box": [a1, b1, a2, b2], "n1": ..., "n2": ..., "values": row-major with "inf" tokens}
Json to_json(const GridConvex2D &g);
/// Base representation for real alpha, values for alpha = -inf.
Json to_json(const AlphaFunction &f);

ConvexPL1D pl_from_json(const Json &j);
GridConvex2D grid_from_json(const Json &j);

/// Serializer with every floating-point number printed by format_double.
std::string dump_json(const Json &j, int indent = 2);

/// "x,value" rows for PL functions and "x1,x2,value" rows for grids.
std::string to_csv(const ConvexPL1D &psi);
std::string to_csv(const GridConvex2D &g);

} // namespace alphasym
