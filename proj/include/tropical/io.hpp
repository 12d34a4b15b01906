#pragma once

// JSON documents for cycles, functions and integer affine maps, plus an SVG
// rendering of plane cycles. Rationals are exact strings "p/q" in lowest
// terms; output is deterministic byte for byte.

#include "tropical/cycle.hpp"
#include "tropical/fan.hpp"
#include "tropical/function.hpp"
#include "tropical/morphism.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace tropical::io {

using Json = nlohmann::json;

inline constexpr std::string_view kFormatVersion = "1";

/// Text to JSON. Malformed text throws SchemaError with line and column.
Json parse_text(std::string_view text);
/// Two-space indented, sorted keys, trailing newline.
std::string dump(const Json& j);

Json rational_to_json(const Rational& q);
Json integer_to_json(const Integer& z);

Json cycle_to_json(const TropicalCycle& c);
/// Throws SchemaError with the path of the offending field. Does not run
/// validate; weights on cells that are faces of other cells are rejected with
/// ValidationError.
TropicalCycle cycle_from_json_unchecked(const Json& j);
/// As above, then ValidationError carrying the validate report on failure.
TropicalCycle cycle_from_json(const Json& j);

/// One line per purity, complex or balancing violation.
std::string describe(const ValidationReport& report);

Json polynomial_to_json(const TropicalPolynomial& p);
Json function_to_json(const PiecewiseAffineFunction& f);
/// Accepts "tropical_polynomial" and "piecewise" documents.
PiecewiseAffineFunction function_from_json(const Json& j);

Json map_to_json(const IntegerAffineMap& f);
/// NonIntegralMatrix for a matrix entry that is not an integer.
IntegerAffineMap map_from_json(const Json& j);

Json fan_to_json(const SimplicialFan& theta);

struct Window {
  Rational x_min, x_max, y_min, y_max;
};

/// Edges clipped to the window, weights other than 1 as labels, vertices as
/// dots, two-dimensional cells as shaded polygons. NotPlanar unless r = 2.
std::string plot_svg(const TropicalCycle& c, const Window& window);

}  // namespace tropical::io
