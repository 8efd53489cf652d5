#pragma once

#include "ect/transforms.hpp"

#include <string>

namespace ect {

// JSON curve object: { "kind": "step"|"pl", "convention": "right"|"left",
// "breakpoints": ["p/q", ...], "values": ["p/q", ...], "window": "p/q" }.
// For "pl" curves the breakpoints are the knots (same length as values);
// "window" is present only when one applies. All rationals serialize as
// "p/q" strings, so round trips are lossless.
std::string curve_to_json(const AnyCurve& curve, const std::optional<Rational>& window = {});
AnyCurve curve_from_json(const std::string& text);

// Bundle object: { "directions": [["p/q", ...], ...], "curves": [...],
// "window": "p/q", "source": ..., "convention": ... }.
std::string bundle_to_json(const TransformBundle& bundle);
TransformBundle bundle_from_json(const std::string& text);

// One row per (direction index, breakpoint/knot, value), plus a leading
// row per direction carrying the pre-breakpoint value for step curves.
std::string bundle_to_csv(const TransformBundle& bundle);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ect
