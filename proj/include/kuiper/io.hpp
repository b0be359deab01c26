#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kuiper/circle.hpp"
#include "kuiper/distribution.hpp"
#include "kuiper/metrics.hpp"
#include "kuiper/monotone_map.hpp"

namespace kuiper {

using Json = nlohmann::ordered_json;

// Line distributions:
//   {"atoms":    [{"at": "1/2", "mass": "1/4"}, ...],
//    "segments": [{"from": "0", "to": "1", "density": "1"},
//                 {"from": "1", "to": "+inf", "moebius": {"a": "1", "b": "-1", "c": "1", "d": "0"}}]}
// A density segment adds mass at a constant rate; a moebius segment gives
// the CDF itself on (from, to) and must continue the mass accumulated to its
// left. Uncovered stretches carry no mass. Every jump of the resulting CDF
// must be listed under "atoms".
//
// Maps: {"orientation": "inc", "pieces": [{"from", "to", "a", "b", "c", "d"}, ...]}
// or the inversion shorthand {"r_pole": "0"} / {"r_pole": "inf"}.
//
// Circle distributions: {"atoms": [{"angle", "mass"}], "segments":
// [{"from_angle", "to_angle", "density"}]} with decimal strings, angles in
// [−π, π] and density per radian.
//
// Rationals are written as "p/q" strings; ±∞ as "-inf" / "+inf". Readers
// also accept JSON integers.

Json to_json(const Distribution& mu);
Json to_json(const MonotoneMap& g);
Json to_json(const CircleDistribution& c);
Json to_json(const Interval& i);
Json to_json(const Witness& w);

Distribution distribution_from_json(const Json& j);
MonotoneMap map_from_json(const Json& j);
CircleDistribution circle_from_json(const Json& j);

/// Parses JSON text. Syntax errors become ValidationError with the byte
/// offset; `source` names the input in messages.
Json parse_json(std::string_view text, std::string_view source = "input");

Distribution parse_distribution(std::string_view text, std::string_view source = "input");
MonotoneMap parse_map(std::string_view text, std::string_view source = "input");
CircleDistribution parse_circle(std::string_view text, std::string_view source = "input");

/// Canonical text: two-space indented JSON and a trailing newline.
std::string serialize(const Distribution& mu);
std::string serialize(const MonotoneMap& g);
std::string serialize(const CircleDistribution& c);
std::string dump(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// "2/3 exact", or a 17-digit decimal followed by "approx".
std::string format_scalar(const Scalar& s);

}  // namespace kuiper
