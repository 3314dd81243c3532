#pragma once

#include "core/element.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kxs {

// One element per line: {"id": "...", "weight": "...", "attrs": {...}}.
// Weights are strings holding exact decimals or fractions ("1.25", "3/16");
// bare JSON integers are also accepted, JSON floats are not (they would
// smuggle binary rounding into an exact pipeline). attrs is optional; its
// values must be strings or arrays of strings. Duplicate ids, non-positive
// weights and malformed lines raise parse errors carrying the line number.
std::vector<Element> parse_stream_text(std::string_view text);
std::vector<Element> parse_stream_file(const std::string& path);

std::string element_to_json_line(const Element& u);
std::string serialize_stream(std::span<const Element> items);

}  // namespace kxs
