#pragma once

#include "gem/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gem {

// CGF text: "cgf 1", "colors <h>", "vertices <n>", then "e <u> <v> <c>" lines.
std::string write_cgf(const ColoredGraph& g, const std::vector<std::string>& comments = {});
// Throws ParseError carrying the offending line number.
ColoredGraph parse_cgf(std::string_view text);

// Graphviz rendering; line style per color: 1 bold, 2 solid, 3 dotted, 4 dashed.
std::string export_dot(const ColoredGraph& g, const std::string& name = "G");

}  // namespace gem
