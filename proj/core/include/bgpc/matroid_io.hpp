#pragma once

#include <string>
#include <string_view>

#include "bgpc/graph.hpp"
#include "bgpc/matroid.hpp"

namespace bgpc {

/// Parses the `matroid <name> rank=<r> n=<n>` format with a `bases:`,
/// `binary:` or `graph:` section.
Matroid parse_matroid(std::string_view text);
Matroid read_matroid(const std::string& path);

/// Writes the backing that is cheapest to reproduce (graph, binary, else bases).
std::string format_matroid(const Matroid& m);

/// Edge lines `label u v` with integer vertex ids; ids are compacted in
/// increasing numeric order.
Graph parse_edge_lines(const std::vector<std::pair<std::size_t, std::string>>& lines);

}  // namespace bgpc
