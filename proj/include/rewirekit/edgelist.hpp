#pragma once

#include <iosfwd>
#include <string>

#include "rewirekit/graph.hpp"

namespace rewirekit {

// Text edge-list format:
//   first non-comment line:  N M
//   M lines:                 u v          (0-based)
//   optional colour block:   C            (count of coloured nodes)
//                            node colour  (C lines)
// Lines beginning with '#' are ignored everywhere.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// Side file with one `node colour` line per coloured node; applied on top of
// an existing graph (any colour block already present is replaced).
Graph apply_colour_file(const Graph& g, const std::string& path);

}  // namespace rewirekit
