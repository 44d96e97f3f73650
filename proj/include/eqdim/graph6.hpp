#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "eqdim/graph.hpp"

namespace eqdim {

// McKay graph6: printable 63-offset sextets, upper triangle column-major.
// Orders up to 258047 are handled (one- and four-byte headers).
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Whitespace edge list, one "u v" pair per line (0-based), with an optional
// leading "n m" header. The writer always emits the header.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// All graph6 lines of a stream; skips blanks, comments (#) and the optional
// ">>graph6<<" banner.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace eqdim
