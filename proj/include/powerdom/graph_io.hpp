#pragma once

#include <stdexcept>
#include <string>

#include "powerdom/graph.hpp"

namespace powerdom {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text edge list. One "u v" pair per line, '#' starts a comment, blank lines
// are skipped, an optional leading "n <count>" header declares the order
// (needed for isolated vertices). Duplicate edges collapse; self-loops and
// non-integer tokens are rejected with their line number.
Graph parse_edge_list(const std::string& text);

std::string format_edge_list(const Graph& g);

// graph6, bit-exact: 6-bit chunks offset by 63, column-major upper triangle,
// zero padding. Rejects bad size headers, wrong length and set padding bits.
Graph parse_graph6(const std::string& line);

std::string write_graph6(const Graph& g);

// Dispatch on extension (el/g6/json) unless format is given explicitly.
Graph read_graph_file(const std::string& path, std::string format = "");

void write_graph_file(const Graph& g, const std::string& path, std::string format = "");

}  // namespace powerdom
