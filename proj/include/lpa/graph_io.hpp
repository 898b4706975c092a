#pragma once

#include <string>

#include "lpa/graph.hpp"

namespace lpa {

// Line-based text format:
//   # comment
//   vertices u v w
//   edge u v [mult]
// Duplicate edge lines accumulate. The JSON alternative is an object with
// "vertices" (array of strings) and "edges" (array of [src, dst, mult]).
// parse_graph sniffs the format: a leading '{' selects JSON.
Graph parse_graph(const std::string& text);
Graph parse_graph_text(const std::string& text);
Graph parse_graph_json(const std::string& text);

// Reads a file and parses it; ParseError on unreadable files.
Graph load_graph(const std::string& path);

// Canonical text emission: one vertices line, then one edge line per nonzero
// adjacency entry in row-major order, multiplicity always explicit. Output
// re-parses to an identical graph and is byte-stable.
std::string write_graph_text(const Graph& g);

// Graphviz export; parallel edges are collapsed to one arrow labelled with
// the multiplicity.
std::string write_graph_dot(const Graph& g);

}  // namespace lpa
