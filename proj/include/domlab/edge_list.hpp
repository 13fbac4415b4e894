#pragma once

#include <iosfwd>
#include <string>

#include "domlab/graph.hpp"

namespace domlab {

// Edge-list text: optional '#' comments, first data line is the vertex count,
// then one "u v" edge per line with 0-based distinct endpoints. Duplicate
// edges (either orientation), self-loops, and out-of-range ids are parse
// errors with a 1-based line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Canonical form: vertex count, then edges "u v" with u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

// Certificate text: one vertex per line, '#' comments. Product instances use
// "i j" with 1-based column and row; plain graphs use one 0-based id.
VertexSet read_certificate(std::istream& in, const Graph& g);
VertexSet read_certificate_file(const std::string& path, const Graph& g);
void write_certificate(std::ostream& out, const Graph& g, const VertexSet& s);
std::string certificate_string(const Graph& g, const VertexSet& s);

}  // namespace domlab
