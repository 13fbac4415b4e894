#include "domlab/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace domlab {

namespace {

// Strips a trailing '#' comment and splits the rest into whitespace tokens.
std::vector<std::string> data_tokens(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

long long parse_int(const std::string& token, int line_no) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got \"" + token + "\"", line_no);
  }
  if (used != token.size()) {
    throw ParseError("expected an integer, got \"" + token + "\"", line_no);
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  int header_line = 0;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = data_tokens(line);
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens.size() != 1) throw ParseError("vertex count line must hold one integer", line_no);
      n = parse_int(tokens[0], line_no);
      if (n < 0) throw ParseError("vertex count must be non-negative", line_no);
      header_line = line_no;
      continue;
    }
    if (tokens.size() != 2) throw ParseError("edge line must hold two integers", line_no);
    long long u = parse_int(tokens[0], line_no);
    long long v = parse_int(tokens[1], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) throw ParseError("duplicate edge", line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("missing vertex count", 0);
  if (n > 1'000'000) throw ParseError("vertex count too large", header_line);
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << "\n";
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.vertex_count(); ++u) {
    g.neighbors(u).for_each([&](int v) {
      if (u < v) edges.emplace_back(u, v);
    });
  }
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) out << u << " " << v << "\n";
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

VertexSet read_certificate(std::istream& in, const Graph& g) {
  VertexSet s(g.vertex_count());
  bool product = g.meta().has_value();
  ProductCoords pc;
  if (product) pc = coords_of(g);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = data_tokens(line);
    if (tokens.empty()) continue;
    int v = -1;
    if (product) {
      if (tokens.size() != 2) {
        throw ParseError("certificate line must hold column and row", line_no);
      }
      long long i = parse_int(tokens[0], line_no);
      long long j = parse_int(tokens[1], line_no);
      if (i < 1 || i > pc.n || j < 1 || j > pc.m) {
        throw ParseError("certificate coordinates out of range", line_no);
      }
      v = pc.index(static_cast<int>(i), static_cast<int>(j));
    } else {
      if (tokens.size() != 1) throw ParseError("certificate line must hold one vertex id", line_no);
      long long id = parse_int(tokens[0], line_no);
      if (id < 0 || id >= g.vertex_count()) {
        throw ParseError("certificate vertex out of range", line_no);
      }
      v = static_cast<int>(id);
    }
    if (s.contains(v)) throw ParseError("duplicate certificate vertex", line_no);
    s.add(v);
  }
  return s;
}

VertexSet read_certificate_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_certificate(in, g);
}

void write_certificate(std::ostream& out, const Graph& g, const VertexSet& s) {
  if (s.capacity() != g.vertex_count()) {
    throw ContractError("certificate capacity does not match the graph");
  }
  if (g.meta()) {
    ProductCoords pc = coords_of(g);
    s.for_each([&](int v) {
      auto [i, j] = pc.coords(v);
      out << i << " " << j << "\n";
    });
  } else {
    s.for_each([&](int v) { out << v << "\n"; });
  }
}

std::string certificate_string(const Graph& g, const VertexSet& s) {
  std::ostringstream out;
  write_certificate(out, g, s);
  return out.str();
}

}  // namespace domlab
