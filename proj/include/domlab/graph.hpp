#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domlab/vertex_set.hpp"

namespace domlab {

enum class Family { PathClique, CycleClique };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Spine length n, clique order m; vertex (i,j) has id (i-1)*m + (j-1).
struct ProductMeta {
  Family family;
  int n;
  int m;
};

enum class FactorKind { Path, Cycle, Clique };

// Undirected graph on vertices 0..n-1 with bitset neighborhoods. Generator
// provenance (factor) lets direct_product tag spine-by-clique products.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::optional<ProductMeta> meta = std::nullopt,
        std::optional<FactorKind> factor = std::nullopt);

  int vertex_count() const { return n_; }
  long long edge_count() const { return edges_; }
  const VertexSet& neighbors(int v) const { return adj_[check(v)]; }
  const VertexSet& closed_neighbors(int v) const { return closed_[check(v)]; }
  int degree(int v) const { return degree_[check(v)]; }
  int max_degree() const { return max_degree_; }
  bool adjacent(int u, int v) const { return adj_[check(u)].contains(v); }
  const std::optional<ProductMeta>& meta() const { return meta_; }
  const std::optional<FactorKind>& factor() const { return factor_; }

 private:
  size_t check(int v) const {
    if (v < 0 || v >= n_) throw ContractError("vertex id out of range: " + std::to_string(v));
    return static_cast<size_t>(v);
  }

  int n_ = 0;
  long long edges_ = 0;
  int max_degree_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> closed_;
  std::vector<int> degree_;
  std::optional<ProductMeta> meta_;
  std::optional<FactorKind> factor_;
};

// 1-based (column i, row j) <-> 0-based vertex id for product instances.
struct ProductCoords {
  int n = 0;
  int m = 0;

  int vertex_count() const { return n * m; }

  int index(int i, int j) const;
  std::pair<int, int> coords(int v) const;
  int column_of(int v) const { return v / m + 1; }
  int row_of(int v) const { return v % m + 1; }

  VertexSet column(int i) const;  // X_i
  VertexSet row(int j) const;     // R_j
};

ProductCoords coords_of(const Graph& g);  // requires meta

Graph make_path(int n);    // vertices 0..n-1, edges i ~ i+1; n >= 1
Graph make_cycle(int n);   // n >= 2; the 2-cycle is a single edge
Graph make_clique(int m);  // m >= 1

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Direct (tensor) product. Vertex (a, b) gets id a*|V(h)| + b. When g is a
// generated path or cycle and h a generated clique, the result carries
// ProductMeta.
Graph direct_product(const Graph& g, const Graph& h);

// P_n x K_m or C_n x K_m with meta attached. path: n >= 1, cycle: n >= 2;
// m >= 2.
Graph product_instance(Family family, int n, int m);

// Vertex lists of the connected components, each ascending, ordered by their
// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Subgraph on ids (ascending, distinct); vertex k of the result is ids[k].
Graph induced_subgraph(const Graph& g, const std::vector<int>& ids);

}  // namespace domlab
