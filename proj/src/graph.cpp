#include "domlab/graph.hpp"

#include <algorithm>
#include <string>

namespace domlab {

const char* family_name(Family f) {
  return f == Family::PathClique ? "path-clique" : "cycle-clique";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "path-clique") return Family::PathClique;
  if (name == "cycle-clique") return Family::CycleClique;
  return std::nullopt;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::optional<ProductMeta> meta, std::optional<FactorKind> factor)
    : n_(n), meta_(std::move(meta)), factor_(factor) {
  if (n < 0) throw DomainError("vertex count must be non-negative");
  adj_.assign(static_cast<size_t>(n), VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " +
                        std::to_string(v));
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<size_t>(u)].add(v);
    adj_[static_cast<size_t>(v)].add(u);
  }
  closed_.reserve(adj_.size());
  degree_.reserve(adj_.size());
  long long degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    VertexSet c = adj_[static_cast<size_t>(v)];
    c.add(v);
    closed_.push_back(std::move(c));
    int d = adj_[static_cast<size_t>(v)].size();
    degree_.push_back(d);
    degree_sum += d;
    max_degree_ = std::max(max_degree_, d);
  }
  edges_ = degree_sum / 2;
  // symmetry holds by construction; loops were rejected above
}

int ProductCoords::index(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > m) {
    throw DomainError("product coordinates out of range: (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
  }
  return (i - 1) * m + (j - 1);
}

std::pair<int, int> ProductCoords::coords(int v) const {
  if (v < 0 || v >= n * m) {
    throw DomainError("vertex id out of range: " + std::to_string(v));
  }
  return {v / m + 1, v % m + 1};
}

VertexSet ProductCoords::column(int i) const {
  VertexSet s(n * m);
  for (int j = 1; j <= m; ++j) s.add(index(i, j));
  return s;
}

VertexSet ProductCoords::row(int j) const {
  VertexSet s(n * m);
  for (int i = 1; i <= n; ++i) s.add(index(i, j));
  return s;
}

ProductCoords coords_of(const Graph& g) {
  if (!g.meta()) throw ContractError("graph carries no product meta");
  return ProductCoords{g.meta()->n, g.meta()->m};
}

Graph make_path(int n) {
  if (n < 1) throw DomainError("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges, std::nullopt, FactorKind::Path);
}

Graph make_cycle(int n) {
  if (n < 2) throw DomainError("cycle needs at least two vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  if (n > 2) edges.emplace_back(n - 1, 0);  // the 2-cycle is a single edge
  return Graph(n, edges, std::nullopt, FactorKind::Cycle);
}

Graph make_clique(int m) {
  if (m < 1) throw DomainError("clique needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  }
  return Graph(m, edges, std::nullopt, FactorKind::Clique);
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

Graph direct_product(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<std::pair<int, int>> gedges, hedges;
  for (int u = 0; u < ng; ++u) {
    g.neighbors(u).for_each([&](int v) {
      if (u < v) gedges.emplace_back(u, v);
    });
  }
  for (int u = 0; u < nh; ++u) {
    h.neighbors(u).for_each([&](int v) {
      if (u < v) hedges.emplace_back(u, v);
    });
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(gedges.size() * hedges.size() * 2);
  for (auto [a, b] : gedges) {
    for (auto [c, d] : hedges) {
      edges.emplace_back(a * nh + c, b * nh + d);
      edges.emplace_back(a * nh + d, b * nh + c);
    }
  }
  std::optional<ProductMeta> meta;
  if (g.factor() && h.factor() == FactorKind::Clique &&
      (*g.factor() == FactorKind::Path || *g.factor() == FactorKind::Cycle)) {
    Family fam = *g.factor() == FactorKind::Path ? Family::PathClique : Family::CycleClique;
    meta = ProductMeta{fam, ng, nh};
  }
  return Graph(ng * nh, edges, meta);
}

Graph product_instance(Family family, int n, int m) {
  if (m < 2) throw DomainError("product instance needs m >= 2");
  if (family == Family::PathClique) {
    if (n < 1) throw DomainError("path spine needs n >= 1");
    return direct_product(make_path(n), make_clique(m));
  }
  if (n < 2) throw DomainError("cycle spine needs n >= 2");
  return direct_product(make_cycle(n), make_clique(m));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  VertexSet seen(n);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    std::vector<int> comp;
    seen.add(s);
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      g.neighbors(v).for_each([&](int u) {
        if (!seen.contains(u)) {
          seen.add(u);
          stack.push_back(u);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& ids) {
  int k = static_cast<int>(ids.size());
  VertexSet member(g.vertex_count());
  for (int v : ids) member.add(v);
  if (member.size() != k) throw ContractError("induced subgraph ids must be distinct");
  std::vector<int> pos(static_cast<size_t>(g.vertex_count()), -1);
  for (int idx = 0; idx < k; ++idx) {
    if (idx > 0 && ids[static_cast<size_t>(idx)] <= ids[static_cast<size_t>(idx - 1)]) {
      throw ContractError("induced subgraph ids must ascend");
    }
    pos[static_cast<size_t>(ids[static_cast<size_t>(idx)])] = idx;
  }
  std::vector<std::pair<int, int>> edges;
  for (int idx = 0; idx < k; ++idx) {
    g.neighbors(ids[static_cast<size_t>(idx)]).for_each([&](int u) {
      int j = pos[static_cast<size_t>(u)];
      if (j > idx) edges.emplace_back(idx, j);
    });
  }
  return Graph(k, edges);
}

}  // namespace domlab
