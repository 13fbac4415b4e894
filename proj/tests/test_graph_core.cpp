#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "domlab/edge_list.hpp"
#include "domlab/graph.hpp"

using namespace domlab;

namespace {

// The definition, spelled out independently of the library's builder.
bool product_adjacent(const Graph& g, const Graph& h, int a, int b, int c, int d) {
  return g.adjacent(a, c) && h.adjacent(b, d);
}

std::vector<Graph> spine_factors() {
  std::vector<Graph> out;
  for (int n = 1; n <= 8; ++n) out.push_back(make_path(n));
  for (int n = 2; n <= 8; ++n) out.push_back(make_cycle(n));
  return out;
}

}  // namespace

TEST_CASE("generated factors have the expected shape") {
  for (int n = 1; n <= 8; ++n) {
    Graph p = make_path(n);
    CHECK(p.vertex_count() == n);
    CHECK(p.edge_count() == n - 1);
    CHECK(p.factor() == FactorKind::Path);
  }
  for (int n = 2; n <= 8; ++n) {
    Graph c = make_cycle(n);
    CHECK(c.vertex_count() == n);
    // The 2-cycle collapses to a single edge.
    CHECK(c.edge_count() == (n == 2 ? 1 : n));
    CHECK(c.factor() == FactorKind::Cycle);
    for (int v = 0; v < n; ++v) CHECK(c.degree(v) == (n == 2 ? 1 : 2));
  }
  for (int m = 1; m <= 8; ++m) {
    Graph k = make_clique(m);
    CHECK(k.vertex_count() == m);
    CHECK(k.edge_count() == static_cast<long long>(m) * (m - 1) / 2);
    CHECK(k.factor() == FactorKind::Clique);
  }
  CHECK_THROWS_AS(make_path(0), DomainError);
  CHECK_THROWS_AS(make_cycle(1), DomainError);
  CHECK_THROWS_AS(make_clique(0), DomainError);
}

TEST_CASE("direct product matches the definition on every factor pair") {
  std::vector<Graph> lefts = spine_factors();
  for (int m = 1; m <= 8; ++m) lefts.push_back(make_clique(m));
  for (const Graph& g : lefts) {
    for (int m = 1; m <= 8; ++m) {
      Graph h = make_clique(m);
      Graph prod = direct_product(g, h);
      int gn = g.vertex_count(), hn = h.vertex_count();
      REQUIRE(prod.vertex_count() == gn * hn);
      CHECK(prod.edge_count() == 2 * g.edge_count() * h.edge_count());
      for (int a = 0; a < gn; ++a) {
        for (int b = 0; b < hn; ++b) {
          for (int c = 0; c < gn; ++c) {
            for (int d = 0; d < hn; ++d) {
              CHECK(prod.adjacent(a * hn + b, c * hn + d) ==
                    product_adjacent(g, h, a, b, c, d));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("product meta marks exactly the spine by clique products") {
  for (const Graph& g : spine_factors()) {
    Graph prod = direct_product(g, make_clique(4));
    REQUIRE(prod.meta().has_value());
    CHECK(prod.meta()->family ==
          (*g.factor() == FactorKind::Cycle ? Family::CycleClique : Family::PathClique));
    CHECK(prod.meta()->n == g.vertex_count());
    CHECK(prod.meta()->m == 4);
  }
  // Wrong order, wrong kinds, or hand-built factors carry no meta.
  CHECK_FALSE(direct_product(make_clique(4), make_path(3)).meta().has_value());
  CHECK_FALSE(direct_product(make_clique(3), make_clique(4)).meta().has_value());
  CHECK_FALSE(direct_product(make_path(3), make_path(4)).meta().has_value());
  Graph path_shaped = graph_from_edges(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(direct_product(path_shaped, make_clique(3)).meta().has_value());
  CHECK_FALSE(direct_product(make_path(4), path_shaped).meta().has_value());
}

TEST_CASE("product instances agree with the factor product") {
  for (int n = 2; n <= 6; ++n) {
    for (int m = 2; m <= 5; ++m) {
      Graph a = product_instance(Family::PathClique, n, m);
      Graph b = direct_product(make_path(n), make_clique(m));
      REQUIRE(a.vertex_count() == b.vertex_count());
      CHECK(a.edge_count() == b.edge_count());
      for (int u = 0; u < a.vertex_count(); ++u) {
        CHECK(a.neighbors(u) == b.neighbors(u));
      }
      CHECK(a.meta()->family == Family::PathClique);
    }
  }
  Graph c = product_instance(Family::CycleClique, 5, 3);
  Graph d = direct_product(make_cycle(5), make_clique(3));
  for (int u = 0; u < c.vertex_count(); ++u) CHECK(c.neighbors(u) == d.neighbors(u));
  CHECK(product_instance(Family::PathClique, 1, 4).edge_count() == 0);
  CHECK_THROWS_AS(product_instance(Family::CycleClique, 1, 3), DomainError);
  CHECK_THROWS_AS(product_instance(Family::PathClique, 3, 1), DomainError);
}

TEST_CASE("known product shapes") {
  // P_2 x K_2 is a perfect matching of two edges.
  Graph p2k2 = product_instance(Family::PathClique, 2, 2);
  CHECK(p2k2.edge_count() == 2);
  CHECK(connected_components(p2k2).size() == 2);

  // C_2 x K_3 is the 6-cycle.
  Graph c2k3 = product_instance(Family::CycleClique, 2, 3);
  CHECK(c2k3.edge_count() == 6);
  CHECK(connected_components(c2k3).size() == 1);
  for (int v = 0; v < 6; ++v) CHECK(c2k3.degree(v) == 2);

  // An even cycle splits the K_2 product into two cycles of the same length.
  Graph c4k2 = product_instance(Family::CycleClique, 4, 2);
  auto comps = connected_components(c4k2);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 4);
  CHECK(comps[1].size() == 4);

  // An odd cycle keeps it connected: C_3 x K_2 is the 6-cycle again.
  Graph c3k2 = product_instance(Family::CycleClique, 3, 2);
  CHECK(connected_components(c3k2).size() == 1);
  for (int v = 0; v < 6; ++v) CHECK(c3k2.degree(v) == 2);

  // Degrees in P_n x K_m: m-1 on end columns, 2(m-1) inside.
  Graph p5k4 = product_instance(Family::PathClique, 5, 4);
  ProductCoords pc = coords_of(p5k4);
  for (int j = 1; j <= 4; ++j) {
    CHECK(p5k4.degree(pc.index(1, j)) == 3);
    CHECK(p5k4.degree(pc.index(5, j)) == 3);
    CHECK(p5k4.degree(pc.index(3, j)) == 6);
  }
}

TEST_CASE("coordinates are a bijection consistent with adjacency") {
  for (Family fam : {Family::PathClique, Family::CycleClique}) {
    for (int n = 2; n <= 7; ++n) {
      for (int m = 2; m <= 5; ++m) {
        Graph g = product_instance(fam, n, m);
        ProductCoords pc = coords_of(g);
        REQUIRE(pc.vertex_count() == n * m);
        for (int v = 0; v < n * m; ++v) {
          auto [i, j] = pc.coords(v);
          CHECK(1 <= i);
          CHECK(i <= n);
          CHECK(1 <= j);
          CHECK(j <= m);
          CHECK(pc.index(i, j) == v);
          CHECK(pc.column_of(v) == i);
          CHECK(pc.row_of(v) == j);
        }
        // Adjacency in coordinates: different rows, adjacent columns.
        for (int u = 0; u < n * m; ++u) {
          for (int v = 0; v < n * m; ++v) {
            auto [iu, ju] = pc.coords(u);
            auto [iv, jv] = pc.coords(v);
            int d = std::abs(iu - iv);
            bool cols_adjacent = fam == Family::CycleClique
                                     ? (d == 1 || (d == n - 1 && n > 2) || (n == 2 && d == 1))
                                     : d == 1;
            CHECK(g.adjacent(u, v) == (ju != jv && cols_adjacent));
          }
        }
        // Columns and rows partition the vertex set.
        VertexSet cols(n * m), rows(n * m);
        for (int i = 1; i <= n; ++i) {
          VertexSet x = pc.column(i);
          CHECK(x.size() == m);
          CHECK_FALSE(cols.intersects(x));
          cols |= x;
        }
        for (int j = 1; j <= m; ++j) {
          VertexSet r = pc.row(j);
          CHECK(r.size() == n);
          CHECK_FALSE(rows.intersects(r));
          rows |= r;
        }
        CHECK(cols == VertexSet::full(n * m));
        CHECK(rows == VertexSet::full(n * m));
      }
    }
  }
  CHECK_THROWS_AS(coords_of(make_path(5)), ContractError);
  ProductCoords pc{4, 3};
  CHECK_THROWS_AS(pc.index(0, 1), DomainError);
  CHECK_THROWS_AS(pc.index(1, 4), DomainError);
  CHECK_THROWS_AS(pc.coords(12), DomainError);
}

TEST_CASE("edge list text round-trips") {
  for (const Graph& g : {product_instance(Family::CycleClique, 4, 3), make_path(1),
                         graph_from_edges(5, {{0, 4}, {2, 3}})}) {
    std::string text = edge_list_string(g);
    std::istringstream in(text);
    Graph back = read_edge_list(in);
    REQUIRE(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(back.neighbors(v) == g.neighbors(v));
    // Canonical writer is a fixed point.
    CHECK(edge_list_string(back) == text);
  }
  // Comments and blank lines are ignored; ids may arrive in any order.
  std::istringstream in("# triangle\n\n3\n2 1\n0 2\n1 0\n");
  Graph tri = read_edge_list(in);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.adjacent(0, 1));
}

TEST_CASE("edge list parse errors carry 1-based line numbers") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 0);                      // missing vertex count
  CHECK(line_of("# only comments\n") == 0);
  CHECK(line_of("two\n") == 1);                 // not an integer
  CHECK(line_of("3 3\n") == 1);                 // count line with two tokens
  CHECK(line_of("-1\n") == 1);
  CHECK(line_of("3\n0\n") == 2);                // edge line with one token
  CHECK(line_of("3\n0 1\n1 3\n") == 3);         // endpoint out of range
  CHECK(line_of("3\n1 1\n") == 2);              // self-loop
  CHECK(line_of("# c\n3\n0 1\n# c\n1 0\n") == 5);  // duplicate, other orientation
  CHECK(line_of("3\n0 x\n") == 2);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/edges.txt"), ParseError);
}

TEST_CASE("certificate text uses coordinates on products and ids elsewhere") {
  Graph g = product_instance(Family::CycleClique, 4, 3);
  VertexSet s = VertexSet::of(12, {0, 5, 7});
  std::string text = certificate_string(g, s);
  CHECK(text.find("1 1") != std::string::npos);
  std::istringstream in(text);
  CHECK(read_certificate(in, g) == s);

  Graph plain = make_path(5);
  VertexSet t = VertexSet::of(5, {1, 4});
  std::string plain_text = certificate_string(plain, t);
  std::istringstream pin(plain_text);
  CHECK(read_certificate(pin, plain) == t);

  auto fails_at = [&](const std::string& body, const Graph& target) {
    std::istringstream bad(body);
    try {
      read_certificate(bad, target);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(fails_at("1 1\n5 1\n", g) == 2);   // column out of range
  CHECK(fails_at("1 4\n", g) == 1);        // row out of range
  CHECK(fails_at("2 2\n2 2\n", g) == 2);   // duplicate vertex
  CHECK(fails_at("2\n", g) == 1);          // product wants two coordinates
  CHECK(fails_at("0 1\n", plain) == 1);    // plain graph wants a single id
  CHECK(fails_at("5\n", plain) == 1);      // id out of range
}

TEST_CASE("components and induced subgraphs") {
  Graph g = product_instance(Family::PathClique, 6, 2);
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  for (const auto& comp : comps) {
    CHECK(std::is_sorted(comp.begin(), comp.end()));
    Graph sub = induced_subgraph(g, comp);
    // Each component of P_n x K_2 is a path on n vertices.
    CHECK(sub.vertex_count() == 6);
    CHECK(sub.edge_count() == 5);
    CHECK_FALSE(sub.meta().has_value());
  }
  CHECK(comps[0].front() < comps[1].front());

  // Induced edges survive exactly when both ends are kept.
  Graph c6 = make_cycle(6);
  Graph sub = induced_subgraph(c6, {0, 1, 2, 4});
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.edge_count() == 2);
  CHECK(sub.adjacent(0, 1));
  CHECK(sub.adjacent(1, 2));
  CHECK_FALSE(sub.adjacent(2, 3));
  CHECK_THROWS_AS(induced_subgraph(c6, {2, 1}), ContractError);
  CHECK_THROWS_AS(induced_subgraph(c6, {1, 1, 2}), ContractError);
}

TEST_CASE("vertex set mechanics") {
  VertexSet s(130);
  CHECK(s.empty());
  s.add(0);
  s.add(64);
  s.add(129);
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.first() == 0);
  CHECK(s.next(0) == 64);
  CHECK(s.next(64) == 129);
  CHECK(s.next(129) == -1);
  CHECK(s.first_absent() == 1);
  s.remove(0);
  CHECK(s.first() == 64);
  CHECK(s.to_vector() == std::vector<int>{64, 129});

  VertexSet a = VertexSet::of(10, {1, 3, 5});
  VertexSet b = VertexSet::of(10, {3, 4});
  CHECK((a | b).size() == 4);
  CHECK((a & b) == VertexSet::of(10, {3}));
  VertexSet c = a;
  c.subtract(b);
  CHECK(c == VertexSet::of(10, {1, 5}));
  CHECK(VertexSet::full(10).first_absent() == -1);
  CHECK(VertexSet::full(70).size() == 70);

  // {0,...} precedes {1,...}; shared prefixes defer to the first difference.
  CHECK(VertexSet::lex_less(VertexSet::of(6, {0, 5}), VertexSet::of(6, {1, 2})));
  CHECK(VertexSet::lex_less(VertexSet::of(6, {1, 2}), VertexSet::of(6, {1, 3})));
  CHECK_FALSE(VertexSet::lex_less(a, a));

  CHECK_THROWS_AS(s.add(130), ContractError);
  CHECK_THROWS_AS(s.add(-1), ContractError);
  CHECK_THROWS_AS((void)a.intersects(VertexSet(11)), ContractError);
  CHECK_THROWS_AS(VertexSet(-1), ContractError);
}
