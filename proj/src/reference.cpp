// Reference solver: plain lexicographic enumeration of vertex subsets by
// size, with definition-level membership tests written independently of the
// verifier and search modules. Slow on purpose; used to cross-check both.
#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "domlab/errors.hpp"
#include "domlab/solve.hpp"

namespace domlab {

namespace {

bool ref_dominating(const Graph& g, const std::vector<char>& in) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    if (in[static_cast<size_t>(v)]) continue;
    bool covered = false;
    for (int u = 0; u < n && !covered; ++u) {
      if (in[static_cast<size_t>(u)] && g.adjacent(u, v)) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

bool ref_independent(const Graph& g, const std::vector<int>& ids) {
  for (size_t a = 0; a < ids.size(); ++a) {
    for (size_t b = a + 1; b < ids.size(); ++b) {
      if (g.adjacent(ids[a], ids[b])) return false;
    }
  }
  return true;
}

int ref_open_count(const Graph& g, const std::vector<char>& in, int v) {
  int c = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (in[static_cast<size_t>(u)] && g.adjacent(u, v)) ++c;
  }
  return c;
}

bool ref_secure(const Graph& g, const std::vector<int>& ids, std::vector<char> in) {
  if (!ref_dominating(g, in)) return false;
  int n = g.vertex_count();
  for (int w = 0; w < n; ++w) {
    if (in[static_cast<size_t>(w)]) continue;
    bool defended = false;
    for (int v : ids) {
      if (!g.adjacent(v, w)) continue;
      in[static_cast<size_t>(v)] = 0;
      in[static_cast<size_t>(w)] = 1;
      if (ref_dominating(g, in)) defended = true;
      in[static_cast<size_t>(w)] = 0;
      in[static_cast<size_t>(v)] = 1;
      if (defended) break;
    }
    if (!defended) return false;
  }
  return true;
}

bool ref_passes(const Graph& g, ParamKind kind, const std::vector<int>& ids) {
  int n = g.vertex_count();
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (int v : ids) in[static_cast<size_t>(v)] = 1;
  switch (kind) {
    case ParamKind::Dom:
      return ref_dominating(g, in);
    case ParamKind::Idom:
      return ref_dominating(g, in) && ref_independent(g, ids);
    case ParamKind::Dom12:
      for (int v = 0; v < n; ++v) {
        if (in[static_cast<size_t>(v)]) continue;
        int c = ref_open_count(g, in, v);
        if (c < 1 || c > 2) return false;
      }
      return true;
    case ParamKind::TwoDom:
      for (int v = 0; v < n; ++v) {
        if (!in[static_cast<size_t>(v)] && ref_open_count(g, in, v) < 2) return false;
      }
      return true;
    case ParamKind::Sdom:
      return ref_secure(g, ids, in);
  }
  return false;
}

}  // namespace

SolveResult solve_min_reference(const Graph& g, ParamKind kind, std::uint64_t check_budget) {
  if (check_budget < 1) throw DomainError("check budget must be positive");
  auto t0 = std::chrono::steady_clock::now();
  int n = g.vertex_count();
  std::uint64_t checks = 0;
  for (int s = 0; s <= n; ++s) {
    std::vector<int> idx(static_cast<size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (++checks > check_budget) {
        throw BudgetError("check budget exceeded while scanning size " + std::to_string(s),
                          checks, s, std::nullopt);
      }
      if (ref_passes(g, kind, idx)) {
        SolveResult res;
        res.value = s;
        res.certificate = VertexSet(n);
        for (int v : idx) res.certificate.add(v);
        res.nodes = checks;
        res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
        res.canonical = true;
        return res;
      }
      // next combination in lexicographic order
      int i = s - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n - s + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < s; ++j) {
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }
  throw Error("no satisfying set exists");
}

}  // namespace domlab
