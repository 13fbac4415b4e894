#include "domlab/verify.hpp"

#include <string>

namespace domlab {

namespace {

void require_same_capacity(const Graph& g, const VertexSet& s) {
  if (s.capacity() != g.vertex_count()) {
    throw ContractError("vertex set capacity " + std::to_string(s.capacity()) +
                        " does not match graph order " + std::to_string(g.vertex_count()));
  }
}

}  // namespace

const char* param_name(ParamKind k) {
  switch (k) {
    case ParamKind::Dom: return "dom";
    case ParamKind::Idom: return "idom";
    case ParamKind::Dom12: return "dom12";
    case ParamKind::TwoDom: return "2dom";
    case ParamKind::Sdom: return "sdom";
  }
  return "?";
}

const char* param_symbol(ParamKind k) {
  switch (k) {
    case ParamKind::Dom: return "gamma";
    case ParamKind::Idom: return "i";
    case ParamKind::Dom12: return "gamma_[1,2]";
    case ParamKind::TwoDom: return "gamma_2";
    case ParamKind::Sdom: return "gamma_s";
  }
  return "?";
}

std::optional<ParamKind> param_from_name(const std::string& name) {
  if (name == "dom") return ParamKind::Dom;
  if (name == "idom") return ParamKind::Idom;
  if (name == "dom12") return ParamKind::Dom12;
  if (name == "2dom") return ParamKind::TwoDom;
  if (name == "sdom") return ParamKind::Sdom;
  return std::nullopt;
}

const char* fail_reason_name(FailReason r) {
  switch (r) {
    case FailReason::Undominated: return "undominated";
    case FailReason::Overdominated: return "overdominated";
    case FailReason::Underdominated: return "underdominated";
    case FailReason::DependentPair: return "dependent-pair";
    case FailReason::Undefendable: return "undefendable";
  }
  return "?";
}

Verdict is_dominating(const Graph& g, const VertexSet& s) {
  require_same_capacity(g, s);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!s.contains(v) && !s.intersects(g.neighbors(v))) {
      return Verdict::fail(v, FailReason::Undominated);
    }
  }
  return Verdict::pass();
}

Verdict is_independent(const Graph& g, const VertexSet& s) {
  require_same_capacity(g, s);
  // scanning members ascending finds the first endpoint of the
  // lexicographically first in-set edge
  int bad = -1;
  s.for_each([&](int v) {
    if (bad >= 0) return;
    if ((g.neighbors(v) & s).next(v) >= 0) bad = v;
  });
  if (bad >= 0) return Verdict::fail(bad, FailReason::DependentPair);
  return Verdict::pass();
}

Verdict is_12_set(const Graph& g, const VertexSet& s) {
  require_same_capacity(g, s);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    int c = (g.neighbors(v) & s).size();
    if (c == 0) return Verdict::fail(v, FailReason::Undominated);
    if (c > 2) return Verdict::fail(v, FailReason::Overdominated);
  }
  return Verdict::pass();
}

Verdict is_2_dominating(const Graph& g, const VertexSet& s) {
  require_same_capacity(g, s);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    if ((g.neighbors(v) & s).size() < 2) {
      return Verdict::fail(v, FailReason::Underdominated);
    }
  }
  return Verdict::pass();
}

Verdict is_secure_dominating(const Graph& g, const VertexSet& s) {
  Verdict dom = is_dominating(g, s);
  if (!dom.ok) return dom;
  int n = g.vertex_count();
  // vertices covered by exactly one member; moving that member is only safe
  // toward a vertex that keeps covering them
  VertexSet critical(n);
  for (int v = 0; v < n; ++v) {
    if ((g.closed_neighbors(v) & s).size() == 1) critical.add(v);
  }
  std::vector<int> defenders(static_cast<size_t>(n), -1);
  for (int w = 0; w < n; ++w) {
    if (s.contains(w)) continue;
    const VertexSet guards = g.neighbors(w) & s;
    int choice = -1;
    for (int v = guards.first(); v >= 0; v = guards.next(v)) {
      if ((critical & g.closed_neighbors(v)).is_subset_of(g.closed_neighbors(w))) {
        choice = v;
        break;
      }
    }
    if (choice < 0) return Verdict::fail(w, FailReason::Undefendable);
    defenders[static_cast<size_t>(w)] = choice;
  }
  Verdict ok = Verdict::pass();
  ok.defenders = std::move(defenders);
  return ok;
}

Verdict check_param(const Graph& g, ParamKind kind, const VertexSet& s) {
  switch (kind) {
    case ParamKind::Dom: return is_dominating(g, s);
    case ParamKind::Idom: {
      Verdict d = is_dominating(g, s);
      if (!d.ok) return d;
      return is_independent(g, s);
    }
    case ParamKind::Dom12: return is_12_set(g, s);
    case ParamKind::TwoDom: return is_2_dominating(g, s);
    case ParamKind::Sdom: return is_secure_dominating(g, s);
  }
  throw ContractError("unknown parameter kind");
}

int ColumnProfile::at(int i) const {
  int n = size();
  if (family == Family::CycleClique) {
    int idx = ((i - 1) % n + n) % n;
    return counts[static_cast<size_t>(idx)];
  }
  if (i < 1 || i > n) return 0;
  return counts[static_cast<size_t>(i - 1)];
}

int ColumnProfile::window_sum(int i) const {
  int n = size();
  // each distinct column counts once even when the window wraps onto itself
  bool used[3] = {false, false, false};
  int cols[3] = {0, 0, 0};
  int total = 0;
  int k = 0;
  for (int d = -1; d <= 1; ++d) {
    int c = i + d;
    if (family == Family::CycleClique) {
      c = ((c - 1) % n + n) % n + 1;
    } else if (c < 1 || c > n) {
      continue;
    }
    bool dup = false;
    for (int t = 0; t < k; ++t) {
      if (used[t] && cols[t] == c) dup = true;
    }
    if (dup) continue;
    used[k] = true;
    cols[k] = c;
    ++k;
    total += at(c);
  }
  return total;
}

ColumnProfile column_profile(const Graph& g, const VertexSet& s) {
  require_same_capacity(g, s);
  ProductCoords pc = coords_of(g);
  ColumnProfile p;
  p.family = g.meta()->family;
  p.counts.assign(static_cast<size_t>(pc.n), 0);
  s.for_each([&](int v) { ++p.counts[static_cast<size_t>(pc.column_of(v) - 1)]; });
  return p;
}

bool doubleton_dominates_column(const Graph& g, int a, int b, int column) {
  ProductCoords pc = coords_of(g);
  if (g.meta()->m < 3) throw DomainError("doubleton test needs m >= 3");
  if (column < 1 || column > pc.n) throw DomainError("column out of range");
  if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count()) {
    throw DomainError("vertex id out of range");
  }
  bool cycle = g.meta()->family == Family::CycleClique;
  int n = pc.n;
  // column equality against the window slots i-1, i, i+1; a slot beyond the
  // ends of a path matches nothing
  auto matches = [&](int col, int slot) {
    if (cycle) return ((col - slot) % n + n) % n == 0;
    return col == slot;
  };
  int ca = pc.column_of(a), cb = pc.column_of(b);
  auto in_window = [&](int col) {
    return matches(col, column - 1) || matches(col, column) || matches(col, column + 1);
  };
  if (!in_window(ca) || !in_window(cb)) return false;
  if (matches(ca, column) && matches(cb, column)) return false;
  // adjacency to the window's middle is what the row condition trades against;
  // a pair sitting on the two outer slots does not count as consecutive
  bool consecutive =
      (matches(ca, column) && (matches(cb, column - 1) || matches(cb, column + 1))) ||
      (matches(cb, column) && (matches(ca, column - 1) || matches(ca, column + 1)));
  bool same_row = pc.row_of(a) == pc.row_of(b);
  return consecutive == same_row;
}

}  // namespace domlab
