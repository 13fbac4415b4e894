#include "domlab/construct.hpp"

#include <string>

#include "domlab/errors.hpp"
#include "domlab/formulas.hpp"

namespace domlab {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

// Window t occupies columns 3t+1..3t+3 and holds the pair
// {(3t+1, r), (3t+2, r)}; rows alternate 1, 3 so each window's tail vertex
// (3t+3, r) is picked up by the next window's pair.
int cycle_window_row(int t, int k) {
  // an odd window count would land the last window back on row 1, clashing
  // with window 0 across the wrap (or with the row-1 remainder vertices)
  if (t == k - 1 && k % 2 == 1) return 2;
  return t % 2 == 0 ? 1 : 3;
}

VertexSet build_dom_cycle(int n, int m) {
  need(n >= 6, "dom-cycle needs n >= 6");
  need(m >= 3, "dom-cycle needs m >= 3");
  ProductCoords pc{n, m};
  VertexSet s(n * m);
  int k = n / 3, r = n % 3;
  for (int t = 0; t < k; ++t) {
    int row = cycle_window_row(t, k);
    s.add(pc.index(3 * t + 1, row));
    s.add(pc.index(3 * t + 2, row));
  }
  // remainder vertices sit on row 1: same row as window 0 across the wrap,
  // different row than the last window
  if (r == 1) {
    s.add(pc.index(n, 1));
  } else if (r == 2) {
    s.add(pc.index(n - 1, 1));
    s.add(pc.index(n, 1));
  }
  return s;
}

// Same windows read left to right, rows alternating 3, 1; the open ends
// replace the wrap fixes: n = 3k appends the tail vertex in the last pair's
// row, n = 3k+1 appends a pair in columns n-1, n, n = 3k+2 is one pair more.
VertexSet build_dom_path(int n, int m) {
  need(n >= 3, "dom-path needs n >= 3");
  need(m >= 3, "dom-path needs m >= 3");
  ProductCoords pc{n, m};
  VertexSet s(n * m);
  int k = n / 3, r = n % 3;
  int pairs = r == 2 ? k + 1 : k;
  for (int t = 0; t < pairs; ++t) {
    int row = t % 2 == 0 ? 3 : 1;
    s.add(pc.index(3 * t + 1, row));
    s.add(pc.index(3 * t + 2, row));
  }
  if (r == 0) {
    s.add(pc.index(n, (k - 1) % 2 == 0 ? 3 : 1));
  } else if (r == 1) {
    int row = k % 2 == 0 ? 3 : 1;
    s.add(pc.index(n - 1, row));
    s.add(pc.index(n, row));
  }
  return s;
}

VertexSet build_sdom_cycle_row(int n, int m) {
  need(n >= 3, "sdom-cycle-row needs n >= 3");
  need(m >= 3, "sdom-cycle-row needs m >= 3");
  ProductCoords pc{n, m};
  VertexSet s(n * m);
  for (int i = 1; i <= n; ++i) s.add(pc.index(i, 1));
  return s;
}

VertexSet build_sdom_path_rowplus(int n, int m) {
  need(n >= 3, "sdom-path-rowplus needs n >= 3");
  need(m >= 4, "sdom-path-rowplus needs m >= 4");
  ProductCoords pc{n, m};
  VertexSet s(n * m);
  for (int i = 1; i <= n; ++i) s.add(pc.index(i, 1));
  if (n == 3) {  // the two guard columns coincide, stack the guards instead
    s.add(pc.index(2, 2));
    s.add(pc.index(2, 3));
  } else if (n == 5) {  // same-row guards leave the middle attack undefended
    s.add(pc.index(2, 2));
    s.add(pc.index(4, 3));
  } else {
    s.add(pc.index(2, 2));
    s.add(pc.index(n - 1, 2));
  }
  return s;
}

VertexSet build_sdom_path_m3(int n, int m) {
  need(n >= 3, "sdom-path-m3-columns needs n >= 3");
  need(m == 3, "sdom-path-m3-columns needs m = 3");
  ProductCoords pc{n, m};
  VertexSet s(n * m);
  int k = n / 3;
  for (int t = 0; t < k; ++t) {
    for (int j = 1; j <= m; ++j) s.add(pc.index(3 * t + 2, j));
  }
  if (n % 3 != 0) {
    for (int j = 1; j <= m; ++j) s.add(pc.index(n, j));
  }
  return s;
}

VertexSet build_sdom_c2(int n, int m) {
  need(n == 2, "sdom-c2 needs n = 2");
  need(m >= 3, "sdom-c2 needs m >= 3");
  ProductCoords pc{n, m};
  VertexSet s(n * m);
  if (m == 3) {
    for (int j = 1; j <= 3; ++j) s.add(pc.index(1, j));
  } else {
    s.add(pc.index(1, 1));
    s.add(pc.index(1, 2));
    s.add(pc.index(2, 1));
    s.add(pc.index(2, 2));
  }
  return s;
}

}  // namespace

const char* construction_name(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::DomCycle: return "dom-cycle";
    case ConstructionKind::DomPath: return "dom-path";
    case ConstructionKind::SdomCycleRow: return "sdom-cycle-row";
    case ConstructionKind::SdomPathRowPlus: return "sdom-path-rowplus";
    case ConstructionKind::SdomPathM3Columns: return "sdom-path-m3-columns";
    case ConstructionKind::SdomC2: return "sdom-c2";
  }
  return "?";
}

std::optional<ConstructionKind> construction_from_name(const std::string& name) {
  for (ConstructionKind k :
       {ConstructionKind::DomCycle, ConstructionKind::DomPath, ConstructionKind::SdomCycleRow,
        ConstructionKind::SdomPathRowPlus, ConstructionKind::SdomPathM3Columns,
        ConstructionKind::SdomC2}) {
    if (name == construction_name(k)) return k;
  }
  return std::nullopt;
}

Family construction_family(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::DomCycle:
    case ConstructionKind::SdomCycleRow:
    case ConstructionKind::SdomC2:
      return Family::CycleClique;
    default:
      return Family::PathClique;
  }
}

ParamKind construction_param(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::DomCycle:
    case ConstructionKind::DomPath:
      return ParamKind::Dom;
    default:
      return ParamKind::Sdom;
  }
}

VertexSet build_construction(ConstructionKind kind, int n, int m) {
  switch (kind) {
    case ConstructionKind::DomCycle: return build_dom_cycle(n, m);
    case ConstructionKind::DomPath: return build_dom_path(n, m);
    case ConstructionKind::SdomCycleRow: return build_sdom_cycle_row(n, m);
    case ConstructionKind::SdomPathRowPlus: return build_sdom_path_rowplus(n, m);
    case ConstructionKind::SdomPathM3Columns: return build_sdom_path_m3(n, m);
    case ConstructionKind::SdomC2: return build_sdom_c2(n, m);
  }
  throw DomainError("unknown construction");
}

bool ConstructionCertificate::primary_ok() const {
  const char* want = param == ParamKind::Dom ? "dominating" : "secure";
  for (const auto& nv : checks) {
    if (nv.check == want) return nv.verdict.ok;
  }
  return false;
}

bool ConstructionCertificate::all_ok() const {
  for (const auto& nv : checks) {
    if (!nv.verdict.ok) return false;
  }
  return true;
}

ConstructionCertificate build_and_verify(ConstructionKind kind, int n, int m) {
  ConstructionCertificate cert;
  cert.kind = kind;
  cert.n = n;
  cert.m = m;
  cert.param = construction_param(kind);
  cert.set = build_construction(kind, n, m);
  Graph g = product_instance(construction_family(kind), n, m);
  if (cert.param == ParamKind::Dom) {
    cert.checks.push_back({"dominating", is_dominating(g, cert.set)});
    cert.checks.push_back({"independent", is_independent(g, cert.set)});
    cert.checks.push_back({"12-set", is_12_set(g, cert.set)});
  } else {
    cert.checks.push_back({"dominating", is_dominating(g, cert.set)});
    cert.checks.push_back({"secure", is_secure_dominating(g, cert.set)});
    cert.checks.push_back({"2-dominating", is_2_dominating(g, cert.set)});
  }
  return cert;
}

}  // namespace domlab
