#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domlab/graph.hpp"
#include "domlab/verify.hpp"

namespace domlab {

enum class ConstructionKind {
  DomCycle,           // C_n x K_m dominating set, n >= 6, m >= 3
  DomPath,            // P_n x K_m dominating set, n >= 3, m >= 3
  SdomCycleRow,       // row R_1 of C_n x K_m, n >= 3, m >= 3
  SdomPathRowPlus,    // R_1 plus two guards, P_n x K_m, n >= 3, m >= 4
  SdomPathM3Columns,  // full columns, P_n x K_3, n >= 3
  SdomC2,             // C_2 x K_m, m >= 3
};

const char* construction_name(ConstructionKind k);  // "dom-cycle", ...
std::optional<ConstructionKind> construction_from_name(const std::string& name);

Family construction_family(ConstructionKind k);
ParamKind construction_param(ConstructionKind k);  // Dom or Sdom

// The certificate set over product_instance(construction_family(kind), n, m).
// Throws DomainError naming the violated bound when (n, m) misses the guard.
VertexSet build_construction(ConstructionKind kind, int n, int m);

struct NamedVerdict {
  std::string check;
  Verdict verdict;
};

struct ConstructionCertificate {
  ConstructionKind kind;
  int n = 0;
  int m = 0;
  ParamKind param = ParamKind::Dom;
  VertexSet set;
  std::vector<NamedVerdict> checks;

  // The verifier of the construction's own parameter passed.
  bool primary_ok() const;
  bool all_ok() const;
};

// Builds the set and runs every applicable verifier; failed checks are
// reported in the certificate, never patched.
ConstructionCertificate build_and_verify(ConstructionKind kind, int n, int m);

}  // namespace domlab
