#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domlab/graph.hpp"
#include "domlab/solve.hpp"

namespace domlab {

// Published claims re-checked against exact recomputation.
enum class ClaimId {
  SitthiwiratthamPath,   // gamma(P_n x K_m) = min{n*gamma(K_m), m*ceil(n/3)}
  SitthiwiratthamCycle,  // gamma(C_n x K_m) = min{n*gamma(K_m), m*ceil(n/3)}
  GravierBound,          // gamma(P_n x K_m) <= 2*gamma(K_m)*(floor(n/4) + 1)
};

const char* claim_name(ClaimId id);  // "sitthiwirattham-path", ...
std::optional<ClaimId> claim_from_name(const std::string& name);

// min{n * gamma_G, m * ceil(n/3)}; the published closed form for spine x K_m.
long long sitthiwirattham_formula(int n, int m, int gamma_G);

// 2 * gamma_G * (floor(n/4) + 1); the published upper bound for P_n x G.
long long gravier_bound(int n, int gamma_G);

enum class ClaimVerdict { Refuted, Consistent };

const char* claim_verdict_name(ClaimVerdict v);

struct ErratumReport {
  ClaimId claim;
  Family family;
  int n = 0;
  int m = 0;
  long long claimed = 0;         // the published value or bound
  int exact = 0;                 // recomputed optimum
  bool upper_bound_claim = false;  // refuted iff exact exceeds claimed
  ClaimVerdict verdict = ClaimVerdict::Consistent;
  VertexSet certificate;         // optimal set witnessing `exact`
  std::uint64_t checks = 0;      // enumeration effort
};

// Re-checks one claim on its published counterexample instance using the
// baseline enumeration solver only.
ErratumReport run_erratum(ClaimId id, std::uint64_t check_budget = kDefaultNodeBudget);

std::vector<ErratumReport> run_all_errata(std::uint64_t check_budget = kDefaultNodeBudget);

}  // namespace domlab
