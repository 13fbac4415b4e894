#include "domlab/erratum.hpp"

#include "domlab/errors.hpp"

namespace domlab {

namespace {

// Each claim is re-checked on the smallest instance where it disagrees with
// exact recomputation; the instances are fixed so reports are reproducible.
struct ClaimInstance {
  Family family;
  int n;
  int m;
  bool upper_bound;
};

ClaimInstance instance_of(ClaimId id) {
  switch (id) {
    case ClaimId::SitthiwiratthamPath: return {Family::PathClique, 6, 8, false};
    case ClaimId::SitthiwiratthamCycle: return {Family::CycleClique, 6, 8, false};
    case ClaimId::GravierBound: return {Family::PathClique, 6, 5, true};
  }
  throw DomainError("unknown claim");
}

}  // namespace

const char* claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::SitthiwiratthamPath: return "sitthiwirattham-path";
    case ClaimId::SitthiwiratthamCycle: return "sitthiwirattham-cycle";
    case ClaimId::GravierBound: return "gravier-bound";
  }
  return "?";
}

std::optional<ClaimId> claim_from_name(const std::string& name) {
  for (ClaimId id : {ClaimId::SitthiwiratthamPath, ClaimId::SitthiwiratthamCycle,
                     ClaimId::GravierBound}) {
    if (name == claim_name(id)) return id;
  }
  return std::nullopt;
}

long long sitthiwirattham_formula(int n, int m, int gamma_G) {
  if (n < 1 || m < 1 || gamma_G < 0) throw DomainError("arguments must be positive");
  long long by_rows = static_cast<long long>(n) * gamma_G;
  long long by_columns = static_cast<long long>(m) * ((n + 2) / 3);
  return by_rows < by_columns ? by_rows : by_columns;
}

long long gravier_bound(int n, int gamma_G) {
  if (n < 1 || gamma_G < 0) throw DomainError("arguments must be positive");
  return 2LL * gamma_G * (n / 4 + 1);
}

const char* claim_verdict_name(ClaimVerdict v) {
  return v == ClaimVerdict::Refuted ? "refuted" : "consistent";
}

ErratumReport run_erratum(ClaimId id, std::uint64_t check_budget) {
  ClaimInstance inst = instance_of(id);
  ErratumReport rep;
  rep.claim = id;
  rep.family = inst.family;
  rep.n = inst.n;
  rep.m = inst.m;
  rep.upper_bound_claim = inst.upper_bound;

  SolveResult clique = solve_min_reference(make_clique(inst.m), ParamKind::Dom, check_budget);
  int gamma_G = clique.value;
  rep.claimed = inst.upper_bound ? gravier_bound(inst.n, gamma_G)
                                 : sitthiwirattham_formula(inst.n, inst.m, gamma_G);

  Graph g = product_instance(inst.family, inst.n, inst.m);
  SolveResult exact = solve_min_reference(g, ParamKind::Dom, check_budget);
  rep.exact = exact.value;
  rep.certificate = exact.certificate;
  rep.checks = clique.nodes + exact.nodes;

  bool refuted = inst.upper_bound ? rep.exact > rep.claimed : rep.exact != rep.claimed;
  rep.verdict = refuted ? ClaimVerdict::Refuted : ClaimVerdict::Consistent;
  return rep;
}

std::vector<ErratumReport> run_all_errata(std::uint64_t check_budget) {
  std::vector<ErratumReport> out;
  for (ClaimId id : {ClaimId::SitthiwiratthamPath, ClaimId::SitthiwiratthamCycle,
                     ClaimId::GravierBound}) {
    out.push_back(run_erratum(id, check_budget));
  }
  return out;
}

}  // namespace domlab
