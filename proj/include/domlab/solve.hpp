#pragma once

#include <cstdint>
#include <vector>

#include "domlab/graph.hpp"
#include "domlab/verify.hpp"

namespace domlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SolveConfig {
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool use_column_pruning = true;
  bool canonical_certificate = false;
  int parallel_width = 0;  // 0 or 1 = sequential
};

struct SolveResult {
  int value = 0;
  VertexSet certificate;
  std::uint64_t nodes = 0;
  double millis = 0.0;
  bool canonical = false;
};

// Exact minimum by staged depth-first cover search: stage k proves or
// disproves the existence of a satisfying set of size <= k, ascending from a
// sound lower bound. The certificate is the first set found, or the
// lexicographically least one when canonical_certificate is set.
SolveResult solve_min(const Graph& g, ParamKind kind, const SolveConfig& cfg = {});

// Every satisfying set of exactly the given size, in lexicographic order of
// sorted id sequences. Exhaustive; prunes only with kind-agnostic arguments.
std::vector<VertexSet> solve_all_min(const Graph& g, ParamKind kind, int size,
                                     std::uint64_t node_budget = kDefaultNodeBudget);

// Instance-level lower bound from the per-column counting arguments. Returns
// 0 unless the graph is a product instance with m >= 3.
int lower_bound_columns(const Graph& g, ParamKind kind);

// True iff the certificate has the claimed size, passes the kind's verifier,
// and no smaller set exists (re-proved by exhaustive enumeration at size
// claimed_value - 1).
bool certify(const Graph& g, ParamKind kind, int claimed_value, const VertexSet& certificate,
             std::uint64_t node_budget = kDefaultNodeBudget);

// Baseline solver: size-staged subset enumeration against self-contained
// definition checks. Deliberately simple; the budget caps predicate
// evaluations. The certificate is always the lexicographically least optimum.
SolveResult solve_min_reference(const Graph& g, ParamKind kind,
                                std::uint64_t check_budget = kDefaultNodeBudget);

}  // namespace domlab
