#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

enum class ParamKind { Dom, Idom, Dom12, TwoDom, Sdom };

const char* param_name(ParamKind k);    // "dom", "idom", "dom12", "2dom", "sdom"
const char* param_symbol(ParamKind k);  // "gamma", "i", "gamma_[1,2]", ...
std::optional<ParamKind> param_from_name(const std::string& name);

enum class FailReason {
  Undominated,     // no closed neighbor in the set
  Overdominated,   // more than two in-set neighbors outside a [1,2]-set
  Underdominated,  // fewer than two in-set neighbors outside a 2-dominating set
  DependentPair,   // two set members adjacent
  Undefendable,    // no in-set neighbor can swap out without losing domination
};

const char* fail_reason_name(FailReason r);

struct Verdict {
  bool ok = false;
  std::optional<int> witness;  // smallest failing vertex
  std::optional<FailReason> reason;
  // Secure-domination success: defenders[w] is the chosen guard for each
  // vertex outside the set (-1 elsewhere). Empty for other checks.
  std::vector<int> defenders;

  explicit operator bool() const { return ok; }

  static Verdict pass() { return Verdict{true, std::nullopt, std::nullopt, {}}; }
  static Verdict fail(int witness, FailReason reason) {
    return Verdict{false, witness, reason, {}};
  }
};

Verdict is_dominating(const Graph& g, const VertexSet& s);
Verdict is_independent(const Graph& g, const VertexSet& s);
Verdict is_12_set(const Graph& g, const VertexSet& s);
Verdict is_2_dominating(const Graph& g, const VertexSet& s);
Verdict is_secure_dominating(const Graph& g, const VertexSet& s);

Verdict check_param(const Graph& g, ParamKind kind, const VertexSet& s);

// Per-column membership counts of a set in a product instance. Window sums
// follow the boundary convention: paths see empty virtual columns 0 and n+1,
// cycles wrap; a window counts each distinct column once.
struct ColumnProfile {
  Family family = Family::PathClique;
  std::vector<int> counts;  // counts[i-1] = |S  intersect  X_i|

  int size() const { return static_cast<int>(counts.size()); }
  int at(int i) const;          // 1-based; 0 beyond the ends of a path
  int window_sum(int i) const;  // over the distinct columns among {i-1, i, i+1}
};

ColumnProfile column_profile(const Graph& g, const VertexSet& s);

// Whether the pair {a, b} dominates every vertex of column i. Requires a
// product instance with m >= 3; column is 1-based.
bool doubleton_dominates_column(const Graph& g, int a, int b, int column);

}  // namespace domlab
