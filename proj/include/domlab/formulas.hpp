#pragma once

#include <optional>
#include <vector>

#include "domlab/graph.hpp"
#include "domlab/verify.hpp"

namespace domlab {

// One tag per proved branch, so a result pins down exactly which case fired.
enum class FormulaSource {
  CycleDomN2,
  CycleDomN3,
  CycleDomN4or5,
  CycleDom3k,
  CycleDom3k1,
  CycleDom3k2,
  PathDomViaC2,
  PathDom3k,
  PathDom3k1,
  PathDom3k2,
  K2DomPath,
  K2DomCycleOdd,
  K2DomCycleEven,
  CycleSdomColumns,
  C2SdomM3,
  C2SdomWide,
  PathSdomRowPlus,
  PathSdomM3_3k,
  PathSdomM3_3k1,
  PathSdomM3_3k2,
  K2SdomPath,
  K2SdomCycleOdd,
  K2SdomCycleEven,
  SecureBasePath,
  SecureBaseCycleSmall,
  SecureBaseCycle,
  TwoDomViaSdom,
};

const char* formula_source_name(FormulaSource s);

struct FormulaGuard {
  Family family;
  ParamKind kind;
  int n;
  int m;
};

struct FormulaResult {
  int value;
  FormulaSource source;
  FormulaGuard guard;
};

// Domination number of C_n x K_m; m >= 3, n >= 2.
FormulaResult gamma_cycle(int n, int m);

// Domination number of P_n x K_m; m >= 3, n >= 2 (P_2 equals C_2).
FormulaResult gamma_path(int n, int m);

// Domination number of the spine x K_2 products; path n >= 1, cycle n >= 2.
FormulaResult gamma_k2(Family family, int n);

// Secure domination number of C_n x K_m; m >= 3, n >= 2.
FormulaResult gamma_s_cycle(int n, int m);

// Secure domination number of P_n x K_m; m >= 3, n >= 3 (P_2 is served by
// gamma_s_cycle).
FormulaResult gamma_s_path(int n, int m);

// Secure domination number of the spine x K_2 products; path n >= 1,
// cycle n >= 2.
FormulaResult gamma_s_k2(Family family, int n);

// Secure domination number of the bare spine P_n (n >= 1) or C_n (n >= 2).
FormulaResult gamma_s_path_cycle_base(FactorKind kind, int n);

// 2-domination number; equals the secure domination number on the covered
// guards: m >= 3 with n >= 2 for cycles, n >= 3 for paths.
FormulaResult gamma_2(Family family, int n, int m);

// Parameter groups proved equal at (family, n, m): {Dom, Idom, Dom12} when
// m >= 2 and n >= 6; {Sdom, TwoDom} when m >= 3 and n >= 2.
std::vector<std::vector<ParamKind>> equal_params_claim(Family family, int n, int m);

// Closed form for the parameter at (family, n, m), or nullopt outside every
// proven guard.
std::optional<FormulaResult> formula_value(Family family, ParamKind kind, int n, int m);

}  // namespace domlab
