#include "domlab/formulas.hpp"

#include <string>

#include "domlab/errors.hpp"

namespace domlab {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

[[noreturn]] void gap(const std::string& what, FormulaGap g) { throw FormulaDomainError(what, g); }

void need_n(int n, int least, const char* name) {
  if (n < least) {
    gap(std::string(name) + " needs n >= " + std::to_string(least) + ", got " + std::to_string(n),
        FormulaGap::NTooSmall);
  }
}

void need_m(int m, int least, const char* name) {
  if (m < least) {
    gap(std::string(name) + " needs m >= " + std::to_string(least) + ", got " + std::to_string(m),
        FormulaGap::MTooSmall);
  }
}

FormulaResult make(int value, FormulaSource src, Family family, ParamKind kind, int n, int m) {
  return FormulaResult{value, src, FormulaGuard{family, kind, n, m}};
}

}  // namespace

const char* formula_gap_name(FormulaGap gap) {
  switch (gap) {
    case FormulaGap::NTooSmall: return "n-too-small";
    case FormulaGap::MTooSmall: return "m-too-small";
    case FormulaGap::UncoveredCase: return "uncovered-case";
  }
  return "?";
}

const char* formula_source_name(FormulaSource s) {
  switch (s) {
    case FormulaSource::CycleDomN2: return "cycle-dom-n2";
    case FormulaSource::CycleDomN3: return "cycle-dom-n3";
    case FormulaSource::CycleDomN4or5: return "cycle-dom-n4or5";
    case FormulaSource::CycleDom3k: return "cycle-dom-3k";
    case FormulaSource::CycleDom3k1: return "cycle-dom-3k1";
    case FormulaSource::CycleDom3k2: return "cycle-dom-3k2";
    case FormulaSource::PathDomViaC2: return "path-dom-via-c2";
    case FormulaSource::PathDom3k: return "path-dom-3k";
    case FormulaSource::PathDom3k1: return "path-dom-3k1";
    case FormulaSource::PathDom3k2: return "path-dom-3k2";
    case FormulaSource::K2DomPath: return "k2-dom-path";
    case FormulaSource::K2DomCycleOdd: return "k2-dom-cycle-odd";
    case FormulaSource::K2DomCycleEven: return "k2-dom-cycle-even";
    case FormulaSource::CycleSdomColumns: return "cycle-sdom-columns";
    case FormulaSource::C2SdomM3: return "c2-sdom-m3";
    case FormulaSource::C2SdomWide: return "c2-sdom-wide";
    case FormulaSource::PathSdomRowPlus: return "path-sdom-rowplus";
    case FormulaSource::PathSdomM3_3k: return "path-sdom-m3-3k";
    case FormulaSource::PathSdomM3_3k1: return "path-sdom-m3-3k1";
    case FormulaSource::PathSdomM3_3k2: return "path-sdom-m3-3k2";
    case FormulaSource::K2SdomPath: return "k2-sdom-path";
    case FormulaSource::K2SdomCycleOdd: return "k2-sdom-cycle-odd";
    case FormulaSource::K2SdomCycleEven: return "k2-sdom-cycle-even";
    case FormulaSource::SecureBasePath: return "secure-base-path";
    case FormulaSource::SecureBaseCycleSmall: return "secure-base-cycle-small";
    case FormulaSource::SecureBaseCycle: return "secure-base-cycle";
    case FormulaSource::TwoDomViaSdom: return "twodom-via-sdom";
  }
  return "?";
}

FormulaResult gamma_cycle(int n, int m) {
  need_n(n, 2, "gamma_cycle");
  need_m(m, 3, "gamma_cycle");
  auto out = [&](int v, FormulaSource s) {
    return make(v, s, Family::CycleClique, ParamKind::Dom, n, m);
  };
  if (n == 2) return out(2, FormulaSource::CycleDomN2);
  if (n == 3) return out(3, FormulaSource::CycleDomN3);
  if (n <= 5) return out(4, FormulaSource::CycleDomN4or5);
  int k = n / 3;
  switch (n % 3) {
    case 0: return out(2 * k, FormulaSource::CycleDom3k);
    case 1: return out(2 * k + 1, FormulaSource::CycleDom3k1);
    default: return out(2 * k + 2, FormulaSource::CycleDom3k2);
  }
}

FormulaResult gamma_path(int n, int m) {
  need_n(n, 2, "gamma_path");
  need_m(m, 3, "gamma_path");
  auto out = [&](int v, FormulaSource s) {
    return make(v, s, Family::PathClique, ParamKind::Dom, n, m);
  };
  if (n == 2) return out(2, FormulaSource::PathDomViaC2);
  int k = n / 3;
  switch (n % 3) {
    case 0: return out(2 * k + 1, FormulaSource::PathDom3k);
    case 1: return out(2 * k + 2, FormulaSource::PathDom3k1);
    default: return out(2 * k + 2, FormulaSource::PathDom3k2);
  }
}

FormulaResult gamma_k2(Family family, int n) {
  if (family == Family::PathClique) {
    need_n(n, 1, "gamma_k2(path)");
    return make(2 * ceil_div(n, 3), FormulaSource::K2DomPath, family, ParamKind::Dom, n, 2);
  }
  need_n(n, 2, "gamma_k2(cycle)");
  if (n % 2 == 1) {
    return make(ceil_div(2 * n, 3), FormulaSource::K2DomCycleOdd, family, ParamKind::Dom, n, 2);
  }
  return make(2 * ceil_div(n, 3), FormulaSource::K2DomCycleEven, family, ParamKind::Dom, n, 2);
}

FormulaResult gamma_s_cycle(int n, int m) {
  need_n(n, 2, "gamma_s_cycle");
  need_m(m, 3, "gamma_s_cycle");
  auto out = [&](int v, FormulaSource s) {
    return make(v, s, Family::CycleClique, ParamKind::Sdom, n, m);
  };
  if (n == 2) {
    return m == 3 ? out(3, FormulaSource::C2SdomM3) : out(4, FormulaSource::C2SdomWide);
  }
  return out(n, FormulaSource::CycleSdomColumns);
}

FormulaResult gamma_s_path(int n, int m) {
  need_n(n, 3, "gamma_s_path");
  need_m(m, 3, "gamma_s_path");
  auto out = [&](int v, FormulaSource s) {
    return make(v, s, Family::PathClique, ParamKind::Sdom, n, m);
  };
  if (m >= 4) return out(n + 2, FormulaSource::PathSdomRowPlus);
  int k = n / 3;
  switch (n % 3) {
    case 0: return out(3 * k, FormulaSource::PathSdomM3_3k);
    case 1: return out(3 * k + 3, FormulaSource::PathSdomM3_3k1);
    default: return out(3 * k + 3, FormulaSource::PathSdomM3_3k2);
  }
}

FormulaResult gamma_s_k2(Family family, int n) {
  if (family == Family::PathClique) {
    need_n(n, 1, "gamma_s_k2(path)");
    return make(2 * ceil_div(3 * n, 7), FormulaSource::K2SdomPath, family, ParamKind::Sdom, n, 2);
  }
  need_n(n, 2, "gamma_s_k2(cycle)");
  if (n % 2 == 1) {
    return make(ceil_div(6 * n, 7), FormulaSource::K2SdomCycleOdd, family, ParamKind::Sdom, n, 2);
  }
  return make(2 * ceil_div(3 * n, 7), FormulaSource::K2SdomCycleEven, family, ParamKind::Sdom, n,
              2);
}

FormulaResult gamma_s_path_cycle_base(FactorKind kind, int n) {
  if (kind == FactorKind::Path) {
    need_n(n, 1, "gamma_s_path_cycle_base(path)");
    return make(ceil_div(3 * n, 7), FormulaSource::SecureBasePath, Family::PathClique,
                ParamKind::Sdom, n, 1);
  }
  if (kind == FactorKind::Cycle) {
    need_n(n, 2, "gamma_s_path_cycle_base(cycle)");
    if (n <= 3) {
      return make(1, FormulaSource::SecureBaseCycleSmall, Family::CycleClique, ParamKind::Sdom, n,
                  1);
    }
    return make(ceil_div(3 * n, 7), FormulaSource::SecureBaseCycle, Family::CycleClique,
                ParamKind::Sdom, n, 1);
  }
  gap("gamma_s_path_cycle_base covers paths and cycles only", FormulaGap::UncoveredCase);
}

FormulaResult gamma_2(Family family, int n, int m) {
  need_m(m, 3, "gamma_2");
  FormulaResult base = family == Family::CycleClique ? gamma_s_cycle(n, m) : gamma_s_path(n, m);
  return make(base.value, FormulaSource::TwoDomViaSdom, family, ParamKind::TwoDom, n, m);
}

std::vector<std::vector<ParamKind>> equal_params_claim(Family family, int n, int m) {
  (void)family;
  std::vector<std::vector<ParamKind>> groups;
  if (m >= 2 && n >= 6) {
    groups.push_back({ParamKind::Dom, ParamKind::Idom, ParamKind::Dom12});
  }
  if (m >= 3 && n >= 2) {
    groups.push_back({ParamKind::TwoDom, ParamKind::Sdom});
  }
  return groups;
}

std::optional<FormulaResult> formula_value(Family family, ParamKind kind, int n, int m) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (m < 1) throw DomainError("m must be at least 1");
  bool cycle = family == Family::CycleClique;
  auto guarded = [&](auto&& fn) -> std::optional<FormulaResult> {
    try {
      return fn();
    } catch (const FormulaDomainError&) {
      return std::nullopt;
    }
  };
  switch (kind) {
    case ParamKind::Dom:
      if (m == 2) return guarded([&] { return gamma_k2(family, n); });
      return guarded([&] { return cycle ? gamma_cycle(n, m) : gamma_path(n, m); });
    case ParamKind::Idom:
    case ParamKind::Dom12: {
      // equal to plain domination once n >= 6 with m >= 2
      if (n < 6 || m < 2) return std::nullopt;
      auto base = formula_value(family, ParamKind::Dom, n, m);
      if (!base) return std::nullopt;
      base->guard.kind = kind;
      return base;
    }
    case ParamKind::Sdom:
      if (m == 2) return guarded([&] { return gamma_s_k2(family, n); });
      if (m == 1) return std::nullopt;
      if (!cycle && n == 2) {
        // P_2 x K_m and C_2 x K_m are the same graph
        auto base = guarded([&] { return gamma_s_cycle(2, m); });
        if (base) base->guard.family = Family::PathClique;
        return base;
      }
      return guarded([&] { return cycle ? gamma_s_cycle(n, m) : gamma_s_path(n, m); });
    case ParamKind::TwoDom: {
      if (m < 3) return std::nullopt;
      if (!cycle && n == 2) {
        auto base = guarded([&] { return gamma_2(Family::CycleClique, 2, m); });
        if (base) base->guard.family = Family::PathClique;
        return base;
      }
      return guarded([&] { return gamma_2(family, n, m); });
    }
  }
  return std::nullopt;
}

}  // namespace domlab
