#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domlab/construct.hpp"
#include "domlab/edge_list.hpp"
#include "domlab/erratum.hpp"
#include "domlab/errors.hpp"
#include "domlab/formulas.hpp"
#include "domlab/graph.hpp"
#include "domlab/solve.hpp"
#include "domlab/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace domlab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitDomain = 4;
constexpr int kExitBudget = 5;

std::uint64_t default_budget() {
  const char* env = std::getenv("DOMLAB_BUDGET");
  if (!env || !*env) return kDefaultNodeBudget;
  std::string text(env);
  std::uint64_t value = 0;
  try {
    size_t used = 0;
    value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw DomainError("DOMLAB_BUDGET must be a positive integer, got \"" + text + "\"");
  }
  if (value == 0) throw DomainError("DOMLAB_BUDGET must be positive");
  return value;
}

Family family_arg(const std::string& name) {
  auto f = family_from_name(name);
  if (!f && name == "path") f = Family::PathClique;
  if (!f && name == "cycle") f = Family::CycleClique;
  if (!f) throw DomainError("unknown family \"" + name + "\"");
  return *f;
}

ParamKind param_arg(const std::string& name) {
  auto k = param_from_name(name);
  if (!k) throw DomainError("unknown parameter \"" + name + "\"");
  return *k;
}

std::string instance_label(const ProductMeta& meta) {
  std::string spine = meta.family == Family::PathClique ? "P_" : "C_";
  return spine + std::to_string(meta.n) + " x K_" + std::to_string(meta.m);
}

json vertex_json(const Graph& g, int v) {
  if (g.meta()) {
    auto [i, j] = coords_of(g).coords(v);
    return json::array({i, j});
  }
  return json(v);
}

json cert_json(const Graph& g, const VertexSet& s) {
  json arr = json::array();
  s.for_each([&](int v) { arr.push_back(vertex_json(g, v)); });
  return arr;
}

std::string vertex_label(const Graph& g, int v) {
  if (g.meta()) {
    auto [i, j] = coords_of(g).coords(v);
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return std::to_string(v);
}

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      size_t used = 0;
      int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    size_t used = 0;
    std::string a = text.substr(0, sep), b = text.substr(sep + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw DomainError("range must be A..B with A <= B, got \"" + text + "\"");
  }
}

void write_text_or_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

// shared solver/verifier inputs
struct InstanceArgs {
  std::string family;
  int n = 0;
  int m = 0;
  std::string edges_file;

  void attach(CLI::App* cmd, bool allow_edges) {
    cmd->add_option("--family", family, "product family: path or cycle");
    cmd->add_option("-n,--n", n, "spine length");
    cmd->add_option("-m,--m", m, "clique size");
    if (allow_edges) {
      cmd->add_option("--edges", edges_file, "edge list file instead of a product instance");
    }
  }

  bool uses_file() const { return !edges_file.empty(); }

  Graph build() const {
    if (uses_file()) return read_edge_list_file(edges_file);
    if (family.empty() || n == 0 || m == 0) {
      throw DomainError("need --family, -n and -m (or --edges FILE)");
    }
    return product_instance(family_arg(family), n, m);
  }
};

struct SolverArgs {
  std::uint64_t budget = 0;
  int threads = 0;
  bool canonical = false;
  bool no_pruning = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget", budget, "search node budget (default from DOMLAB_BUDGET)");
    cmd->add_option("--threads", threads, "parallel width; 0 or 1 runs sequentially");
    cmd->add_flag("--canonical", canonical, "return the lexicographically least certificate");
    cmd->add_flag("--no-pruning", no_pruning, "disable the column window pruning");
  }

  SolveConfig config() const {
    SolveConfig cfg;
    cfg.node_budget = budget > 0 ? budget : default_budget();
    cfg.parallel_width = threads;
    cfg.canonical_certificate = canonical;
    cfg.use_column_pruning = !no_pruning;
    return cfg;
  }
};

int cmd_solve(const InstanceArgs& inst, const SolverArgs& sargs, const std::string& param,
              const std::string& format, const std::string& cert_out) {
  Graph g = inst.build();
  ParamKind kind = param_arg(param);
  SolveResult res = solve_min(g, kind, sargs.config());
  if (!cert_out.empty()) write_text_or_file(cert_out, certificate_string(g, res.certificate));
  if (format == "json") {
    json out;
    if (g.meta()) {
      out["family"] = family_name(g.meta()->family);
      out["n"] = g.meta()->n;
      out["m"] = g.meta()->m;
    }
    out["param"] = param_name(kind);
    out["symbol"] = param_symbol(kind);
    out["value"] = res.value;
    out["nodes"] = res.nodes;
    out["canonical"] = res.canonical;
    out["certificate"] = cert_json(g, res.certificate);
    std::cout << out.dump() << "\n";
  } else {
    if (g.meta()) std::cout << "instance = " << instance_label(*g.meta()) << "\n";
    std::cout << param_symbol(kind) << " = " << res.value << "\n";
    std::cout << "nodes = " << res.nodes << "\n";
    std::cout << "certificate:\n" << certificate_string(g, res.certificate);
  }
  return kExitOk;
}

int cmd_verify(const InstanceArgs& inst, const std::string& param, const std::string& cert_file,
               const std::string& format) {
  Graph g = inst.build();
  ParamKind kind = param_arg(param);
  VertexSet s = read_certificate_file(cert_file, g);
  Verdict v = check_param(g, kind, s);
  if (format == "json") {
    json out;
    out["param"] = param_name(kind);
    out["size"] = s.size();
    out["ok"] = v.ok;
    if (!v.ok) {
      out["reason"] = fail_reason_name(*v.reason);
      out["witness"] = vertex_json(g, *v.witness);
    } else if (kind == ParamKind::Sdom) {
      json plan = json::array();
      for (int w = 0; w < g.vertex_count(); ++w) {
        if (w < static_cast<int>(v.defenders.size()) && v.defenders[w] >= 0) {
          plan.push_back(json{{"vertex", vertex_json(g, w)},
                              {"guard", vertex_json(g, v.defenders[w])}});
        }
      }
      out["defense"] = plan;
    }
    std::cout << out.dump() << "\n";
  } else {
    if (v.ok) {
      std::cout << "ok\n";
    } else {
      std::cout << "fail: " << fail_reason_name(*v.reason) << " at " << vertex_label(g, *v.witness)
                << "\n";
    }
  }
  return v.ok ? kExitOk : kExitCheckFailed;
}

std::optional<ConstructionKind> construction_for(Family family, ParamKind kind, int n, int m) {
  if (kind == ParamKind::Dom) {
    return family == Family::CycleClique ? ConstructionKind::DomCycle : ConstructionKind::DomPath;
  }
  if (kind != ParamKind::Sdom) return std::nullopt;
  if (family == Family::CycleClique) {
    return n == 2 ? ConstructionKind::SdomC2 : ConstructionKind::SdomCycleRow;
  }
  if (m == 3) return ConstructionKind::SdomPathM3Columns;
  if (m >= 4) return ConstructionKind::SdomPathRowPlus;
  return std::nullopt;
}

int cmd_table(const std::string& param, const std::string& family, const std::string& n_range,
              const std::string& m_range, const SolverArgs& sargs) {
  ParamKind kind = param_arg(param);
  std::vector<Family> families;
  if (family == "both") {
    families = {Family::PathClique, Family::CycleClique};
  } else {
    families = {family_arg(family)};
  }
  Range nr = parse_range(n_range), mr = parse_range(m_range);
  bool all_agree = true;
  for (Family fam : families) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (int m = mr.lo; m <= mr.hi; ++m) {
        json row;
        row["family"] = family_name(fam);
        row["param"] = param_name(kind);
        row["n"] = n;
        row["m"] = m;
        auto closed = formula_value(fam, kind, n, m);
        row["formula"] = closed ? json(closed->value) : json(nullptr);
        Graph g = product_instance(fam, n, m);
        SolveResult res = solve_min(g, kind, sargs.config());
        row["solver"] = res.value;
        json built = nullptr;
        if (auto ck = construction_for(fam, kind, n, m)) {
          try {
            ConstructionCertificate cc = build_and_verify(*ck, n, m);
            if (cc.primary_ok()) built = cc.set.size();
          } catch (const DomainError&) {
            // outside the construction guard: leave the column empty
          }
        }
        row["construction"] = built;
        bool agree = true;
        if (closed && closed->value != res.value) agree = false;
        if (!built.is_null() && built.get<int>() != res.value) agree = false;
        row["agree"] = agree;
        all_agree = all_agree && agree;
        std::cout << row.dump() << "\n";
      }
    }
  }
  return all_agree ? kExitOk : kExitCheckFailed;
}

int cmd_construct(const std::string& kind_name, int n, int m, const std::string& format,
                  const std::string& out_file) {
  auto kind = construction_from_name(kind_name);
  if (!kind) throw DomainError("unknown construction \"" + kind_name + "\"");
  ConstructionCertificate cc = build_and_verify(*kind, n, m);
  Graph g = product_instance(construction_family(*kind), n, m);
  if (!out_file.empty()) write_text_or_file(out_file, certificate_string(g, cc.set));
  if (format == "json") {
    json out;
    out["kind"] = construction_name(*kind);
    out["param"] = param_name(cc.param);
    out["n"] = n;
    out["m"] = m;
    out["size"] = cc.set.size();
    json checks;
    for (const auto& nv : cc.checks) checks[nv.check] = nv.verdict.ok;
    out["checks"] = checks;
    out["primary_ok"] = cc.primary_ok();
    out["set"] = cert_json(g, cc.set);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "kind = " << construction_name(*kind) << "\n";
    std::cout << "param = " << param_name(cc.param) << "\n";
    std::cout << "size = " << cc.set.size() << "\n";
    for (const auto& nv : cc.checks) {
      std::cout << nv.check << ": ";
      if (nv.verdict.ok) {
        std::cout << "ok\n";
      } else {
        std::cout << "fail " << fail_reason_name(*nv.verdict.reason) << " at "
                  << vertex_label(g, *nv.verdict.witness) << "\n";
      }
    }
    std::cout << "certificate:\n" << certificate_string(g, cc.set);
  }
  return cc.primary_ok() ? kExitOk : kExitCheckFailed;
}

int cmd_formula(const std::string& family, const std::string& param, int n, int m,
                const std::string& format) {
  Family fam = family_arg(family);
  ParamKind kind = param_arg(param);
  auto res = formula_value(fam, kind, n, m);
  if (!res) {
    throw DomainError("no closed form covers " + std::string(param_name(kind)) + " on " +
                      instance_label(ProductMeta{fam, n, m}));
  }
  if (format == "json") {
    json out;
    out["family"] = family_name(fam);
    out["param"] = param_name(kind);
    out["symbol"] = param_symbol(kind);
    out["n"] = n;
    out["m"] = m;
    out["value"] = res->value;
    out["source"] = formula_source_name(res->source);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << param_symbol(kind) << " = " << res->value << "\n";
    std::cout << "source = " << formula_source_name(res->source) << "\n";
  }
  return kExitOk;
}

int cmd_erratum(const std::string& claim, std::uint64_t budget, const std::string& format) {
  std::uint64_t effective = budget > 0 ? budget : default_budget();
  std::vector<ErratumReport> reports;
  if (claim.empty()) {
    reports = run_all_errata(effective);
  } else {
    auto id = claim_from_name(claim);
    if (!id) throw DomainError("unknown claim \"" + claim + "\"");
    reports.push_back(run_erratum(*id, effective));
  }
  for (const auto& rep : reports) {
    if (format == "json") {
      json out;
      out["claim"] = claim_name(rep.claim);
      out["n"] = rep.n;
      out["m"] = rep.m;
      out["claimed"] = rep.claimed;
      out["exact"] = rep.exact;
      out["verdict"] = claim_verdict_name(rep.verdict);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << claim_name(rep.claim) << ": "
                << instance_label(ProductMeta{rep.family, rep.n, rep.m})
                << (rep.upper_bound_claim ? " claimed <= " : " claimed ") << rep.claimed
                << ", exact " << rep.exact << ", " << claim_verdict_name(rep.verdict) << "\n";
    }
  }
  return kExitOk;
}

int cmd_gen(const std::string& family, int n, int m, const std::string& out_file) {
  Graph g = product_instance(family_arg(family), n, m);
  write_text_or_file(out_file, edge_list_string(g));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domination, secure domination and relatives on clique products"};
  app.require_subcommand(1);

  InstanceArgs solve_inst, verify_inst;
  SolverArgs solve_sargs, table_sargs;
  std::string solve_param, solve_format = "text", solve_cert_out;
  auto* solve_cmd = app.add_subcommand("solve", "compute a parameter exactly");
  solve_inst.attach(solve_cmd, true);
  solve_sargs.attach(solve_cmd);
  solve_cmd->add_option("--param", solve_param, "dom, idom, dom12, 2dom or sdom")->required();
  solve_cmd->add_option("--format", solve_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_option("--cert-out", solve_cert_out, "write the certificate to a file");

  std::string verify_param, verify_cert, verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate file");
  verify_inst.attach(verify_cmd, true);
  verify_cmd->add_option("--param", verify_param, "dom, idom, dom12, 2dom or sdom")->required();
  verify_cmd->add_option("--cert", verify_cert, "certificate file")->required();
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string table_param, table_family = "both", table_n, table_m;
  auto* table_cmd =
      app.add_subcommand("table", "formula vs solver vs construction, one json row per instance");
  table_cmd->add_option("--param", table_param, "dom, idom, dom12, 2dom or sdom")->required();
  table_cmd->add_option("--family", table_family, "path, cycle or both");
  table_cmd->add_option("--n-range", table_n, "spine lengths, A..B")->required();
  table_cmd->add_option("--m-range", table_m, "clique sizes, A..B")->required();
  table_sargs.attach(table_cmd);

  std::string construct_kind, construct_format = "text", construct_out;
  int construct_n = 0, construct_m = 0;
  auto* construct_cmd = app.add_subcommand("construct", "build and verify a published set");
  construct_cmd->add_option("--kind", construct_kind, "construction name")->required();
  construct_cmd->add_option("-n,--n", construct_n, "spine length")->required();
  construct_cmd->add_option("-m,--m", construct_m, "clique size")->required();
  construct_cmd->add_option("--format", construct_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  construct_cmd->add_option("--out", construct_out, "write the set to a certificate file");

  std::string formula_family, formula_param, formula_format = "text";
  int formula_n = 0, formula_m = 0;
  auto* formula_cmd = app.add_subcommand("formula", "evaluate a closed form");
  formula_cmd->add_option("--family", formula_family, "path or cycle")->required();
  formula_cmd->add_option("--param", formula_param, "dom, idom, dom12, 2dom or sdom")->required();
  formula_cmd->add_option("-n,--n", formula_n, "spine length")->required();
  formula_cmd->add_option("-m,--m", formula_m, "clique size")->required();
  formula_cmd->add_option("--format", formula_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string erratum_claim, erratum_format = "text";
  std::uint64_t erratum_budget = 0;
  auto* erratum_cmd = app.add_subcommand("erratum", "re-check published claims");
  erratum_cmd->add_option("--claim", erratum_claim, "one claim by name; default all");
  erratum_cmd->add_option("--budget", erratum_budget, "enumeration budget");
  erratum_cmd->add_option("--format", erratum_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string gen_family, gen_out;
  int gen_n = 0, gen_m = 0;
  auto* gen_cmd = app.add_subcommand("gen", "emit a product instance as an edge list");
  gen_cmd->add_option("--family", gen_family, "path or cycle")->required();
  gen_cmd->add_option("-n,--n", gen_n, "spine length")->required();
  gen_cmd->add_option("-m,--m", gen_m, "clique size")->required();
  gen_cmd->add_option("--out", gen_out, "output file; default stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      return cmd_solve(solve_inst, solve_sargs, solve_param, solve_format, solve_cert_out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_inst, verify_param, verify_cert, verify_format);
    }
    if (table_cmd->parsed()) {
      return cmd_table(table_param, table_family, table_n, table_m, table_sargs);
    }
    if (construct_cmd->parsed()) {
      return cmd_construct(construct_kind, construct_n, construct_m, construct_format,
                           construct_out);
    }
    if (formula_cmd->parsed()) {
      return cmd_formula(formula_family, formula_param, formula_n, formula_m, formula_format);
    }
    if (erratum_cmd->parsed()) return cmd_erratum(erratum_claim, erratum_budget, erratum_format);
    if (gen_cmd->parsed()) return cmd_gen(gen_family, gen_n, gen_m, gen_out);
  } catch (const domlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << " (nodes=" << e.nodes()
              << ", proven lower bound " << e.best_lower() << ")\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ContractError& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
