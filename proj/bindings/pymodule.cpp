#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "domlab/construct.hpp"
#include "domlab/edge_list.hpp"
#include "domlab/erratum.hpp"
#include "domlab/errors.hpp"
#include "domlab/formulas.hpp"
#include "domlab/graph.hpp"
#include "domlab/solve.hpp"
#include "domlab/verify.hpp"

namespace py = pybind11;
using namespace domlab;

namespace {

ParamKind param_arg(const std::string& name) {
  auto k = param_from_name(name);
  if (!k) throw DomainError("unknown parameter \"" + name + "\"");
  return *k;
}

Family family_arg(const std::string& name) {
  auto f = family_from_name(name);
  if (!f && name == "path") f = Family::PathClique;
  if (!f && name == "cycle") f = Family::CycleClique;
  if (!f) throw DomainError("unknown family \"" + name + "\"");
  return *f;
}

VertexSet set_from_ids(const Graph& g, const std::vector<int>& ids) {
  VertexSet s(g.vertex_count());
  for (int v : ids) s.add(v);
  return s;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["ok"] = v.ok;
  d["witness"] = v.witness ? py::cast(*v.witness) : py::object(py::none());
  d["reason"] =
      v.reason ? py::cast(std::string(fail_reason_name(*v.reason))) : py::object(py::none());
  py::list defenders;
  for (size_t w = 0; w < v.defenders.size(); ++w) {
    if (v.defenders[w] >= 0) {
      defenders.append(py::make_tuple(static_cast<int>(w), v.defenders[w]));
    }
  }
  d["defenders"] = defenders;
  return d;
}

py::dict solve_dict(const SolveResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["certificate"] = r.certificate.to_vector();
  d["nodes"] = r.nodes;
  d["canonical"] = r.canonical;
  return d;
}

py::object formula_dict(const std::optional<FormulaResult>& r) {
  if (!r) return py::none();
  py::dict d;
  d["value"] = r->value;
  d["source"] = formula_source_name(r->source);
  d["family"] = family_name(r->guard.family);
  d["param"] = param_name(r->guard.kind);
  d["n"] = r->guard.n;
  d["m"] = r->guard.m;
  return d;
}

py::dict construction_dict(const ConstructionCertificate& cc) {
  py::dict d;
  d["kind"] = construction_name(cc.kind);
  d["param"] = param_name(cc.param);
  d["n"] = cc.n;
  d["m"] = cc.m;
  d["set"] = cc.set.to_vector();
  py::dict checks;
  for (const auto& nv : cc.checks) checks[nv.check.c_str()] = verdict_dict(nv.verdict);
  d["checks"] = checks;
  d["primary_ok"] = cc.primary_ok();
  d["all_ok"] = cc.all_ok();
  return d;
}

py::dict erratum_dict(const ErratumReport& rep) {
  py::dict d;
  d["claim"] = claim_name(rep.claim);
  d["family"] = family_name(rep.family);
  d["n"] = rep.n;
  d["m"] = rep.m;
  d["claimed"] = rep.claimed;
  d["exact"] = rep.exact;
  d["upper_bound_claim"] = rep.upper_bound_claim;
  d["verdict"] = claim_verdict_name(rep.verdict);
  d["certificate"] = rep.certificate.to_vector();
  d["checks"] = rep.checks;
  return d;
}

}  // namespace

PYBIND11_MODULE(domlab, mod) {
  mod.doc() = "domination parameters on direct products of cliques with paths and cycles";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const ContractError& e) {
      PyErr_SetString(PyExc_TypeError, e.what());
    } catch (const domlab::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(mod, "Graph")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def_property_readonly("meta", [](const Graph& g) -> py::object {
        if (!g.meta()) return py::none();
        return py::make_tuple(family_name(g.meta()->family), g.meta()->n, g.meta()->m);
      });

  mod.def("product_instance", [](const std::string& family, int n, int m) {
    return product_instance(family_arg(family), n, m);
  });
  mod.def("make_path", &make_path);
  mod.def("make_cycle", &make_cycle);
  mod.def("make_clique", &make_clique);
  mod.def("graph_from_edges", &graph_from_edges);
  mod.def("direct_product", &direct_product);
  mod.def("connected_components", &connected_components);
  mod.def("induced_subgraph", &induced_subgraph);

  mod.def("coords", [](const Graph& g, int v) { return coords_of(g).coords(v); });
  mod.def("index", [](const Graph& g, int i, int j) { return coords_of(g).index(i, j); });
  mod.def("column", [](const Graph& g, int i) { return coords_of(g).column(i).to_vector(); });
  mod.def("row", [](const Graph& g, int j) { return coords_of(g).row(j).to_vector(); });

  mod.def("check_param", [](const Graph& g, const std::string& param,
                            const std::vector<int>& ids) {
    return verdict_dict(check_param(g, param_arg(param), set_from_ids(g, ids)));
  });
  mod.def("column_profile", [](const Graph& g, const std::vector<int>& ids) {
    return column_profile(g, set_from_ids(g, ids)).counts;
  });
  mod.def("window_sum", [](const Graph& g, const std::vector<int>& ids, int i) {
    return column_profile(g, set_from_ids(g, ids)).window_sum(i);
  });
  mod.def("doubleton_dominates_column", &doubleton_dominates_column);

  mod.def(
      "solve_min",
      [](const Graph& g, const std::string& param, std::uint64_t budget, bool pruning,
         bool canonical, int threads) {
        SolveConfig cfg;
        cfg.node_budget = budget;
        cfg.use_column_pruning = pruning;
        cfg.canonical_certificate = canonical;
        cfg.parallel_width = threads;
        return solve_dict(solve_min(g, param_arg(param), cfg));
      },
      py::arg("graph"), py::arg("param"), py::arg("budget") = kDefaultNodeBudget,
      py::arg("pruning") = true, py::arg("canonical") = false, py::arg("threads") = 0);
  mod.def(
      "solve_all_min",
      [](const Graph& g, const std::string& param, int size, std::uint64_t budget) {
        std::vector<std::vector<int>> out;
        for (const auto& s : solve_all_min(g, param_arg(param), size, budget)) {
          out.push_back(s.to_vector());
        }
        return out;
      },
      py::arg("graph"), py::arg("param"), py::arg("size"),
      py::arg("budget") = kDefaultNodeBudget);
  mod.def("lower_bound_columns", [](const Graph& g, const std::string& param) {
    return lower_bound_columns(g, param_arg(param));
  });
  mod.def(
      "certify",
      [](const Graph& g, const std::string& param, int claimed, const std::vector<int>& ids,
         std::uint64_t budget) {
        return certify(g, param_arg(param), claimed, set_from_ids(g, ids), budget);
      },
      py::arg("graph"), py::arg("param"), py::arg("claimed"), py::arg("ids"),
      py::arg("budget") = kDefaultNodeBudget);
  mod.def(
      "solve_min_reference",
      [](const Graph& g, const std::string& param, std::uint64_t budget) {
        return solve_dict(solve_min_reference(g, param_arg(param), budget));
      },
      py::arg("graph"), py::arg("param"), py::arg("budget") = kDefaultNodeBudget);

  mod.def("formula_value", [](const std::string& family, const std::string& param, int n, int m) {
    return formula_dict(formula_value(family_arg(family), param_arg(param), n, m));
  });
  mod.def("equal_params_claim", [](const std::string& family, int n, int m) {
    std::vector<std::vector<std::string>> out;
    for (const auto& group : equal_params_claim(family_arg(family), n, m)) {
      std::vector<std::string> names;
      for (ParamKind k : group) names.emplace_back(param_name(k));
      out.push_back(std::move(names));
    }
    return out;
  });

  mod.def("build_construction", [](const std::string& kind, int n, int m) {
    auto k = construction_from_name(kind);
    if (!k) throw DomainError("unknown construction \"" + kind + "\"");
    return build_construction(*k, n, m).to_vector();
  });
  mod.def("build_and_verify", [](const std::string& kind, int n, int m) {
    auto k = construction_from_name(kind);
    if (!k) throw DomainError("unknown construction \"" + kind + "\"");
    return construction_dict(build_and_verify(*k, n, m));
  });

  mod.def(
      "run_erratum",
      [](const std::string& claim, std::uint64_t budget) {
        auto id = claim_from_name(claim);
        if (!id) throw DomainError("unknown claim \"" + claim + "\"");
        return erratum_dict(run_erratum(*id, budget));
      },
      py::arg("claim"), py::arg("budget") = kDefaultNodeBudget);
  mod.def(
      "run_all_errata",
      [](std::uint64_t budget) {
        py::list out;
        for (const auto& rep : run_all_errata(budget)) out.append(erratum_dict(rep));
        return out;
      },
      py::arg("budget") = kDefaultNodeBudget);

  mod.def("edge_list_string", &edge_list_string);
  mod.def("parse_edge_list", [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  });
  mod.def("certificate_string", [](const Graph& g, const std::vector<int>& ids) {
    return certificate_string(g, set_from_ids(g, ids));
  });
  mod.def("parse_certificate", [](const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return read_certificate(in, g).to_vector();
  });

  mod.attr("PARAMS") = std::vector<std::string>{"dom", "idom", "dom12", "2dom", "sdom"};
  mod.attr("FAMILIES") = std::vector<std::string>{"path-clique", "cycle-clique"};
  mod.attr("DEFAULT_BUDGET") = kDefaultNodeBudget;
}
