#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cokernel/gadgets.hpp"
#include "cokernel/generators.hpp"
#include "cokernel/io.hpp"
#include "cokernel/kernelizer.hpp"
#include "cokernel/modular_decomposition.hpp"
#include "cokernel/solver.hpp"

namespace py = pybind11;
using namespace cokernel;

namespace {

using PairList = std::vector<std::pair<int, int>>;

Graph make_graph(int n, const PairList& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

PairList pair_list(const std::vector<VertexPair>& ps) {
  PairList out;
  for (const auto& p : ps) out.emplace_back(p.u, p.v);
  return out;
}

EditSet make_edits(Variant v, const PairList& pairs) {
  EditSet f{v, {}};
  for (auto [a, b] : pairs) f.pairs.insert(VertexPair::of(a, b));
  return f;
}

std::map<VertexPair, int> make_coloring(const std::map<std::pair<int, int>, int>& c) {
  std::map<VertexPair, int> out;
  for (const auto& [p, b] : c) out[VertexPair::of(p.first, p.second)] = b;
  return out;
}

std::map<std::pair<int, int>, int> coloring_dict(const std::map<VertexPair, int>& c) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [p, b] : c) out[{p.u, p.v}] = b;
  return out;
}

}  // namespace

PYBIND11_MODULE(cokernel, m) {
  m.doc() = "Cograph edge-modification kernels, exact solvers and forbidden-pattern gadgets";

  py::register_exception<OracleTooLarge>(m, "OracleTooLarge", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IllegalEdit>(m, "IllegalEdit", PyExc_ValueError);

  py::enum_<Variant>(m, "Variant")
      .value("deletion", Variant::deletion)
      .value("completion", Variant::completion)
      .value("edition", Variant::edition);
  m.def("parse_variant", &parse_variant);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("toggle", &Graph::toggle)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("edges", [](const Graph& g) { return pair_list(g.edges()); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("complete_graph", &complete_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complement", &complement);
  m.def("disjoint_union", &disjoint_union);
  m.def("join", &join);
  m.def("connected_components", &connected_components);
  m.def("is_p4_free", &is_p4_free);
  m.def("enumerate_p4", [](const Graph& g) {
    std::vector<std::array<int, 4>> out;
    for (const auto& p : enumerate_p4(g)) out.push_back(p.vertices());
    return out;
  });
  m.def(
      "apply_edits",
      [](const Graph& g, const PairList& pairs, Variant v) { return apply_edits(g, make_edits(v, pairs)); },
      py::arg("graph"), py::arg("pairs"), py::arg("variant") = Variant::edition);

  // decomposition
  m.def("strong_modules", &strong_modules);
  m.def("is_module", [](const Graph& g, const std::vector<int>& s) { return is_module(g, s); });
  m.def("is_cograph", [](const Graph& g) { return std::holds_alternative<MDTree>(cotree(g)); });
  m.def("md_root_kind", [](const Graph& g) {
    static const char* names[] = {"leaf", "parallel", "series", "prime"};
    return std::string(names[static_cast<int>(modular_decomposition(g).root_node().kind)]);
  });

  // kernelization
  py::class_<ModInstance>(m, "ModInstance")
      .def(py::init([](const Graph& g, int k, Variant v) { return ModInstance{g, k, v}; }), py::arg("graph"),
           py::arg("k"), py::arg("variant") = Variant::deletion)
      .def_readwrite("graph", &ModInstance::graph)
      .def_readwrite("k", &ModInstance::k)
      .def_readwrite("variant", &ModInstance::variant);

  py::class_<RuleApplication>(m, "RuleApplication")
      .def_property_readonly("rule", [](const RuleApplication& a) { return std::string(to_string(a.rule)); })
      .def_readonly("vertices", &RuleApplication::vertices)
      .def_property_readonly("pairs", [](const RuleApplication& a) { return pair_list(a.pairs); })
      .def_readonly("k_before", &RuleApplication::k_before)
      .def_readonly("k_after", &RuleApplication::k_after);

  py::class_<KernelResult>(m, "KernelResult")
      .def_readonly("instance", &KernelResult::instance)
      .def_readonly("trace", &KernelResult::trace)
      .def_property_readonly("verdict", [](const KernelResult& r) { return std::string(to_string(r.verdict)); })
      .def_readonly("reduced_vertex_count", &KernelResult::reduced_vertex_count);

  m.def(
      "kernelize", [](const Graph& g, int k, Variant v) { return kernelize({g, k, v}); }, py::arg("graph"),
      py::arg("k"), py::arg("variant") = Variant::deletion, py::call_guard<py::gil_scoped_release>());
  m.def("kernel_bound", &kernel_bound);

  // solving
  m.def(
      "solve",
      [](const Graph& g, int k, Variant v, bool kern) -> std::optional<PairList> {
        const auto s = solve({g, k, v}, {kern});
        if (!s.found) return std::nullopt;
        PairList out;
        for (const auto& p : s.edits.pairs) out.emplace_back(p.u, p.v);
        return out;
      },
      py::arg("graph"), py::arg("k"), py::arg("variant") = Variant::deletion, py::arg("kernelize") = true,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "brute_force_optimal",
      [](const Graph& g, Variant v, std::optional<int> max_size) -> std::optional<int> {
        const auto r = brute_force_optimal(g, v, max_size);
        if (!r) return std::nullopt;
        return r->size;
      },
      py::arg("graph"), py::arg("variant"), py::arg("max_size") = py::none());
  m.def(
      "verify_solution",
      [](const Graph& g, const PairList& pairs, Variant v, int k) { return verify_solution(g, make_edits(v, pairs), k); },
      py::arg("graph"), py::arg("pairs"), py::arg("variant"), py::arg("k"));

  // generators
  m.def("random_cograph", &random_cograph, py::arg("seed"), py::arg("n"));
  m.def(
      "generate_planted",
      [](std::uint64_t seed, int n, int k, Variant v) { return generate_planted({seed, n, k, v}); },
      py::arg("seed"), py::arg("n"), py::arg("k"), py::arg("variant") = Variant::deletion);
  m.def("tight_family", &tight_family);
  m.def("tight_family_size", &tight_family_size);

  // gadgets
  py::class_<BicoloredInstance>(m, "BicoloredInstance")
      .def(py::init([](const Graph& g, const std::map<std::pair<int, int>, int>& c, int k) {
             BicoloredInstance b{g, make_coloring(c), k};
             b.check();
             return b;
           }),
           py::arg("graph"), py::arg("coloring"), py::arg("k"))
      .def_readonly("graph", &BicoloredInstance::graph)
      .def_readonly("k", &BicoloredInstance::k)
      .def_property_readonly("coloring", [](const BicoloredInstance& b) { return coloring_dict(b.coloring); })
      .def("one_edges", [](const BicoloredInstance& b) { return pair_list(b.one_edges()); })
      .def("zero_edges", [](const BicoloredInstance& b) { return pair_list(b.zero_edges()); })
      .def("uncolored_edges", [](const BicoloredInstance& b) { return pair_list(b.uncolored_edges()); });

  py::enum_<PatternKind>(m, "PatternKind").value("cycle", PatternKind::cycle).value("path", PatternKind::path);
  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](PatternKind k, int l) { return Pattern{k, l}; }))
      .def_readonly("kind", &Pattern::kind)
      .def_readonly("length", &Pattern::length);

  py::class_<AnnotatedInstance>(m, "AnnotatedInstance")
      .def_readonly("graph", &AnnotatedInstance::graph)
      .def_readonly("allowed", &AnnotatedInstance::allowed)
      .def_readonly("k", &AnnotatedInstance::k)
      .def_readonly("pattern", &AnnotatedInstance::pattern);

  py::class_<ClaimReport>(m, "ClaimReport")
      .def_readonly("conclusive", &ClaimReport::conclusive)
      .def_readonly("found", &ClaimReport::found)
      .def_readonly("predicted", &ClaimReport::predicted)
      .def_readonly("unexpected", &ClaimReport::unexpected)
      .def_readonly("missing", &ClaimReport::missing)
      .def("ok", &ClaimReport::ok);

  m.def(
      "n13et_min_weight",
      [](const BicoloredInstance& b, int max_uncolored) -> std::optional<int> {
        const auto e = solve_n13et_small(b, max_uncolored);
        if (!e) return std::nullopt;
        return e->weight;
      },
      py::arg("instance"), py::arg("max_uncolored") = 24);
  m.def("n13et_answer", &n13et_answer, py::arg("instance"), py::arg("max_uncolored") = 24);
  m.def("vc_to_n13et", &vc_to_n13et);
  m.def("pad_instance", &pad_instance, py::arg("instance"), py::arg("r"), py::arg("k_new"));
  m.def("or_compose", [](const std::vector<BicoloredInstance>& xs) { return or_compose_normalized(xs); });
  m.def("tripartite_transform", [](const BicoloredInstance& b) { return tripartite_transform(b).first; });
  m.def("eliminate_zero_edges", [](const BicoloredInstance& b) { return eliminate_zero_edges(b); });

  const auto reduction = [](bool cycle) {
    return [cycle](const BicoloredInstance& b, int l) {
      const auto w = find_tripartition(b.graph);
      if (!w) throw std::invalid_argument("graph is not 3-colourable");
      return cycle ? n13et_to_cl(b, *w, l) : n13et_to_pl(b, *w, l);
    };
  };
  py::class_<ForbiddenPatternReduction>(m, "ForbiddenPatternReduction")
      .def_readonly("instance", &ForbiddenPatternReduction::instance)
      .def_property_readonly("gadget_count",
                             [](const ForbiddenPatternReduction& r) { return r.gadgets.size(); });
  m.def("n13et_to_cl", reduction(true), py::arg("instance"), py::arg("l") = 12);
  m.def("n13et_to_pl", reduction(false), py::arg("instance"), py::arg("l") = 13);
  m.def("claim_verifier", &claim_verifier, py::arg("reduction"), py::arg("source"),
        py::arg("node_limit") = 50'000'000L);
  m.def("annotated_to_plain", [](const AnnotatedInstance& a) {
    const auto p = annotated_to_plain(a);
    return py::make_tuple(p.graph, p.k);
  });
  m.def(
      "count_induced_patterns",
      [](const Graph& g, PatternKind kind, int l) {
        long count = 0;
        for_each_induced_pattern(g, {kind, l}, [&](const std::vector<int>&) {
          ++count;
          return false;
        });
        return count;
      },
      py::arg("graph"), py::arg("kind"), py::arg("l"));

  // text formats
  m.def("parse_graph", &parse_graph);
  m.def("format_graph", &format_graph);
  m.def("parse_bicolored", &parse_bicolored);
  m.def("format_bicolored", &format_bicolored);
  m.def("parse_annotated", &parse_annotated);
  m.def("format_annotated", &format_annotated);
}
