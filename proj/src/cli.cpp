#include "cokernel/cli.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cokernel/gadgets.hpp"
#include "cokernel/generators.hpp"
#include "cokernel/io.hpp"
#include "cokernel/kernelizer.hpp"
#include "cokernel/solver.hpp"

namespace cokernel::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string variant = "del";
  std::optional<int> k;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string format = "text";
  std::string output;
};

struct Outcome {
  int code = kYes;
  std::string out;
  std::string err;
};

// Thrown for bad flag combinations detected after parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int require_k(const Globals& g) {
  if (!g.k) throw UsageError("--k is required");
  if (*g.k < 0) throw UsageError("--k must be >= 0");
  return *g.k;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const OracleTooLarge& e) {
    return {kGuard, "", std::string("guard: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kInputError, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInputError, "", std::string("error: ") + e.what() + "\n"};
  }
}

// Runs `one` over every file with up to `jobs` workers; output keeps input order.
int fan_out(const std::vector<std::string>& files, int jobs,
            const std::function<Outcome(const std::string&)>& one, std::ostream& out, std::ostream& err) {
  std::vector<Outcome> results(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();)
      results[i] = guarded([&] { return one(files[i]); });
  };
  const auto n = static_cast<std::size_t>(std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(files.size(), 1))));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < files.size(); ++i) {
    if (files.size() > 1) out << "# file " << files[i] << '\n';
    out << results[i].out;
    err << results[i].err;
  }
  // worst outcome wins: input error, then guard, then NO
  int worst = kYes;
  for (const auto& r : results) {
    if (r.code == kInputError) return kInputError;
    if (r.code == kGuard) worst = kGuard;
    else if (r.code == kNo && worst == kYes) worst = kNo;
  }
  return worst;
}

void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.output.empty()) out << text;
  else write_file(g.output, text);
}

json edges_json(const Graph& g) {
  json e = json::array();
  for (const auto& p : g.edges()) e.push_back({p.u, p.v});
  return e;
}

Outcome kernelize_file(const Globals& g, const std::string& path) {
  const int k = require_k(g);
  const Variant v = parse_variant(g.variant);
  const Graph graph = parse_graph(read_file(path));
  const KernelResult r = kernelize({graph, k, v});
  Outcome o;
  o.code = r.verdict == Verdict::no ? kNo : kYes;
  std::ostringstream os;
  const std::string header = "# verdict " + std::string(to_string(r.verdict)) + " k " +
                             std::to_string(r.instance.k) + " variant " +
                             std::string(to_string(r.instance.variant)) + "\n";
  if (g.format == "json") {
    json trace = json::array();
    for (const auto& a : r.trace) trace.push_back(to_json(a));
    const json doc{{"verdict", std::string(to_string(r.verdict))},
                   {"k", r.instance.k},
                   {"variant", std::string(to_string(r.instance.variant))},
                   {"n", r.instance.graph.vertex_count()},
                   {"edges", edges_json(r.instance.graph)},
                   {"reduced_vertex_count", r.reduced_vertex_count},
                   {"trace", std::move(trace)}};
    os << doc.dump() << '\n';
  } else {
    if (g.output.empty()) os << header << format_graph(r.instance.graph);
    else write_file(g.output, header + format_graph(r.instance.graph));
    for (const auto& a : r.trace) os << to_json(a).dump() << '\n';
  }
  o.out = os.str();
  return o;
}

Outcome solve_file(const Globals& g, const std::string& path) {
  const int k = require_k(g);
  const Variant v = parse_variant(g.variant);
  const Graph graph = parse_graph(read_file(path));
  const Solution s = solve({graph, k, v});
  Outcome o;
  o.code = s.found ? kYes : kNo;
  if (g.format == "json") {
    json edits = json::array();
    for (const auto& p : s.edits.pairs)
      edits.push_back({graph.has_edge(p.u, p.v) ? "del" : "add", p.u, p.v});
    o.out = json{{"found", s.found}, {"edits", std::move(edits)}}.dump() + "\n";
  } else {
    o.out = s.found ? format_edit_list(graph, s.edits) : "NO\n";
  }
  return o;
}

Outcome gadget_result(const Globals& g, const std::string& text, json params) {
  Outcome o;
  std::ostringstream os;
  if (g.output.empty()) os << text;
  else write_file(g.output, text);
  os << params.dump() << '\n';
  o.out = os.str();
  return o;
}

TripartiteWitness tripartition_or_throw(const BicoloredInstance& inst) {
  auto w = find_tripartition(inst.graph);
  if (!w) throw std::invalid_argument("graph is not 3-colourable");
  return *w;
}

json params(std::string_view gadget, int k, int k_out, int n, int n_out) {
  return {{"gadget", std::string(gadget)}, {"k", k}, {"k_out", k_out}, {"n", n}, {"n_out", n_out}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cograph edge-modification kernels and forbidden-pattern gadgets", "cokernel"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--variant", g.variant, "del, comp or edit")
      ->check(CLI::IsMember({"del", "deletion", "comp", "completion", "edit", "edition"}));
  app.add_option("--k", g.k, "parameter");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--jobs", g.jobs, "worker threads over input files")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", g.output, "output file");

  std::function<Outcome()> action;
  std::vector<std::string> files;

  auto* kern = app.add_subcommand("kernelize", "reduce instances to a kernel");
  kern->add_option("files", files, "graph files")->required();
  kern->callback([&] {
    action = [&]() -> Outcome {
      if (!g.output.empty() && files.size() > 1) throw UsageError("-o takes a single input file");
      std::ostringstream os, es;
      const int code = fan_out(files, g.jobs, [&](const std::string& f) { return kernelize_file(g, f); }, os, es);
      return {code, os.str(), es.str()};
    };
  });

  auto* solv = app.add_subcommand("solve", "minimum edit set within budget k");
  solv->add_option("files", files, "graph files")->required();
  solv->callback([&] {
    action = [&]() -> Outcome {
      std::ostringstream os, es;
      const int code = fan_out(files, g.jobs, [&](const std::string& f) { return solve_file(g, f); }, os, es);
      return {code, os.str(), es.str()};
    };
  });

  auto* gad = app.add_subcommand("gadget", "lower-bound constructions");
  gad->require_subcommand(1);
  std::string in;
  int r = 0, l = 0, cl_len = 12, pl_len = 13;
  std::optional<int> k_new;

  gad->add_subcommand("vc", "vertex cover -> bicoloured instance")->add_option("file", in)->required();
  auto* pad = gad->add_subcommand("pad", "add 1-edges and forcing gadgets");
  pad->add_option("file", in)->required();
  pad->add_option("--r", r, "isolated 1-edges to add")->check(CLI::NonNegativeNumber);
  pad->add_option("--k-new", k_new, "new budget")->required();
  gad->add_subcommand("compose", "OR of bicoloured instances")->add_option("files", files)->required();
  gad->add_subcommand("tripartite", "make the graph 3-partite")->add_option("file", in)->required();
  gad->add_subcommand("zeroelim", "replace 0-edges by apex triangles")->add_option("file", in)->required();
  auto* cl = gad->add_subcommand("cl", "annotated C_l-free deletion");
  cl->add_option("file", in)->required();
  cl->add_option("--l", cl_len, "cycle length")->capture_default_str();
  auto* pl = gad->add_subcommand("pl", "annotated P_l-free deletion");
  pl->add_option("file", in)->required();
  pl->add_option("--l", pl_len, "path length")->capture_default_str();
  gad->add_subcommand("deannotate", "annotated -> plain deletion")->add_option("file", in)->required();

  for (auto* sub : gad->get_subcommands({})) {
    const std::string name = sub->get_name();
    sub->callback([&, name] {
      action = [&, name]() -> Outcome {
        if (name == "vc") {
          const Graph graph = parse_graph(read_file(in));
          const int k = require_k(g);
          const auto o = vc_to_n13et(graph, k);
          return gadget_result(g, format_bicolored(o),
                               params(name, k, o.k, graph.vertex_count(), o.graph.vertex_count()));
        }
        if (name == "compose") {
          std::vector<BicoloredInstance> xs;
          for (const auto& f : files) xs.push_back(parse_bicolored(read_file(f)));
          const auto o = or_compose_normalized(xs);
          int k = 0, n = 0;
          std::size_t s = 0;
          for (const auto& x : xs) {
            k = std::max(k, x.k);
            n += x.graph.vertex_count();
            s = std::max(s, x.one_edges().size());
          }
          json p = params(name, k, o.k, n, o.graph.vertex_count());
          p["t"] = xs.size();
          p["s"] = s;
          return gadget_result(g, format_bicolored(o), p);
        }
        if (name == "deannotate") {
          const auto a = parse_annotated(read_file(in));
          const auto o = annotated_to_plain(a);
          const std::string text = "# k " + std::to_string(o.k) + " pattern " +
                                   std::string(to_string(o.pattern.kind)) + " " +
                                   std::to_string(o.pattern.length) + "\n" + format_graph(o.graph);
          return gadget_result(g, text, params(name, a.k, o.k, a.graph.vertex_count(), o.graph.vertex_count()));
        }
        const auto b = parse_bicolored(read_file(in));
        const int n = b.graph.vertex_count();
        if (name == "pad") {
          const auto o = pad_instance(b, r, *k_new);
          return gadget_result(g, format_bicolored(o), params(name, b.k, o.k, n, o.graph.vertex_count()));
        }
        if (name == "tripartite") {
          const auto o = tripartite_transform(b).first;
          return gadget_result(g, format_bicolored(o), params(name, b.k, o.k, n, o.graph.vertex_count()));
        }
        if (name == "zeroelim") {
          const auto o = eliminate_zero_edges(b);
          return gadget_result(g, format_bicolored(o), params(name, b.k, o.k, n, o.graph.vertex_count()));
        }
        const auto w = tripartition_or_throw(b);
        const int len = name == "cl" ? cl_len : pl_len;
        const auto h = name == "cl" ? n13et_to_cl(b, w, len) : n13et_to_pl(b, w, len);
        json p = params(name, b.k, h.instance.k, n, h.instance.graph.vertex_count());
        p["l"] = len;
        p["gadgets"] = h.gadgets.size();
        return gadget_result(g, format_annotated(h.instance), p);
      };
    });
  }

  auto* ver = app.add_subcommand("verify", "check solutions, gadget claims and kernel bounds");
  ver->require_subcommand(1);
  std::string edits_file, pattern = "cycle";
  long node_limit = 50'000'000;
  auto* vsol = ver->add_subcommand("solution", "check an edit list");
  vsol->add_option("graph", in)->required();
  vsol->add_option("edits", edits_file)->required();
  vsol->callback([&] {
    action = [&]() -> Outcome {
      const int k = require_k(g);
      const Graph graph = parse_graph(read_file(in));
      const EditSet f = parse_edit_list(read_file(edits_file), parse_variant(g.variant));
      const bool ok = verify_solution(graph, f, k);
      if (g.format == "json")
        return {ok ? kYes : kNo, json{{"ok", ok}, {"size", f.size()}, {"k", k}}.dump() + "\n", ""};
      return {ok ? kYes : kNo, std::string(ok ? "ok" : "fail") + " size " + std::to_string(f.size()) + " k " + std::to_string(k) + "\n", ""};
    };
  });
  auto* vclaim = ver->add_subcommand("claim", "exhaustive check of induced C_l / P_l copies");
  vclaim->add_option("file", in, "bicoloured source without 0-edges")->required();
  vclaim->add_option("--pattern", pattern)->check(CLI::IsMember({"cycle", "path"}));
  vclaim->add_option("--l", l, "pattern length (default 12 for cycles, 13 for paths)");
  vclaim->add_option("--node-limit", node_limit);
  vclaim->callback([&] {
    action = [&]() -> Outcome {
      const auto b = parse_bicolored(read_file(in));
      const auto w = tripartition_or_throw(b);
      const bool cycle = pattern == "cycle";
      const int len = l > 0 ? l : (cycle ? 12 : 13);
      const auto h = cycle ? n13et_to_cl(b, w, len) : n13et_to_pl(b, w, len);
      const auto rep = claim_verifier(h, b, node_limit);
      const int code = !rep.conclusive ? kGuard : rep.ok() ? kYes : kNo;
      const json doc{{"conclusive", rep.conclusive}, {"found", rep.found},     {"predicted", rep.predicted},
                     {"unexpected", rep.unexpected}, {"missing", rep.missing}, {"ok", rep.ok()}};
      if (g.format == "json") return {code, doc.dump() + "\n", ""};
      std::ostringstream os;
      os << "found " << rep.found << " predicted " << rep.predicted << " unexpected " << rep.unexpected.size()
         << " missing " << rep.missing.size() << (rep.conclusive ? "" : " INCONCLUSIVE") << '\n';
      return {code, os.str(), ""};
    };
  });
  auto* vbound = ver->add_subcommand("kernel-bound", "kernel size against the cubic bound");
  vbound->add_option("graph", in)->required();
  vbound->callback([&] {
    action = [&]() -> Outcome {
      const int k = require_k(g);
      const Graph graph = parse_graph(read_file(in));
      const auto res = kernelize({graph, k, parse_variant(g.variant)});
      const long long bound = kernel_bound(k);
      const bool within = res.reduced_vertex_count <= bound;
      const json doc{{"n", graph.vertex_count()},
                     {"tight_size", tight_family_size(k)},
                     {"kernel_bound", bound},
                     {"rules_applied", res.trace.size()},
                     {"reduced_vertex_count", res.reduced_vertex_count},
                     {"verdict", std::string(to_string(res.verdict))},
                     {"within_bound", within}};
      if (g.format == "json") return {within ? kYes : kNo, doc.dump() + "\n", ""};
      std::ostringstream os;
      os << "n " << graph.vertex_count() << " tight_size " << tight_family_size(k) << " kernel_bound " << bound
         << " rules_applied " << res.trace.size() << " reduced " << res.reduced_vertex_count
         << (within ? " ok" : " exceeds") << '\n';
      return {within ? kYes : kNo, os.str(), ""};
    };
  });

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  int n = 0;
  auto* gcog = gen->add_subcommand("cograph", "random cograph");
  gcog->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  gcog->callback([&] {
    action = [&]() -> Outcome {
      Outcome o;
      std::ostringstream os;
      emit(g, os, format_graph(random_cograph(g.seed, n)));
      o.out = os.str();
      return o;
    };
  });
  auto* gpl = gen->add_subcommand("planted", "cograph with k planted edits");
  gpl->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  gpl->callback([&] {
    action = [&]() -> Outcome {
      const int k = require_k(g);
      const Variant v = parse_variant(g.variant);
      const auto inst = generate_planted({g.seed, n, k, v});
      Outcome o;
      std::ostringstream os;
      emit(g, os,
           "# k " + std::to_string(k) + " variant " + std::string(to_string(v)) + " seed " +
               std::to_string(g.seed) + "\n" + format_graph(inst.graph));
      o.out = os.str();
      return o;
    };
  });
  auto* gtight = gen->add_subcommand("tight", "reduced deletion instance of size k(k+1)^2+k");
  gtight->callback([&] {
    action = [&]() -> Outcome {
      const int k = require_k(g);
      Outcome o;
      std::ostringstream os;
      emit(g, os, "# k " + std::to_string(k) + " variant deletion\n" + format_graph(tight_family(k)));
      o.out = os.str();
      return o;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, es;
    const int code = app.exit(e, os, es);
    out << os.str();
    err << es.str();
    return code == 0 ? kYes : kInputError;
  }
  if (!action) {
    err << "no command\n";
    return kInputError;
  }
  const Outcome o = guarded(action);
  out << o.out;
  err << o.err;
  return o.code;
}

}  // namespace cokernel::cli
