#include "cokernel/kernelizer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "cokernel/modular_decomposition.hpp"

namespace cokernel {

std::string_view to_string(RuleId r) {
  switch (r) {
    case RuleId::r1: return "R1";
    case RuleId::r2: return "R2";
    case RuleId::r3: return "R3";
    case RuleId::r4: return "R4";
    case RuleId::r5: return "R5";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::undecided: return "undecided";
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
  }
  return "?";
}

long long kernel_bound(int k) {
  const long long kk = k;
  return 8 * kk * kk * kk + 20 * kk * kk + 11 * kk;
}

ModInstance canonical_no(Variant v) { return {path_graph(4), 0, v}; }
ModInstance canonical_yes(int k, Variant v) { return {Graph(0), k, v}; }

namespace {

std::vector<int> map_back(const std::vector<int>& local, const std::vector<int>& new_to_old) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(new_to_old[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_independent(const Graph& g, const std::vector<int>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (g.has_edge(m[i], m[j])) return false;
  return true;
}

using Petal = std::array<VertexPair, 2>;  // the two P4 edges besides the core edge

bool petals_clash(const Petal& p, const Petal& q) {
  return p[0] == q[0] || p[0] == q[1] || p[1] == q[0] || p[1] == q[1];
}

class PetalPacker {
 public:
  PetalPacker(const std::vector<Petal>& petals, int target, long node_limit)
      : petals_(petals), target_(target), node_limit_(node_limit) {}

  int run() {
    // Greedy pass first; it settles most queries.
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < petals_.size(); ++i) {
      if (std::none_of(chosen.begin(), chosen.end(),
                       [&](std::size_t j) { return petals_clash(petals_[i], petals_[j]); }))
        chosen.push_back(i);
    }
    best_ = static_cast<int>(chosen.size());
    if (best_ >= target_) return target_;

    const std::size_t m = petals_.size();
    const std::size_t w = bits::word_count(m);
    compat_.assign(m * w, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (!petals_clash(petals_[i], petals_[j])) {
          bits::set(row(i), static_cast<int>(j));
          bits::set(row(j), static_cast<int>(i));
        }
    std::vector<bits::Word> all(w, 0);
    for (std::size_t i = 0; i < m; ++i) bits::set(all, static_cast<int>(i));
    search(0, all);
    return std::min(best_, target_);
  }

 private:
  std::span<bits::Word> row(std::size_t i) {
    const std::size_t w = bits::word_count(petals_.size());
    return {compat_.data() + i * w, w};
  }

  void search(int depth, const std::vector<bits::Word>& cand) {
    if (++nodes_ > node_limit_ || best_ >= target_) return;
    best_ = std::max(best_, depth);
    if (depth + static_cast<int>(bits::count(cand)) <= best_) return;
    std::vector<bits::Word> rest = cand;
    std::vector<bits::Word> next(cand.size());
    for (int v = bits::first(rest); v >= 0; v = bits::first(rest)) {
      bits::reset(rest, v);
      if (depth + 1 + static_cast<int>(bits::count(rest)) <= best_) return;
      const auto r = row(static_cast<std::size_t>(v));
      for (std::size_t i = 0; i < next.size(); ++i) next[i] = rest[i] & r[i];
      search(depth + 1, next);
      if (best_ >= target_ || nodes_ > node_limit_) return;
    }
  }

  const std::vector<Petal>& petals_;
  int target_;
  long node_limit_;
  long nodes_ = 0;
  int best_ = 0;
  std::vector<bits::Word> compat_;
};

std::map<VertexPair, std::vector<Petal>> petals_by_edge(const std::vector<P4>& p4s) {
  std::map<VertexPair, std::vector<Petal>> out;
  for (const auto& p : p4s) {
    const auto ab = VertexPair::of(p.a, p.b);
    const auto bc = VertexPair::of(p.b, p.c);
    const auto cd = VertexPair::of(p.c, p.d);
    out[ab].push_back({bc, cd});
    out[bc].push_back({ab, cd});
    out[cd].push_back({ab, bc});
  }
  return out;
}

std::map<VertexPair, std::vector<VertexPair>> partners_by_pair(const std::vector<P4>& p4s) {
  std::map<VertexPair, std::vector<VertexPair>> out;
  for (const auto& p : p4s) {
    const auto vs = p.vertices();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::array<int, 2> rest{};
        int r = 0;
        for (int t = 0; t < 4; ++t)
          if (t != i && t != j) rest[static_cast<std::size_t>(r++)] = vs[static_cast<std::size_t>(t)];
        out[VertexPair::of(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)])]
            .push_back(VertexPair::of(rest[0], rest[1]));
      }
  }
  return out;
}

int max_disjoint_pairs(std::vector<VertexPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::map<int, int> index;
  for (auto [a, b] : pairs) {
    index.emplace(a, static_cast<int>(index.size()));
    index.emplace(b, static_cast<int>(index.size()));
  }
  using UGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  UGraph h(index.size());
  for (auto [a, b] : pairs) boost::add_edge(index[a], index[b], h);
  std::vector<boost::graph_traits<UGraph>::vertex_descriptor> mate(index.size());
  boost::edmonds_maximum_cardinality_matching(h, mate.data());
  return static_cast<int>(boost::matching_size(h, mate.data()));
}

// Builds the instance left after dropping `removed` vertices, relabelling
// the survivors in increasing order.
Graph drop_vertices(const Graph& g, const std::vector<char>& removed) {
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!removed[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep).graph;
}

}  // namespace

int edge_sunflower_size(const Graph& g, VertexPair e, int target, long node_limit) {
  if (!g.has_edge(e.u, e.v)) return 0;
  auto by_edge = petals_by_edge(enumerate_p4(g));
  auto it = by_edge.find(e);
  if (it == by_edge.end()) return 0;
  return PetalPacker(it->second, target, node_limit).run();
}

int pair_sunflower_size(const Graph& g, VertexPair p) {
  auto by_pair = partners_by_pair(enumerate_p4(g));
  auto it = by_pair.find(p);
  return it == by_pair.end() ? 0 : max_disjoint_pairs(it->second);
}

std::optional<RuleStep> rule1(const ModInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> gone;
  for (const auto& comp : connected_components(g)) {
    const auto sub = induced_subgraph(g, comp);
    if (comp.size() >= 4 && modular_decomposition(sub.graph).has_prime()) continue;
    for (int v : comp) {
      removed[static_cast<std::size_t>(v)] = 1;
      gone.push_back(v);
    }
  }
  if (gone.empty()) return std::nullopt;
  std::sort(gone.begin(), gone.end());
  RuleStep step{{drop_vertices(g, removed), inst.k, inst.variant},
                {RuleId::r1, std::move(gone), {}, inst.k, inst.k}};
  return step;
}

std::optional<RuleStep> rule2(const ModInstance& inst) {
  const Graph& g = inst.graph;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    const auto sub = induced_subgraph(g, comp);
    const MDTree t = modular_decomposition(sub.graph);
    if (t.root_node().kind != NodeKind::series) continue;
    const auto g1 = map_back(t.node(t.root_node().children.front()).leaves, sub.new_to_old);
    std::vector<char> in_g1(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : g1) in_g1[static_cast<std::size_t>(v)] = 1;
    Graph h = g;
    std::vector<VertexPair> cut;
    for (int a : g1)
      for (int b : comp)
        if (!in_g1[static_cast<std::size_t>(b)]) {
          h.remove_edge(a, b);
          cut.push_back(VertexPair::of(a, b));
        }
    std::sort(cut.begin(), cut.end());
    RuleStep step{{std::move(h), inst.k, inst.variant},
                  {RuleId::r2, g1, std::move(cut), inst.k, inst.k}};
    return step;
  }
  return std::nullopt;
}

std::optional<RuleStep> rule3(const ModInstance& inst) {
  if (inst.k < 0) return std::nullopt;
  const Graph& g = inst.graph;
  const std::size_t cap = static_cast<std::size_t>(inst.k) + 1;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 3) continue;
    const auto sub = induced_subgraph(g, comp);
    const MDTree t = modular_decomposition(sub.graph);
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      if (static_cast<int>(i) == t.root) continue;
      const auto& node = t.nodes[i];
      if (node.leaves.size() < 2) continue;
      const auto m = map_back(node.leaves, sub.new_to_old);
      const bool independent = is_independent(g, m);
      if (independent && m.size() <= cap) continue;

      const std::size_t keep = std::min(m.size(), cap);
      std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
      for (std::size_t j = keep; j < m.size(); ++j) removed[static_cast<std::size_t>(m[j])] = 1;
      std::vector<int> survivors;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) survivors.push_back(v);

      const int base = static_cast<int>(survivors.size());
      Graph h(base + static_cast<int>(m.size()));
      for (int a = 0; a < base; ++a)
        for (int b = a + 1; b < base; ++b)
          if (g.has_edge(survivors[static_cast<std::size_t>(a)], survivors[static_cast<std::size_t>(b)]))
            h.add_edge(a, b);
      // survivors of M form an independent module
      std::vector<int> kept_new;
      for (int a = 0; a < base; ++a)
        if (std::binary_search(m.begin(), m.begin() + static_cast<long>(keep),
                               survivors[static_cast<std::size_t>(a)]))
          kept_new.push_back(a);
      for (std::size_t a = 0; a < kept_new.size(); ++a)
        for (std::size_t b = a + 1; b < kept_new.size(); ++b) h.remove_edge(kept_new[a], kept_new[b]);
      // disjoint copy of G[M]
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
          if (g.has_edge(m[a], m[b]))
            h.add_edge(base + static_cast<int>(a), base + static_cast<int>(b));

      RuleStep step{{std::move(h), inst.k, inst.variant}, {RuleId::r3, m, {}, inst.k, inst.k}};
      return step;
    }
  }
  return std::nullopt;
}

std::optional<RuleStep> rule4_sunflower_deletion(const ModInstance& inst) {
  if (inst.variant != Variant::deletion || inst.k < 0) return std::nullopt;
  const int target = inst.k + 1;
  for (const auto& [e, petals] : petals_by_edge(enumerate_p4(inst.graph))) {
    if (static_cast<int>(petals.size()) < target) continue;
    if (PetalPacker(petals, target, 2'000'000).run() < target) continue;
    Graph h = inst.graph;
    h.remove_edge(e.u, e.v);
    RuleStep step{{std::move(h), inst.k - 1, inst.variant},
                  {RuleId::r4, {e.u, e.v}, {e}, inst.k, inst.k - 1}};
    return step;
  }
  return std::nullopt;
}

std::optional<RuleStep> rule5_sunflower_edition(const ModInstance& inst) {
  if (inst.variant != Variant::edition || inst.k < 0) return std::nullopt;
  const int target = inst.k + 1;
  for (const auto& [p, partners] : partners_by_pair(enumerate_p4(inst.graph))) {
    if (static_cast<int>(partners.size()) < target) continue;
    if (max_disjoint_pairs(partners) < target) continue;
    Graph h = inst.graph;
    h.toggle(p.u, p.v);
    RuleStep step{{std::move(h), inst.k - 1, inst.variant},
                  {RuleId::r5, {p.u, p.v}, {p}, inst.k, inst.k - 1}};
    return step;
  }
  return std::nullopt;
}

namespace {

KernelResult kernelize_direct(ModInstance cur) {
  KernelResult out;
  auto take = [&](std::optional<RuleStep>& step) {
    cur = std::move(step->instance);
    out.trace.push_back(std::move(step->application));
  };
  while (cur.k >= 0) {
    bool fired = true;
    while (fired) {
      fired = false;
      for (auto* rule : {&rule1, &rule2, &rule3}) {
        if (auto step = rule(cur)) {
          take(step);
          fired = true;
          break;
        }
      }
    }
    std::optional<RuleStep> sunflower = cur.variant == Variant::deletion
                                            ? rule4_sunflower_deletion(cur)
                                            : rule5_sunflower_edition(cur);
    if (!sunflower) break;
    take(sunflower);
  }
  out.reduced_vertex_count = cur.graph.vertex_count();
  if (cur.k < 0 || cur.graph.vertex_count() > kernel_bound(cur.k)) {
    out.instance = canonical_no(cur.variant);
    out.verdict = Verdict::no;
  } else {
    out.verdict = cur.graph.vertex_count() == 0 ? Verdict::yes : Verdict::undecided;
    out.instance = std::move(cur);
  }
  return out;
}

}  // namespace

KernelResult kernelize(const ModInstance& inst) {
  if (inst.variant != Variant::completion) return kernelize_direct(inst);
  KernelResult r = kernelize_direct({complement(inst.graph), inst.k, Variant::deletion});
  r.instance.graph = complement(r.instance.graph);
  r.instance.variant = Variant::completion;
  return r;
}

}  // namespace cokernel
