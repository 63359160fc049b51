#include "cokernel/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace cokernel {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::deletion: return "deletion";
    case Variant::completion: return "completion";
    case Variant::edition: return "edition";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  if (s == "del" || s == "deletion") return Variant::deletion;
  if (s == "comp" || s == "completion") return Variant::completion;
  if (s == "edit" || s == "edition") return Variant::edition;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  words_ = bits::word_count(static_cast<std::size_t>(n));
  adj_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const VertexPair> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("vertex out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  bits::set(row_mut(u), v);
  bits::set(row_mut(v), u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  bits::reset(row_mut(u), v);
  bits::reset(row_mut(v), u);
}

void Graph::toggle(int u, int v) {
  if (has_edge(u, v))
    remove_edge(u, v);
  else
    add_edge(u, v);
}

std::size_t Graph::edge_count() const { return bits::count(adj_) / 2; }

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (int u = 0; u < n_; ++u)
    bits::for_each(row(u), [&](int v) {
      if (u < v) out.push_back({u, v});
    });
  return out;
}

IllegalEdit::IllegalEdit(VertexPair p, const std::string& why)
    : std::invalid_argument("illegal edit {" + std::to_string(p.u) + "," + std::to_string(p.v) +
                            "}: " + why),
      pair_(p) {}

void check_edit_legality(const Graph& g, const EditSet& f) {
  for (const auto& p : f.pairs) {
    if (p.u < 0 || p.v >= g.vertex_count() || p.u >= p.v)
      throw IllegalEdit(p, "not a pair of distinct vertices of the graph");
    if (f.variant == Variant::deletion && !g.has_edge(p.u, p.v))
      throw IllegalEdit(p, "deletion of a non-edge");
    if (f.variant == Variant::completion && g.has_edge(p.u, p.v))
      throw IllegalEdit(p, "completion of an existing edge");
  }
}

Graph apply_edits(const Graph& g, const EditSet& f) {
  check_edit_legality(g, f);
  Graph h = g;
  for (const auto& p : f.pairs) h.toggle(p.u, p.v);
  return h;
}

namespace {

// Scans middle edges (b, c) in both orientations. For fixed b, c the
// candidate ends are A = N(b) \ N[c] and D = N(c) \ N[b]; every a in A and
// non-neighbour d in D closes an induced P4. Returning true from `visit`
// stops the scan.
template <typename Visit>
void scan_p4(const Graph& g, Visit&& visit) {
  const int n = g.vertex_count();
  const std::size_t w = g.words_per_row();
  std::vector<bits::Word> ends_a(w), ends_d(w), cand(w);
  for (int b = 0; b < n; ++b) {
    const auto nb = g.row(b);
    for (int c : g.neighbors(b)) {
      const auto nc = g.row(c);
      for (std::size_t i = 0; i < w; ++i) {
        ends_a[i] = nb[i] & ~nc[i];
        ends_d[i] = nc[i] & ~nb[i];
      }
      bits::reset(ends_a, c);
      bits::reset(ends_d, b);
      bool stop = false;
      bits::for_each(ends_a, [&](int a) {
        if (stop) return;
        const auto na = g.row(a);
        for (std::size_t i = 0; i < w; ++i) cand[i] = ends_d[i] & ~na[i];
        bits::for_each(cand, [&](int d) {
          if (stop || d <= a) return;
          stop = visit(P4{a, b, c, d});
        });
      });
      if (stop) return;
    }
  }
}

}  // namespace

std::vector<P4> enumerate_p4(const Graph& g) {
  std::vector<P4> out;
  scan_p4(g, [&](const P4& p) {
    out.push_back(p);
    return false;
  });
  return out;
}

std::optional<P4> find_p4(const Graph& g) {
  std::optional<P4> found;
  scan_p4(g, [&](const P4& p) {
    found = p;
    return true;
  });
  return found;
}

bool is_p4_free(const Graph& g) { return !find_p4(g).has_value(); }

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    out.old_to_new[static_cast<std::size_t>(v)] = 0;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (out.old_to_new[static_cast<std::size_t>(v)] < 0) continue;
    out.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  const int m = static_cast<int>(out.new_to_old.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(out.new_to_old[static_cast<std::size_t>(i)],
                     out.new_to_old[static_cast<std::size_t>(j)]))
        out.graph.add_edge(i, j);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      bits::for_each(g.row(u), [&](int v) {
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = id;
          stack.push_back(v);
        }
      });
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  Graph g(na + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  const int na = a.vertex_count();
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < b.vertex_count(); ++v) g.add_edge(u, na + v);
  return g;
}

}  // namespace cokernel
