#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#include "cokernel/generators.hpp"

namespace oracle {

namespace {

std::vector<std::vector<int>> components(const Graph& g, const std::vector<int>& vs, bool complemented) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(vs.size(), false);
  for (std::size_t s = 0; s < vs.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(vs[i]);
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (!seen[j] && j != i && g.has_edge(vs[i], vs[j]) != complemented) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    out.push_back(comp);
  }
  return out;
}

bool cograph_on(const Graph& g, const std::vector<int>& vs) {
  if (vs.size() <= 1) return true;
  for (bool co : {false, true}) {
    const auto parts = components(g, vs, co);
    if (parts.size() > 1) {
      for (const auto& p : parts)
        if (!cograph_on(g, p)) return false;
      return true;
    }
  }
  return false;
}

bool module_mask(const Graph& g, std::uint32_t m) {
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x) {
    if (m >> x & 1U) continue;
    int in = -1;
    for (int v = 0; v < n; ++v) {
      if (!(m >> v & 1U)) continue;
      const int e = g.has_edge(x, v) ? 1 : 0;
      if (in < 0) in = e;
      else if (in != e) return false;
    }
  }
  return true;
}

// Induced-path search with explicit adjacency checks.
bool search(const Graph& g, Pattern p, std::vector<int>& path) {
  const int n = g.vertex_count();
  if (static_cast<int>(path.size()) == p.length) {
    if (p.kind == cokernel::PatternKind::path) return true;
    return g.has_edge(path.front(), path.back());
  }
  for (int x = 0; x < n; ++x) {
    if (std::find(path.begin(), path.end(), x) != path.end()) continue;
    if (!path.empty() && !g.has_edge(path.back(), x)) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
      const bool closing_edge = p.kind == cokernel::PatternKind::cycle && i == 0 &&
                                static_cast<int>(path.size()) + 1 == p.length;
      if (closing_edge) continue;
      if (g.has_edge(path[i], x)) ok = false;
    }
    if (!ok) continue;
    path.push_back(x);
    if (search(g, p, path)) return true;
    path.pop_back();
  }
  return false;
}

bool delete_some(Graph& g, const std::vector<cokernel::VertexPair>& cand, std::size_t from, int left, Pattern p) {
  if (!has_pattern(g, p)) return true;
  if (left == 0) return false;
  for (std::size_t i = from; i < cand.size(); ++i) {
    g.remove_edge(cand[i].u, cand[i].v);
    const bool ok = delete_some(g, cand, i + 1, left - 1, p);
    g.add_edge(cand[i].u, cand[i].v);
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::size_t p4_count(const Graph& g) {
  const int n = g.vertex_count();
  std::size_t count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int vs[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0}, edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.has_edge(vs[i], vs[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
          std::sort(deg, deg + 4);
          if (edges == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2) ++count;
        }
  return count;
}

bool is_cograph(const Graph& g) {
  std::vector<int> vs(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) vs[static_cast<std::size_t>(v)] = v;
  return cograph_on(g, vs);
}

std::set<std::vector<int>> strong_modules(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> modules;
  for (std::uint32_t m = 1; m < (1U << n); ++m)
    if (module_mask(g, m)) modules.push_back(m);
  std::set<std::vector<int>> out;
  for (std::uint32_t m : modules) {
    bool strong = true;
    for (std::uint32_t o : modules) {
      if ((m & o) && (m & ~o) && (o & ~m)) {
        strong = false;
        break;
      }
    }
    if (!strong) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1U) s.push_back(v);
    out.insert(s);
  }
  return out;
}

int min_vertex_cover(const Graph& g) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  int best = n;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    const int size = std::popcount(m);
    if (size >= best) continue;
    bool cover = true;
    for (const auto& e : edges)
      if (!(m >> e.u & 1U) && !(m >> e.v & 1U)) cover = false;
    if (cover) best = size;
  }
  return best;
}

std::optional<int> n13et_min(const BicoloredInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  const auto edges = g.edges();
  std::map<cokernel::VertexPair, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
  // colour per edge index, -1 while undecided
  std::vector<int> color(edges.size(), -1);
  std::vector<int> free;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto it = inst.coloring.find(edges[i]);
    if (it != inst.coloring.end()) color[i] = it->second;
    else free.push_back(static_cast<int>(i));
  }
  // triangles grouped by the position (in `free`) of their last free edge;
  // fully coloured triangles go to slot 0 and are checked up front
  std::vector<int> pos(edges.size(), -1);
  for (std::size_t j = 0; j < free.size(); ++j) pos[static_cast<std::size_t>(free[j])] = static_cast<int>(j);
  std::vector<std::vector<std::array<int, 3>>> due(free.size() + 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c)) continue;
        const std::array<int, 3> t{index[{a, b}], index[{b, c}], index[{a, c}]};
        int last = 0;
        for (int e : t) last = std::max(last, pos[static_cast<std::size_t>(e)] + 1);
        due[static_cast<std::size_t>(last)].push_back(t);
      }
  const auto valid = [&](std::size_t slot) {
    for (const auto& t : due[slot])
      if (color[static_cast<std::size_t>(t[0])] + color[static_cast<std::size_t>(t[1])] +
              color[static_cast<std::size_t>(t[2])] == 1)
        return false;
    return true;
  };
  if (!valid(0)) return std::nullopt;
  int fixed = 0;
  for (int c : color) fixed += c == 1;

  std::optional<int> best;
  std::function<void(std::size_t, int)> go = [&](std::size_t j, int weight) {
    if (best && weight >= *best) return;
    if (j == free.size()) {
      best = weight;
      return;
    }
    for (int c : {0, 1}) {
      color[static_cast<std::size_t>(free[j])] = c;
      if (valid(j + 1)) go(j + 1, weight + c);
    }
    color[static_cast<std::size_t>(free[j])] = -1;
  };
  go(0, fixed);
  return best;
}

std::set<std::vector<int>> pattern_sets_by_subsets(const Graph& g, Pattern p) {
  std::set<std::vector<int>> out;
  const int n = g.vertex_count();
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == p.length) {
      std::vector<int> deg(pick.size(), 0);
      int edges = 0;
      for (std::size_t i = 0; i < pick.size(); ++i)
        for (std::size_t j = i + 1; j < pick.size(); ++j)
          if (g.has_edge(pick[i], pick[j])) {
            ++deg[i];
            ++deg[j];
            ++edges;
          }
      std::vector<int> sub(pick);
      const auto parts = components(g, sub, false);
      if (parts.size() != 1) return;
      const bool cycle_shape = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
      const bool path_shape = edges == p.length - 1 &&
                              std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
      if (p.kind == cokernel::PatternKind::cycle ? cycle_shape : path_shape) out.insert(pick);
      return;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

bool has_pattern(const Graph& g, Pattern p) {
  std::vector<int> path;
  return search(g, p, path);
}

bool annotated_deletion(const Graph& g, const std::vector<int>& allowed, int k, Pattern p) {
  std::vector<cokernel::VertexPair> cand;
  for (const auto& e : g.edges())
    if (std::find(allowed.begin(), allowed.end(), e.u) != allowed.end() &&
        std::find(allowed.begin(), allowed.end(), e.v) != allowed.end())
      cand.push_back(e);
  Graph h = g;
  return k >= 0 && delete_some(h, cand, 0, k, p);
}

bool plain_deletion(const Graph& g, int k, Pattern p) {
  Graph h = g;
  return k >= 0 && delete_some(h, g.edges(), 0, k, p);
}

Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

BicoloredInstance random_bicolored(std::mt19937_64& rng, int n, double density, int max_free, double zero_share,
                                   int k) {
  BicoloredInstance inst{random_graph(rng, n, density), {}, k};
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int free = 0;
  for (const auto& e : inst.graph.edges()) {
    if (free < max_free && u(rng) < 0.5) {
      ++free;
      continue;
    }
    inst.coloring[e] = u(rng) < zero_share ? 0 : 1;
  }
  return inst;
}

cokernel::ModInstance planted(std::mt19937_64& rng, int n, int k, cokernel::Variant v) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      return cokernel::generate_planted({rng(), n, k, v});
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error("planted: no cograph with room for the edits");
}

}  // namespace oracle
