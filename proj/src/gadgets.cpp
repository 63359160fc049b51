#include "cokernel/gadgets.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "cokernel/solver.hpp"

namespace cokernel {

namespace {

using bits::Word;

std::vector<VertexPair> with_color(const BicoloredInstance& inst, int c) {
  std::vector<VertexPair> out;
  for (const auto& [p, b] : inst.coloring)
    if (b == c) out.push_back(p);
  return out;
}

int color_of(const BicoloredInstance& inst, int a, int b) {
  const auto it = inst.coloring.find(VertexPair::of(a, b));
  return it == inst.coloring.end() ? -1 : it->second;
}

// Copies g into a larger vertex range.
Graph grow(const Graph& g, int n) {
  Graph out(n);
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  return out;
}

struct Triangle {
  int a, b, c;
};

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b))
        if (c > b && g.has_edge(a, c)) out.push_back({a, b, c});
    }
  return out;
}

void require_witness(const BicoloredInstance& inst, const TripartiteWitness& w) {
  if (!w.valid_for(inst.graph))
    throw std::invalid_argument("tripartition is not a partition into independent sets");
}

}  // namespace

std::vector<VertexPair> BicoloredInstance::one_edges() const { return with_color(*this, 1); }
std::vector<VertexPair> BicoloredInstance::zero_edges() const { return with_color(*this, 0); }

std::vector<VertexPair> BicoloredInstance::uncolored_edges() const {
  std::vector<VertexPair> out;
  for (const auto& e : graph.edges())
    if (!coloring.contains(e)) out.push_back(e);
  return out;
}

void BicoloredInstance::check() const {
  for (const auto& [p, b] : coloring) {
    if (p.u < 0 || p.v >= graph.vertex_count() || p.u == p.v || !graph.has_edge(p.u, p.v))
      throw std::invalid_argument("coloured pair " + std::to_string(p.u) + " " + std::to_string(p.v) +
                                  " is not an edge");
    if (b != 0 && b != 1)
      throw std::invalid_argument("colour must be 0 or 1, got " + std::to_string(b));
  }
}

bool TripartiteWitness::valid_for(const Graph& g) const {
  const int n = g.vertex_count();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& part : parts)
    for (int v : part) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++) return false;
      for (int u : part)
        if (g.has_edge(u, v)) return false;
    }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

std::vector<int> TripartiteWitness::part_of(int vertex_count) const {
  std::vector<int> out(static_cast<std::size_t>(vertex_count), -1);
  for (int i = 0; i < 3; ++i)
    for (int v : parts[static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(v)] = i;
  return out;
}

std::string_view to_string(PatternKind p) { return p == PatternKind::cycle ? "cycle" : "path"; }

bool is_valid_bicoloring(const BicoloredInstance& inst) {
  inst.check();
  if (inst.coloring.size() != inst.graph.edge_count())
    throw std::invalid_argument("is_valid_bicoloring: colouring is not total");
  for (const auto& t : triangles(inst.graph)) {
    const int ones = color_of(inst, t.a, t.b) + color_of(inst, t.a, t.c) + color_of(inst, t.b, t.c);
    if (ones == 1) return false;
  }
  return true;
}

namespace {

class ExtensionSearch {
 public:
  explicit ExtensionSearch(const BicoloredInstance& inst) : free_(inst.uncolored_edges()) {
    std::map<VertexPair, int> index;
    for (std::size_t i = 0; i < free_.size(); ++i) index[free_[i]] = static_cast<int>(i);
    value_.assign(free_.size(), 0);
    checks_.resize(free_.size());
    for (const auto& [p, b] : inst.coloring) base_ += b;
    for (const auto& t : triangles(inst.graph)) {
      Check c;
      int last = -1;
      const VertexPair sides[3] = {VertexPair::of(t.a, t.b), VertexPair::of(t.a, t.c),
                                   VertexPair::of(t.b, t.c)};
      for (const auto& s : sides) {
        if (const auto it = index.find(s); it != index.end()) {
          c.free.push_back(it->second);
          last = std::max(last, it->second);
        } else {
          c.fixed_ones += inst.coloring.at(s);
        }
      }
      if (last < 0) {
        if (c.fixed_ones == 1) infeasible_ = true;
      } else {
        checks_[static_cast<std::size_t>(last)].push_back(c);
      }
    }
  }

  std::optional<ColoringExtension> run(const BicoloredInstance& inst) {
    if (infeasible_) return std::nullopt;
    best_ = std::numeric_limits<int>::max();
    descend(0, base_);
    if (best_ == std::numeric_limits<int>::max()) return std::nullopt;
    ColoringExtension out{best_, inst.coloring};
    for (std::size_t i = 0; i < free_.size(); ++i) out.coloring[free_[i]] = best_value_[i];
    return out;
  }

 private:
  struct Check {
    std::vector<int> free;
    int fixed_ones = 0;
  };

  bool consistent(std::size_t i) const {
    for (const auto& c : checks_[i]) {
      int ones = c.fixed_ones;
      for (int f : c.free) ones += value_[static_cast<std::size_t>(f)];
      if (ones == 1) return false;
    }
    return true;
  }

  void descend(std::size_t i, int weight) {
    if (weight >= best_) return;
    if (i == free_.size()) {
      best_ = weight;
      best_value_ = value_;
      return;
    }
    for (int b = 0; b <= 1; ++b) {
      value_[i] = b;
      if (consistent(i)) descend(i + 1, weight + b);
    }
    value_[i] = 0;
  }

  std::vector<VertexPair> free_;
  std::vector<int> value_, best_value_;
  std::vector<std::vector<Check>> checks_;  // triangles decided once edge i is set
  int base_ = 0;
  bool infeasible_ = false;
  int best_ = 0;
};

}  // namespace

std::optional<ColoringExtension> solve_n13et_small(const BicoloredInstance& inst, int max_uncolored) {
  inst.check();
  const auto free = inst.uncolored_edges().size();
  if (free > static_cast<std::size_t>(max_uncolored))
    throw OracleTooLarge("solve_n13et_small: " + std::to_string(free) + " uncoloured edges (limit " +
                         std::to_string(max_uncolored) + ")");
  return ExtensionSearch(inst).run(inst);
}

bool n13et_answer(const BicoloredInstance& inst, int max_uncolored) {
  const auto ext = solve_n13et_small(inst, max_uncolored);
  return ext && ext->weight <= inst.k;
}

BicoloredInstance vc_to_n13et(const Graph& g, int k) {
  const int n = g.vertex_count();
  BicoloredInstance out{grow(g, n + 1), {}, 0};
  for (const auto& e : g.edges()) out.coloring[e] = 1;
  for (int v = 0; v < n; ++v) out.graph.add_edge(v, n);
  out.k = static_cast<int>(g.edge_count()) + k;
  return out;
}

BicoloredInstance pad_instance(const BicoloredInstance& inst, int r, int k_new) {
  inst.check();
  if (r < 0) throw std::invalid_argument("pad_instance: r must be >= 0");
  if (k_new < inst.k + r) throw std::invalid_argument("pad_instance: k_new must be >= k + r");
  const int gadgets = k_new - inst.k - r;
  const auto ones = inst.one_edges();
  if (gadgets > 0 && ones.empty() && r == 0)
    throw std::invalid_argument("pad_instance: no 1-edge to anchor forcing gadgets");

  const int n = inst.graph.vertex_count();
  BicoloredInstance out{grow(inst.graph, n + 2 * r + 2 * gadgets), inst.coloring, k_new};
  int next = n;
  for (int i = 0; i < r; ++i) {
    out.graph.add_edge(next, next + 1);
    out.coloring[{next, next + 1}] = 1;
    next += 2;
  }
  const VertexPair anchor = ones.empty() ? VertexPair{n, n + 1} : ones.front();
  const int u = anchor.u, v = anchor.v;
  for (int j = 0; j < gadgets; ++j) {
    const int x = next++, y = next++;
    out.graph.add_edge(u, x);
    out.graph.add_edge(v, x);
    out.graph.add_edge(v, y);
    out.graph.add_edge(x, y);
    out.coloring[VertexPair::of(v, y)] = 0;
    out.coloring[VertexPair::of(x, y)] = 0;
  }
  return out;
}

BicoloredInstance or_compose(std::span<const BicoloredInstance> instances) {
  const std::size_t t = instances.size();
  if (t == 0 || (t & (t - 1)) != 0)
    throw std::invalid_argument("or_compose: instance count must be a power of two, got " +
                                std::to_string(t));
  const int k = instances.front().k;
  const std::size_t s = instances.front().one_edges().size();
  int levels = 0;
  while ((std::size_t{1} << levels) < t) ++levels;
  int n = 2 + static_cast<int>(2 * t - 2);  // root edge plus one vertex per tree child
  for (const auto& inst : instances) {
    inst.check();
    if (inst.k != k) throw std::invalid_argument("or_compose: budgets differ");
    if (inst.one_edges().size() != s) throw std::invalid_argument("or_compose: 1-edge counts differ");
    n += inst.graph.vertex_count() + static_cast<int>(2 * s);
  }

  BicoloredInstance out{Graph(n), {}, k + 3 * static_cast<int>(s) + levels + 1};
  int next = 0;
  std::vector<int> offset;
  for (const auto& inst : instances) {
    offset.push_back(next);
    for (const auto& e : inst.graph.edges()) out.graph.add_edge(next + e.u, next + e.v);
    for (const auto& e : inst.zero_edges()) out.coloring[{next + e.u, next + e.v}] = 0;
    next += inst.graph.vertex_count();
  }

  const int rx = next++, ry = next++;
  out.graph.add_edge(rx, ry);
  out.coloring[{rx, ry}] = 1;
  std::vector<std::pair<int, int>> layer{{rx, ry}};
  for (int d = 0; d < levels; ++d) {
    std::vector<std::pair<int, int>> below;
    for (const auto& [x, y] : layer) {
      const int z = next++;
      out.graph.add_edge(x, z);
      out.graph.add_edge(y, z);
      below.push_back({x, z});
      below.push_back({y, z});
    }
    layer = std::move(below);
  }

  for (std::size_t j = 0; j < t; ++j) {
    const auto [x, y] = layer[j];
    for (const auto& e : instances[j].one_edges()) {
      const int u = offset[j] + e.u, v = offset[j] + e.v;
      const int a = next++, b = next++;
      for (const auto& [p, q] : {std::pair{u, a}, {v, a}, {v, b}, {a, b}, {a, x}, {b, x}, {b, y}})
        out.graph.add_edge(p, q);
      for (const auto& [p, q] : {std::pair{u, a}, {v, b}, {a, x}, {b, y}})
        out.coloring[VertexPair::of(p, q)] = 0;
    }
  }
  return out;
}

BicoloredInstance or_compose_normalized(std::span<const BicoloredInstance> instances) {
  if (instances.empty()) throw std::invalid_argument("or_compose_normalized: no instances");
  std::size_t s = 0;
  bool budgets_differ = false;
  for (const auto& inst : instances) {
    s = std::max(s, inst.one_edges().size());
    budgets_differ |= inst.k != instances.front().k;
  }
  // Gadget padding needs an anchor 1-edge; one extra isolated 1-edge gives it.
  if (s == 0 && budgets_differ) s = 1;
  int k = 0;
  for (const auto& inst : instances)
    k = std::max(k, inst.k + static_cast<int>(s - inst.one_edges().size()));

  std::vector<BicoloredInstance> padded;
  for (const auto& inst : instances)
    padded.push_back(pad_instance(inst, static_cast<int>(s - inst.one_edges().size()), k));
  while ((padded.size() & (padded.size() - 1)) != 0) padded.push_back(padded.back());
  return or_compose(padded);
}

std::pair<BicoloredInstance, TripartiteWitness> tripartite_transform(const BicoloredInstance& inst) {
  inst.check();
  const int n = inst.graph.vertex_count();
  const auto copy = [n](int v, int i) { return i * n + v; };
  BicoloredInstance out{Graph(3 * n), {}, 6 * inst.k};
  TripartiteWitness w;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < 3; ++i) w.parts[static_cast<std::size_t>(i)].push_back(copy(v, i));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        out.graph.add_edge(copy(v, i), copy(v, j));
        out.coloring[{copy(v, i), copy(v, j)}] = 0;
      }
  }
  for (const auto& e : inst.graph.edges()) {
    const int c = color_of(inst, e.u, e.v);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        out.graph.add_edge(copy(e.u, i), copy(e.v, j));
        if (c >= 0) out.coloring[VertexPair::of(copy(e.u, i), copy(e.v, j))] = c;
      }
  }
  return {std::move(out), std::move(w)};
}

namespace {

BicoloredInstance eliminate(const BicoloredInstance& inst, std::vector<int>* part) {
  inst.check();
  const auto zeros = inst.zero_edges();
  const int apexes = std::max(0, inst.k + 1);
  const int n = inst.graph.vertex_count();
  BicoloredInstance out{grow(inst.graph, n + apexes * static_cast<int>(zeros.size())), inst.coloring,
                        inst.k};
  int next = n;
  for (const auto& e : zeros) {
    out.coloring.erase(e);
    for (int i = 0; i < apexes; ++i) {
      const int a = next++;
      out.graph.add_edge(e.u, a);
      out.graph.add_edge(e.v, a);
      if (part) part->push_back(3 - (*part)[static_cast<std::size_t>(e.u)] - (*part)[static_cast<std::size_t>(e.v)]);
    }
  }
  return out;
}

}  // namespace

BicoloredInstance eliminate_zero_edges(const BicoloredInstance& inst) { return eliminate(inst, nullptr); }

std::pair<BicoloredInstance, TripartiteWitness> eliminate_zero_edges(const BicoloredInstance& inst,
                                                                     const TripartiteWitness& witness) {
  require_witness(inst, witness);
  auto part = witness.part_of(inst.graph.vertex_count());
  auto out = eliminate(inst, &part);
  TripartiteWitness w;
  for (std::size_t v = 0; v < part.size(); ++v)
    w.parts[static_cast<std::size_t>(part[v])].push_back(static_cast<int>(v));
  return {std::move(out), std::move(w)};
}

std::optional<TripartiteWitness> find_tripartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(static_cast<std::size_t>(n), -1);

  const std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == order.size()) return true;
    const int v = order[i];
    for (int c = 0; c < 3; ++c) {
      bool clash = false;
      for (int u : g.neighbors(v)) clash |= color[static_cast<std::size_t>(u)] == c;
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (place(i + 1)) return true;
    }
    color[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;
  TripartiteWitness w;
  for (int v = 0; v < n; ++v) w.parts[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
  return w;
}

namespace {

// Shared scaffold of the two reductions. `build` lays out one gadget on
// fresh vertices starting at `next` and returns it.
ForbiddenPatternReduction reduce(const BicoloredInstance& inst, const TripartiteWitness& witness,
                                 Pattern pattern, int per_gadget,
                                 const std::function<PathGadget(int u, int v, int w, int& next)>& build,
                                 const std::function<void(Graph&, const PathGadget&)>& wire) {
  inst.check();
  if (!inst.zero_edges().empty())
    throw std::invalid_argument("source instance has 0-edges; eliminate them first");
  require_witness(inst, witness);
  const int k1 = static_cast<int>(inst.one_edges().size());
  if (inst.k < k1)
    throw std::invalid_argument("budget " + std::to_string(inst.k) + " is below the " +
                                std::to_string(k1) + " fixed 1-edges");

  const int n = inst.graph.vertex_count();
  std::vector<std::array<int, 3>> pairs;  // (u, v, w) with apex v, u < w
  for (const auto& t : triangles(inst.graph)) {
    pairs.push_back({t.b, t.a, t.c});
    pairs.push_back({t.a, t.b, t.c});
    pairs.push_back({t.a, t.c, t.b});
  }

  ForbiddenPatternReduction out;
  Graph h(n + per_gadget * static_cast<int>(pairs.size()));
  for (const auto& part : witness.parts)
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j) h.add_edge(part[i], part[j]);
  for (const auto& e : inst.graph.edges())
    if (color_of(inst, e.u, e.v) != 1) h.add_edge(e.u, e.v);

  int next = n;
  std::vector<int> owner(static_cast<std::size_t>(h.vertex_count()), -1);
  for (const auto& [u, v, w] : pairs) {
    const int first = next;
    PathGadget gadget = build(u, v, w, next);
    for (int x = first; x < next; ++x) owner[static_cast<std::size_t>(x)] = static_cast<int>(out.gadgets.size());
    wire(h, gadget);
    for (int x = 0; x < n; ++x)
      if (x != u && x != v && x != w) h.add_edge(gadget.centre, x);
    out.gadgets.push_back(std::move(gadget));
  }
  for (int x = n; x < h.vertex_count(); ++x)
    for (int y = x + 1; y < h.vertex_count(); ++y)
      if (owner[static_cast<std::size_t>(x)] != owner[static_cast<std::size_t>(y)]) h.add_edge(x, y);

  std::vector<int> allowed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) allowed[static_cast<std::size_t>(v)] = v;
  out.instance = {std::move(h), std::move(allowed), inst.k - k1, pattern};
  return out;
}

void wire_path(Graph& h, const PathGadget& g) {
  for (std::size_t i = 0; i + 1 < g.vertices.size(); ++i) h.add_edge(g.vertices[i], g.vertices[i + 1]);
}

}  // namespace

ForbiddenPatternReduction n13et_to_cl(const BicoloredInstance& inst, const TripartiteWitness& witness,
                                      int l) {
  if (l < 12) throw std::invalid_argument("n13et_to_cl: l must be >= 12, got " + std::to_string(l));
  const int centre_at = (l - 1) / 2;
  return reduce(
      inst, witness, {PatternKind::cycle, l}, l - 3,
      [&](int u, int v, int w, int& next) {
        PathGadget g{u, v, w, {u}, -1};
        for (int i = 0; i < l - 3; ++i) g.vertices.push_back(next++);
        g.vertices.push_back(w);
        g.centre = g.vertices[static_cast<std::size_t>(centre_at)];
        return g;
      },
      wire_path);
}

ForbiddenPatternReduction n13et_to_pl(const BicoloredInstance& inst, const TripartiteWitness& witness,
                                      int l) {
  if (l < 13) throw std::invalid_argument("n13et_to_pl: l must be >= 13, got " + std::to_string(l));
  const int u_side = (l - 1) / 3;
  const int w_side = (l - 1) - u_side;
  return reduce(
      inst, witness, {PatternKind::path, l}, l - 3,
      [&](int u, int v, int w, int& next) {
        // Stored as far end of Q^u ... u, w ... far end of Q^w.
        PathGadget g{u, v, w, {}, -1};
        for (int i = 0; i < u_side - 1; ++i) g.vertices.push_back(next++);
        std::reverse(g.vertices.begin(), g.vertices.end());
        g.vertices.push_back(u);
        g.vertices.push_back(w);
        for (int i = 0; i < w_side - 1; ++i) g.vertices.push_back(next++);
        g.centre = g.vertices[static_cast<std::size_t>(u_side + u_side)];
        return g;
      },
      [u_side](Graph& h, const PathGadget& g) {
        for (std::size_t i = 0; i + 1 < g.vertices.size(); ++i)
          if (i + 1 != static_cast<std::size_t>(u_side)) h.add_edge(g.vertices[i], g.vertices[i + 1]);
      });
}

PlainInstance annotated_to_plain(const AnnotatedInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  const int twins = std::max(0, inst.k + 1);
  std::vector<int> cls;  // original vertex of every output vertex
  for (int v = 0; v < n; ++v) cls.push_back(v);
  for (int v = 0; v < n; ++v) {
    if (v < 0 || std::binary_search(inst.allowed.begin(), inst.allowed.end(), v)) continue;
    for (int i = 0; i < twins; ++i) cls.push_back(v);
  }
  for (int v : inst.allowed)
    if (v < 0 || v >= n) throw std::invalid_argument("annotated_to_plain: allowed vertex out of range");
  const int m = static_cast<int>(cls.size());
  Graph out = grow(g, m);
  for (int x = 0; x < m; ++x)
    for (int y = std::max(x + 1, n); y < m; ++y)
      if (g.has_edge(cls[static_cast<std::size_t>(x)], cls[static_cast<std::size_t>(y)])) out.add_edge(x, y);
  return {std::move(out), inst.k, inst.pattern};
}

namespace {

class PatternSearch {
 public:
  PatternSearch(const Graph& g, Pattern p, const std::function<bool(const std::vector<int>&)>& visit,
                long limit)
      : g_(g), p_(p), visit_(visit), limit_(limit), words_(g.words_per_row()) {
    if (p.kind == PatternKind::cycle && p.length < 3)
      throw std::invalid_argument("cycle pattern needs length >= 3");
    if (p.length < 1) throw std::invalid_argument("pattern length must be >= 1");
    blocked_.assign(static_cast<std::size_t>(p.length + 1) * words_, 0);
    cand_.assign(static_cast<std::size_t>(p.length + 1) * words_, 0);
  }

  // True when the search ran to completion or visit asked to stop.
  bool run() {
    const int n = g_.vertex_count();
    for (int s = 0; s < n && !done_; ++s) {
      path_.assign(1, s);
      auto b = level(blocked_, 0);
      std::fill(b.begin(), b.end(), 0);
      if (p_.kind == PatternKind::cycle) {
        // vertices up to s are never used again; s itself is the closing target
        for (int x = 0; x <= s; ++x) bits::set(b, x);
      }
      if (p_.length == 1) {
        if (visit_(path_)) done_ = true;
        continue;
      }
      extend();
    }
    return !exhausted_;
  }

 private:
  std::span<Word> level(std::vector<Word>& v, std::size_t d) { return {v.data() + d * words_, words_}; }

  // blocked_[j]: union of N[p_i] for i < j. For cycles p_0 contributes only
  // itself (and every smaller vertex); its neighbourhood is masked per step.
  void extend() {
    if (done_) return;
    if (++nodes_ > limit_) {
      exhausted_ = done_ = true;
      return;
    }
    const std::size_t j = path_.size() - 1;
    const int last = path_.back();
    const bool closing = path_.size() + 1 == static_cast<std::size_t>(p_.length);
    auto cand = level(cand_, j);
    const auto blocked = level(blocked_, j);
    const auto row = g_.row(last);
    const auto start = g_.row(path_.front());
    for (std::size_t i = 0; i < words_; ++i) {
      Word w = row[i] & ~blocked[i];
      if (p_.kind == PatternKind::cycle && j >= 1) w &= closing ? start[i] : ~start[i];
      cand[i] = w;
    }
    bits::reset(cand, last);
    bits::for_each(std::span<const Word>(cand), [&](int x) {
      if (done_) return;
      if (closing) {
        const bool canonical = p_.kind == PatternKind::cycle ? path_[1] < x : path_.front() < x;
        if (!canonical) return;
        path_.push_back(x);
        if (visit_(path_)) done_ = true;
        path_.pop_back();
        return;
      }
      auto next = level(blocked_, j + 1);
      if (p_.kind == PatternKind::cycle && j == 0) {
        // p_0's neighbourhood stays open for the closing vertex
        std::copy(blocked.begin(), blocked.end(), next.begin());
      } else {
        for (std::size_t i = 0; i < words_; ++i) next[i] = blocked[i] | row[i];
        bits::set(next, last);
      }
      path_.push_back(x);
      extend();
      path_.pop_back();
    });
  }

  const Graph& g_;
  Pattern p_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  long limit_;
  std::size_t words_;
  std::vector<Word> blocked_, cand_;
  std::vector<int> path_;
  long nodes_ = 0;
  bool done_ = false, exhausted_ = false;
};

}  // namespace

bool for_each_induced_pattern(const Graph& g, Pattern pattern,
                              const std::function<bool(const std::vector<int>&)>& visit, long node_limit) {
  return PatternSearch(g, pattern, visit, node_limit).run();
}

ClaimReport claim_verifier(const ForbiddenPatternReduction& h, const BicoloredInstance& source,
                           long node_limit) {
  ClaimReport report;
  std::set<std::vector<int>> predicted, found;
  for (const auto& t : h.gadgets) {
    if (color_of(source, t.u, t.w) == 1 && source.graph.has_edge(t.u, t.v) &&
        source.graph.has_edge(t.v, t.w) && color_of(source, t.u, t.v) < 0 &&
        color_of(source, t.v, t.w) < 0) {
      std::vector<int> c = t.vertices;
      c.push_back(t.v);
      std::sort(c.begin(), c.end());
      predicted.insert(std::move(c));
    }
  }
  report.conclusive = for_each_induced_pattern(
      h.instance.graph, h.instance.pattern,
      [&](const std::vector<int>& vs) {
        std::vector<int> c = vs;
        std::sort(c.begin(), c.end());
        found.insert(std::move(c));
        return false;
      },
      node_limit);
  report.found = found.size();
  report.predicted = predicted.size();
  std::set_difference(found.begin(), found.end(), predicted.begin(), predicted.end(),
                      std::back_inserter(report.unexpected));
  std::set_difference(predicted.begin(), predicted.end(), found.begin(), found.end(),
                      std::back_inserter(report.missing));
  return report;
}

}  // namespace cokernel
