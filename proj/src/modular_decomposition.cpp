#include "cokernel/modular_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace cokernel {

std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::parallel: return "parallel";
    case NodeKind::series: return "series";
    case NodeKind::prime: return "prime";
  }
  return "?";
}

bool MDTree::has_prime() const {
  return std::any_of(nodes.begin(), nodes.end(),
                     [](const MDNode& n) { return n.kind == NodeKind::prime; });
}

int MDTree::depth() const {
  std::function<int(int)> rec = [&](int i) {
    int d = 0;
    for (int c : node(i).children) d = std::max(d, rec(c) + 1);
    return d;
  };
  return nodes.empty() ? 0 : rec(root);
}

bool is_module(const Graph& g, std::span<const int> m) {
  const auto set = bits::from_vector(static_cast<std::size_t>(g.vertex_count()),
                                     std::vector<int>(m.begin(), m.end()));
  for (int z = 0; z < g.vertex_count(); ++z) {
    if (bits::test(set, z)) continue;
    const auto nz = g.row(z);
    if (bits::intersects(nz, set) && !bits::subset_of(set, nz)) return false;
  }
  return true;
}

namespace {

using Set = std::vector<bits::Word>;

class Decomposer {
 public:
  explicit Decomposer(const Graph& g) : g_(g), w_(g.words_per_row()) {}

  MDTree run() {
    Set all(w_, 0);
    for (int v = 0; v < g_.vertex_count(); ++v) bits::set(all, v);
    tree_.root = build(all);
    return std::move(tree_);
  }

 private:
  // Connected components of G[x] (or of its complement when co is set).
  std::vector<Set> components(const Set& x, bool co) const {
    std::vector<Set> out;
    Set seen(w_, 0), fresh(w_);
    for (int s = bits::first(x); s >= 0;) {
      Set comp(w_, 0);
      bits::set(comp, s);
      bits::set(seen, s);
      std::vector<int> stack{s};
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        const auto nu = g_.row(u);
        for (std::size_t i = 0; i < w_; ++i)
          fresh[i] = (co ? ~nu[i] : nu[i]) & x[i] & ~seen[i];
        bits::for_each(fresh, [&](int v) {
          bits::set(seen, v);
          bits::set(comp, v);
          stack.push_back(v);
        });
      }
      out.push_back(std::move(comp));
      s = -1;
      for (std::size_t i = 0; i < w_ && s < 0; ++i)
        if (x[i] & ~seen[i]) s = static_cast<int>(i * 64) + std::countr_zero(x[i] & ~seen[i]);
    }
    return out;
  }

  // Coarsest modular partition of G[x] in which {pivot} is a part: the
  // maximal modules of G[x] not containing pivot. {pivot} is omitted.
  std::vector<Set> maximal_modules_avoiding(int pivot, const Set& x) const {
    std::vector<Set> parts;
    {
      Set rest = x;
      bits::reset(rest, pivot);
      if (bits::any(rest)) parts.push_back(std::move(rest));
    }
    std::deque<int> queue{pivot};
    std::vector<char> queued(static_cast<std::size_t>(g_.vertex_count()), 0);
    queued[static_cast<std::size_t>(pivot)] = 1;
    Set in(w_), out(w_);
    while (!queue.empty()) {
      const int z = queue.front();
      queue.pop_front();
      queued[static_cast<std::size_t>(z)] = 0;
      const auto nz = g_.row(z);
      const std::size_t count = parts.size();
      for (std::size_t p = 0; p < count; ++p) {
        Set& part = parts[p];
        if (bits::test(part, z)) continue;
        bool has_in = false, has_out = false;
        for (std::size_t i = 0; i < w_; ++i) {
          in[i] = part[i] & nz[i];
          out[i] = part[i] & ~nz[i];
          has_in |= in[i] != 0;
          has_out |= out[i] != 0;
        }
        if (!has_in || !has_out) continue;
        part = in;
        parts.push_back(out);
        auto enqueue = [&](int v) {
          if (!queued[static_cast<std::size_t>(v)]) {
            queued[static_cast<std::size_t>(v)] = 1;
            queue.push_back(v);
          }
        };
        bits::for_each(in, enqueue);
        bits::for_each(out, enqueue);
      }
    }
    return parts;
  }

  // Smallest module of G[x] containing seed.
  Set module_closure(Set s, const Set& x) const {
    Set grow(w_);
    for (;;) {
      std::fill(grow.begin(), grow.end(), 0);
      bool changed = false;
      bits::for_each(x, [&](int z) {
        if (bits::test(s, z)) return;
        const auto nz = g_.row(z);
        if (bits::intersects(nz, s) && !bits::subset_of(s, nz)) {
          bits::set(grow, z);
          changed = true;
        }
      });
      if (!changed) return s;
      for (std::size_t i = 0; i < w_; ++i) s[i] |= grow[i];
    }
  }

  // Maximal proper modules of G[x] when G[x] and its complement are both
  // connected. Every proper module then lies inside one of them.
  std::vector<Set> prime_children(const Set& x) const {
    const int v = bits::first(x);
    const auto avoid_v = maximal_modules_avoiding(v, x);

    // Find u outside the child containing v: exactly when the smallest
    // module holding {u, v} is all of x.
    Set inside_cv(w_, 0);
    int u = -1;
    std::size_t u_part = 0;
    for (std::size_t p = 0; p < avoid_v.size() && u < 0; ++p) {
      if (bits::subset_of(avoid_v[p], inside_cv)) continue;
      const int cand = bits::first(avoid_v[p]);
      Set seed(w_, 0);
      bits::set(seed, v);
      bits::set(seed, cand);
      Set closure = module_closure(seed, x);
      if (closure == x) {
        u = cand;
        u_part = p;
      } else {
        for (std::size_t i = 0; i < w_; ++i) inside_cv[i] |= closure[i];
      }
    }
    // v lies outside C_u, so C_u is a maximal module avoiding v.
    const Set& cu = avoid_v[u_part];
    std::vector<Set> children{cu};
    for (auto& part : maximal_modules_avoiding(u, x))
      if (!bits::intersects(part, cu)) children.push_back(std::move(part));
    return children;
  }

  int build(const Set& x) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    MDNode node;
    node.leaves = bits::to_vector(x);
    if (node.leaves.size() == 1) {
      node.kind = NodeKind::leaf;
      node.vertex = node.leaves.front();
      tree_.nodes[static_cast<std::size_t>(id)] = std::move(node);
      return id;
    }
    std::vector<Set> parts = components(x, false);
    if (parts.size() > 1) {
      node.kind = NodeKind::parallel;
    } else if (parts = components(x, true); parts.size() > 1) {
      node.kind = NodeKind::series;
    } else {
      node.kind = NodeKind::prime;
      parts = prime_children(x);
    }
    std::sort(parts.begin(), parts.end(),
              [](const Set& a, const Set& b) { return bits::first(a) < bits::first(b); });
    if (node.kind == NodeKind::prime) {
      const int k = static_cast<int>(parts.size());
      Graph q(k);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (g_.has_edge(bits::first(parts[static_cast<std::size_t>(i)]),
                          bits::first(parts[static_cast<std::size_t>(j)])))
            q.add_edge(i, j);
      node.quotient = std::move(q);
    }
    for (const auto& part : parts) node.children.push_back(build(part));
    tree_.nodes[static_cast<std::size_t>(id)] = std::move(node);
    return id;
  }

  const Graph& g_;
  std::size_t w_;
  MDTree tree_;
};

}  // namespace

MDTree modular_decomposition(const Graph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("modular_decomposition: empty graph");
  return Decomposer(g).run();
}

std::variant<MDTree, NotACograph> cotree(const Graph& g) {
  MDTree t = modular_decomposition(g);
  if (!t.has_prime()) return t;
  // A prime node guarantees an induced P4.
  return NotACograph{*find_p4(g)};
}

std::vector<std::vector<int>> strong_modules(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (auto& n : modular_decomposition(g).nodes) out.push_back(std::move(n.leaves));
  return out;
}

Graph recompose(const MDTree& t, int vertex_count) {
  Graph g(vertex_count);
  for (const auto& n : t.nodes) {
    const auto& ch = n.children;
    for (std::size_t i = 0; i < ch.size(); ++i)
      for (std::size_t j = i + 1; j < ch.size(); ++j) {
        const bool linked =
            n.kind == NodeKind::series ||
            (n.kind == NodeKind::prime && n.quotient->has_edge(static_cast<int>(i), static_cast<int>(j)));
        if (!linked) continue;
        for (int a : t.node(ch[i]).leaves)
          for (int b : t.node(ch[j]).leaves) g.add_edge(a, b);
      }
  }
  return g;
}

}  // namespace cokernel
