#include "cokernel/generators.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace cokernel {

namespace {

// Unbiased draw from [0, bound) straight off the engine, so output does not
// depend on the standard library's distribution implementation.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

template <typename T>
void shuffle(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(rng, i)]);
}

struct TreeNode {
  int left = -1, right = -1;  // both -1 for a leaf
  int leaf = -1;
  bool series = false;
};

void collect(const std::vector<TreeNode>& t, int i, std::vector<int>& out) {
  const auto& node = t[static_cast<std::size_t>(i)];
  if (node.left < 0) {
    out.push_back(node.leaf);
    return;
  }
  collect(t, node.left, out);
  collect(t, node.right, out);
}

}  // namespace

Graph random_cograph(std::uint64_t seed, int n) {
  if (n < 1) throw std::invalid_argument("random_cograph: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<TreeNode> t{{-1, -1, 0, false}};
  for (int leaf = 1; leaf < n; ++leaf) {
    const auto x = static_cast<std::size_t>(below(rng, t.size()));
    const TreeNode old = t[x];
    t.push_back(old);
    const int moved = static_cast<int>(t.size()) - 1;
    t.push_back({-1, -1, leaf, false});
    const int fresh = static_cast<int>(t.size()) - 1;
    const bool swap_sides = below(rng, 2) == 1;
    t[x] = {swap_sides ? fresh : moved, swap_sides ? moved : fresh, -1, below(rng, 2) == 1};
  }
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
  shuffle(label, rng);

  Graph g(n);
  std::vector<int> left, right;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].left < 0 || !t[i].series) continue;
    left.clear();
    right.clear();
    collect(t, t[i].left, left);
    collect(t, t[i].right, right);
    for (int a : left)
      for (int b : right)
        g.add_edge(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);
  }
  return g;
}

ModInstance plant_edits(const Graph& g, int k, Variant variant, std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("plant_edits: negative k");
  if (!is_p4_free(g)) throw std::invalid_argument("plant_edits: input is not a cograph");
  std::vector<VertexPair> cand;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      const bool edge = g.has_edge(u, v);
      if (variant == Variant::edition || (variant == Variant::deletion && !edge) ||
          (variant == Variant::completion && edge))
        cand.push_back({u, v});
    }
  if (cand.size() < static_cast<std::size_t>(k))
    throw std::invalid_argument("plant_edits: only " + std::to_string(cand.size()) +
                                " legal pairs for k=" + std::to_string(k));
  std::mt19937_64 rng(seed);
  Graph h = g;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    std::swap(cand[i], cand[i + below(rng, cand.size() - i)]);
    h.toggle(cand[i].u, cand[i].v);
  }
  return {std::move(h), k, variant};
}

ModInstance generate_planted(const GenSpec& spec) {
  return plant_edits(random_cograph(spec.seed, spec.n), spec.k, spec.variant, spec.seed + 1);
}

long long tight_family_size(int k) {
  const long long kk = k;
  return kk * (kk + 1) * (kk + 1) + kk;
}

namespace {

// Appends one chain with `levels` series levels and returns its deepest leaf.
int add_chain(Graph& g, int& next, int levels, int k) {
  std::vector<int> above;  // series leaves a_1..a_j seen so far
  for (int j = 0; j < levels; ++j) {
    const int a = next++;
    for (int prev : above) g.add_edge(prev, a);
    above.push_back(a);
    for (int b = 0; b <= k; ++b) {
      const int leaf = next++;
      for (int s : above) g.add_edge(s, leaf);
    }
  }
  const int tip = next++;
  for (int s : above) g.add_edge(s, tip);
  return tip;
}

}  // namespace

Graph tight_family(int k) {
  if (k < 1) throw std::invalid_argument("tight_family: k must be >= 1");
  Graph g(static_cast<int>(tight_family_size(k)));
  int next = 0;
  for (int i = 0; i < k; ++i) {
    const int x = add_chain(g, next, (k + 1) / 2, k);
    const int y = add_chain(g, next, k / 2, k);
    g.add_edge(x, y);
  }
  return g;
}

}  // namespace cokernel
