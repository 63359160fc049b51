#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cokernel/graph.hpp"

namespace cokernel {

enum class NodeKind { leaf, parallel, series, prime };

std::string_view to_string(NodeKind k);

struct MDNode {
  NodeKind kind = NodeKind::leaf;
  int vertex = -1;               // leaf only
  std::vector<int> children;     // indices into MDTree::nodes, ordered by min leaf
  std::optional<Graph> quotient; // prime only; vertex i is children[i]
  std::vector<int> leaves;       // the strong module, sorted
};

/// Modular decomposition tree. Nodes are stored in preorder, root first.
struct MDTree {
  std::vector<MDNode> nodes;
  int root = 0;

  const MDNode& node(int i) const { return nodes[static_cast<std::size_t>(i)]; }
  const MDNode& root_node() const { return node(root); }
  bool has_prime() const;
  int depth() const;  // edges on a longest root-leaf path; 0 for one vertex
};

bool is_module(const Graph& g, std::span<const int> m);

/// Unique modular decomposition tree of a non-empty graph.
///
/// Parallel nodes split on connected components, series nodes on
/// co-components. A node whose graph and complement are both connected is
/// prime; its children (the maximal proper modules) are found from two
/// vertex partitions "maximal modules avoiding x" computed by partition
/// refinement. Roughly cubic in n, which is plenty for the sizes we handle.
MDTree modular_decomposition(const Graph& g);

struct NotACograph {
  P4 witness;
};

/// The cotree of g, or a witness P4 when g has a prime node.
std::variant<MDTree, NotACograph> cotree(const Graph& g);

/// Leaf sets of all nodes of the decomposition tree (preorder).
std::vector<std::vector<int>> strong_modules(const Graph& g);

/// Rebuilds a graph from its tree: parallel = disjoint union, series = join,
/// prime = substitution into the quotient.
Graph recompose(const MDTree& t, int vertex_count);

}  // namespace cokernel
