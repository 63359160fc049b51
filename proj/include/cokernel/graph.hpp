#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cokernel/bits.hpp"

namespace cokernel {

/// Unordered vertex pair, always stored with u < v.
struct VertexPair {
  int u = 0;
  int v = 0;

  static VertexPair of(int a, int b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

enum class Variant { deletion, completion, edition };

std::string_view to_string(Variant v);
/// Accepts "del"/"deletion", "comp"/"completion", "edit"/"edition".
Variant parse_variant(std::string_view s);

/// Simple undirected graph over the dense vertex range 0..n-1.
///
/// Adjacency is a packed symmetric bit matrix, so edge tests are O(1) and
/// neighbourhood intersections are word-parallel.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const VertexPair> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const;

  bool has_edge(int u, int v) const { return bits::test(row(u), v); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle(int u, int v);

  std::span<const bits::Word> row(int v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  int degree(int v) const { return static_cast<int>(bits::count(row(v))); }
  std::vector<int> neighbors(int v) const { return bits::to_vector(row(v)); }

  /// All edges in lexicographic order.
  std::vector<VertexPair> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const;
  std::span<bits::Word> row_mut(int v) {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<bits::Word> adj_;
};

/// A set of vertex pairs to toggle, tagged with the modification variant.
struct EditSet {
  Variant variant = Variant::edition;
  std::set<VertexPair> pairs;

  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const EditSet&, const EditSet&) = default;
};

class IllegalEdit : public std::invalid_argument {
 public:
  IllegalEdit(VertexPair p, const std::string& why);
  VertexPair pair() const { return pair_; }

 private:
  VertexPair pair_;
};

/// Checks every pair of `f` against `g` (in range, distinct endpoints,
/// edge for deletion, non-edge for completion). Throws IllegalEdit.
void check_edit_legality(const Graph& g, const EditSet& f);

/// Returns (V, E △ F). Throws IllegalEdit on a pair illegal for f.variant.
Graph apply_edits(const Graph& g, const EditSet& f);

/// Induced P4 a-b-c-d: edges ab, bc, cd; non-edges ac, bd, ad; a < d.
struct P4 {
  int a = 0, b = 0, c = 0, d = 0;

  std::array<int, 4> vertices() const { return {a, b, c, d}; }
  friend auto operator<=>(const P4&, const P4&) = default;
};

/// Every induced P4 exactly once, in canonical orientation.
std::vector<P4> enumerate_p4(const Graph& g);
/// First induced P4 in enumeration order, if any.
std::optional<P4> find_p4(const Graph& g);
bool is_p4_free(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices outside the set
  std::vector<int> new_to_old;
};

/// G[S], relabelled densely in increasing order of original index.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Small named graphs and the two cograph compositions.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);  // parallel composition
Graph join(const Graph& a, const Graph& b);            // series composition

}  // namespace cokernel
