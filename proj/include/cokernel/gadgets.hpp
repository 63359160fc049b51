#pragma once

// Instance transformations behind the kernel lower bounds for C_l-free and
// P_l-free edge deletion, with exhaustive checkers for their claims.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cokernel/graph.hpp"

namespace cokernel {

/// Graph with a partial {0,1} edge colouring and a weight budget.
struct BicoloredInstance {
  Graph graph;
  std::map<VertexPair, int> coloring;  // domain ⊆ edges, values 0 or 1
  int k = 0;

  std::vector<VertexPair> one_edges() const;
  std::vector<VertexPair> zero_edges() const;
  std::vector<VertexPair> uncolored_edges() const;
  /// Throws std::invalid_argument if a coloured pair is not an edge or a
  /// colour is not 0/1.
  void check() const;

  friend bool operator==(const BicoloredInstance&, const BicoloredInstance&) = default;
};

/// Three disjoint independent sets covering the vertex set.
struct TripartiteWitness {
  std::array<std::vector<int>, 3> parts;

  bool valid_for(const Graph& g) const;
  /// Part index of every vertex.
  std::vector<int> part_of(int vertex_count) const;
};

enum class PatternKind { cycle, path };
std::string_view to_string(PatternKind p);

struct Pattern {
  PatternKind kind = PatternKind::cycle;
  int length = 3;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Delete at most k edges, all inside `allowed`, to remove every induced
/// copy of `pattern`.
struct AnnotatedInstance {
  Graph graph;
  std::vector<int> allowed;  // sorted
  int k = 0;
  Pattern pattern;

  friend bool operator==(const AnnotatedInstance&, const AnnotatedInstance&) = default;
};

/// One triangle/apex pair t = (uw, v) of the source and the path gadget
/// built for it.
struct PathGadget {
  int u = 0, v = 0, w = 0;
  std::vector<int> vertices;  // gadget vertices including u and w
  int centre = -1;
};

struct ForbiddenPatternReduction {
  AnnotatedInstance instance;
  std::vector<PathGadget> gadgets;
};

/// Every triangle holds zero, two or three 1-edges. The colouring must be
/// total; a partial one throws std::invalid_argument.
bool is_valid_bicoloring(const BicoloredInstance& inst);

struct ColoringExtension {
  int weight = 0;  // number of 1-edges
  std::map<VertexPair, int> coloring;
};

/// Minimum-weight valid total extension of the partial colouring, or
/// nullopt when none exists. Exhaustive branch and bound over the uncoloured
/// edges; refuses (OracleTooLarge) beyond `max_uncolored` of them.
std::optional<ColoringExtension> solve_n13et_small(const BicoloredInstance& inst,
                                                   int max_uncolored = 24);

/// Yes-instance test: a valid extension of weight at most inst.k exists.
bool n13et_answer(const BicoloredInstance& inst, int max_uncolored = 24);

/// Vertex cover (g, k) -> g plus a dominating vertex, original edges
/// coloured 1, budget |E| + k.
BicoloredInstance vc_to_n13et(const Graph& g, int k);

/// Adds r isolated 1-edges and k_new - (k + r) forcing gadgets so that the
/// 1-edge count grows by r and the budget becomes k_new.
BicoloredInstance pad_instance(const BicoloredInstance& inst, int r, int k_new);

/// OR of 2^l instances sharing budget k and 1-edge count s: a binary
/// selection tree below a single root 1-edge, and propagation gadgets from
/// each leaf edge to the (now uncoloured) 1-edges of its instance. The
/// budget is k + 3s + l + 1, counting the root edge itself.
BicoloredInstance or_compose(std::span<const BicoloredInstance> instances);

/// Pads every instance to a common budget and 1-edge count and repeats the
/// last one up to a power of two, then calls or_compose.
BicoloredInstance or_compose_normalized(std::span<const BicoloredInstance> instances);

/// Three copies per vertex, budget 6k; the copy classes are the witness.
std::pair<BicoloredInstance, TripartiteWitness> tripartite_transform(const BicoloredInstance& inst);

/// Replaces each 0-edge uw by an uncoloured edge with k+1 uncoloured
/// triangles u a_i w on fresh apexes.
BicoloredInstance eliminate_zero_edges(const BicoloredInstance& inst);
/// Same, extending a tripartition: each apex joins the part of neither end.
std::pair<BicoloredInstance, TripartiteWitness> eliminate_zero_edges(
    const BicoloredInstance& inst, const TripartiteWitness& witness);

/// Some proper 3-colouring by backtracking, or nullopt.
std::optional<TripartiteWitness> find_tripartition(const Graph& g);

/// Tripartite instance without 0-edges -> annotated C_l-free deletion
/// (l >= 12). Parts become cliques, 1-edges are dropped, every triangle
/// apex pair t gets a u-w path with l-1 vertices whose centre sits
/// floor((l-1)/2) steps from u and sees V \ {u,v,w}; internal vertices of
/// distinct paths are all adjacent. S = V, budget k - (#1-edges).
ForbiddenPatternReduction n13et_to_cl(const BicoloredInstance& inst, const TripartiteWitness& witness,
                                      int l);

/// Same scaffold for P_l (l >= 13): the gadget is a path on
/// floor((l-1)/3) vertices ending at u plus one on the remaining
/// l-1-floor((l-1)/3) vertices ending at w, centre floor((l-1)/3) steps
/// from w.
ForbiddenPatternReduction n13et_to_pl(const BicoloredInstance& inst, const TripartiteWitness& witness,
                                      int l);

struct PlainInstance {
  Graph graph;
  int k = 0;
  Pattern pattern;
};

/// Gives each vertex outside `allowed` k+1 false twins; k is unchanged.
PlainInstance annotated_to_plain(const AnnotatedInstance& inst);

/// Calls visit(vertices) for every induced copy of the pattern, once per
/// vertex set (vertices in cycle/path order). Stops when visit returns
/// true. Returns false if `node_limit` search nodes were exhausted first.
bool for_each_induced_pattern(const Graph& g, Pattern pattern,
                              const std::function<bool(const std::vector<int>&)>& visit,
                              long node_limit = 50'000'000);

struct ClaimReport {
  bool conclusive = true;
  std::size_t found = 0;      // induced copies present in the reduced graph
  std::size_t predicted = 0;  // P_t ∪ {v} sets with uw a 1-edge, uv and vw uncoloured
  std::vector<std::vector<int>> unexpected;
  std::vector<std::vector<int>> missing;

  bool ok() const { return conclusive && unexpected.empty() && missing.empty(); }
};

/// Enumerates every induced copy of the reduction's pattern and compares
/// the vertex sets with the ones predicted from the source colouring.
ClaimReport claim_verifier(const ForbiddenPatternReduction& h, const BicoloredInstance& source,
                           long node_limit = 50'000'000);

}  // namespace cokernel
