#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cokernel/graph.hpp"

namespace cokernel {

/// (graph, budget, variant) for cograph deletion / completion / edition.
struct ModInstance {
  Graph graph;
  int k = 0;
  Variant variant = Variant::deletion;

  friend bool operator==(const ModInstance&, const ModInstance&) = default;
};

enum class RuleId { r1, r2, r3, r4, r5 };
std::string_view to_string(RuleId r);

/// One rule firing. Vertex and pair ids refer to the instance the rule was
/// applied to, before relabelling.
struct RuleApplication {
  RuleId rule = RuleId::r1;
  std::vector<int> vertices;
  std::vector<VertexPair> pairs;
  int k_before = 0;
  int k_after = 0;
};

using RuleTrace = std::vector<RuleApplication>;

struct RuleStep {
  ModInstance instance;
  RuleApplication application;
};

/// Removes every connected component that is a cograph.
std::optional<RuleStep> rule1(const ModInstance& inst);

/// Splits the first component whose decomposition root is series into
/// G1 ⊕ G2, G1 being the root's first child.
std::optional<RuleStep> rule2(const ModInstance& inst);

/// Shrinks the first strong module M strictly inside a component that is
/// not an independent set of size <= k+1 to an independent module of size
/// min(|M|, k+1), and appends a disjoint copy of G[M]. Modules are scanned
/// component by component, top-down.
std::optional<RuleStep> rule3(const ModInstance& inst);

/// Deletion only: deletes the first edge lying in k+1 induced P4s that
/// pairwise share no other edge, and decrements k.
std::optional<RuleStep> rule4_sunflower_deletion(const ModInstance& inst);

/// Edition only: toggles the first pair {x,y} lying in k+1 induced P4s that
/// pairwise intersect exactly in {x,y}, and decrements k.
std::optional<RuleStep> rule5_sunflower_edition(const ModInstance& inst);

/// Size of a largest family of induced P4s through edge e that pairwise
/// share no edge besides e, or `target` if at least that many exist. The
/// search is exact up to `node_limit` search nodes; past that the best
/// family found so far is reported.
int edge_sunflower_size(const Graph& g, VertexPair e, int target, long node_limit = 2'000'000);

/// Size of a largest family of induced P4s containing x and y that pairwise
/// meet only in {x,y} (a maximum matching on the partner pairs).
int pair_sunflower_size(const Graph& g, VertexPair p);

enum class Verdict { undecided, yes, no };
std::string_view to_string(Verdict v);

struct KernelResult {
  ModInstance instance;
  RuleTrace trace;
  Verdict verdict = Verdict::undecided;
  /// Vertex count once no rule applies, before the size-bound test.
  int reduced_vertex_count = 0;
};

/// 8k^3 + 20k^2 + 11k.
long long kernel_bound(int k);

/// A single P4 with budget 0.
ModInstance canonical_no(Variant v);
/// The empty graph with budget k.
ModInstance canonical_yes(int k, Variant v);

/// Exhaustive reduction. Completion runs as deletion on the complement and
/// is complemented back. Rules 1-3 run to a fixpoint before each sunflower
/// attempt. A negative budget, or a deletion/edition kernel larger than
/// kernel_bound(k), yields the canonical NO instance.
KernelResult kernelize(const ModInstance& inst);

}  // namespace cokernel
