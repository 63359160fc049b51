#pragma once

#include <cstdint>

#include "cokernel/graph.hpp"
#include "cokernel/kernelizer.hpp"

namespace cokernel {

/// Seed-driven generator parameters. Equal specs give identical output.
struct GenSpec {
  std::uint64_t seed = 1;
  int n = 1;
  int k = 0;
  Variant variant = Variant::deletion;
};

/// Random full binary series/parallel composition tree with n leaves, grown
/// by repeatedly splitting a uniformly chosen node; node labels are fair
/// coin flips and vertex labels are shuffled.
Graph random_cograph(std::uint64_t seed, int n);

/// Applies k distinct random toggles to the cograph g in the direction that
/// k edits of `variant` undo: deletion instances get k added edges,
/// completion instances k removed edges, edition instances k toggled pairs.
/// The result is a YES instance with budget k.
ModInstance plant_edits(const Graph& g, int k, Variant variant, std::uint64_t seed);

/// plant_edits(random_cograph(seed, n), k, variant, seed + 1).
ModInstance generate_planted(const GenSpec& spec);

/// k(k+1)^2 + k.
long long tight_family_size(int k);

/// Reduced deletion instance needing exactly k deletions with
/// k(k+1)^2 + k vertices.
///
/// k components, each two alternating series/parallel chains joined by one
/// edge x_i y_i between their deepest leaves. Level j of a chain is a
/// series leaf a_j over a parallel node holding k+1 leaves and the next
/// level; the chains carry ceil(k/2) and floor(k/2) levels, so x_i y_i lies
/// in exactly k edge-disjoint P4s and the sunflower rule stays silent.
Graph tight_family(int k);

}  // namespace cokernel
