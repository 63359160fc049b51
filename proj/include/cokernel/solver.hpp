#pragma once

#include <optional>
#include <stdexcept>

#include "cokernel/graph.hpp"
#include "cokernel/kernelizer.hpp"

namespace cokernel {

struct Solution {
  bool found = false;
  EditSet edits;  // meaningful iff found
};

struct SolveOptions {
  /// Decide on the kernel first; the witness is then searched on the input.
  bool kernelize = true;
};

/// Bounded search tree: branch on the pairs of one induced P4 that the
/// variant may touch (deletion: ab, bc, cd; completion: ac, bd, ad;
/// edition: all six), never touching a pair twice on a root-to-leaf path.
/// The returned witness has minimum size.
Solution solve(const ModInstance& inst, SolveOptions opts = {});

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptimalEdit {
  int size = 0;
  EditSet witness;
};

/// Exact minimum edit set by enumerating candidate pair subsets in
/// increasing cardinality. Without `max_size` at most 28 candidate pairs are
/// accepted; with it, enumeration stops at that cardinality (nullopt when
/// the optimum is larger) and the subset count is capped instead.
std::optional<OptimalEdit> brute_force_optimal(const Graph& g, Variant variant,
                                               std::optional<int> max_size = std::nullopt);

/// f legal for its variant on g, |f| <= k, and g △ f is P4-free.
bool verify_solution(const Graph& g, const EditSet& f, int k);

}  // namespace cokernel
