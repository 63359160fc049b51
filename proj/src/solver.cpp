#include "cokernel/solver.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace cokernel {

namespace {

std::array<VertexPair, 6> all_pairs(const P4& p) {
  return {VertexPair::of(p.a, p.b), VertexPair::of(p.b, p.c), VertexPair::of(p.c, p.d),
          VertexPair::of(p.a, p.c), VertexPair::of(p.b, p.d), VertexPair::of(p.a, p.d)};
}

std::vector<VertexPair> branch_pairs(const P4& p, Variant v) {
  const auto all = all_pairs(p);
  switch (v) {
    case Variant::deletion: return {all[0], all[1], all[2]};
    case Variant::completion: return {all[3], all[4], all[5]};
    case Variant::edition: break;
  }
  return {all.begin(), all.end()};
}

class BranchSearch {
 public:
  BranchSearch(Graph g, Variant v) : g_(std::move(g)), variant_(v) {}

  std::optional<EditSet> run(int budget) {
    touched_.clear();
    if (!branch(budget)) return std::nullopt;
    return EditSet{variant_, touched_};
  }

 private:
  // The P4 whose branchable pairs occur in the most other P4s.
  P4 pick(const std::vector<P4>& p4s) const {
    std::map<VertexPair, int> load;
    for (const auto& p : p4s)
      for (const auto& q : branch_pairs(p, variant_)) ++load[q];
    const P4* best = &p4s.front();
    int best_score = -1;
    for (const auto& p : p4s) {
      int score = 0;
      for (const auto& q : branch_pairs(p, variant_)) score += load[q];
      if (score > best_score) {
        best_score = score;
        best = &p;
      }
    }
    return *best;
  }

  bool branch(int budget) {
    const auto p4s = enumerate_p4(g_);
    if (p4s.empty()) return true;
    if (budget == 0) return false;
    for (const auto& q : branch_pairs(pick(p4s), variant_)) {
      if (touched_.contains(q)) continue;
      g_.toggle(q.u, q.v);
      touched_.insert(q);
      if (branch(budget - 1)) return true;
      touched_.erase(q);
      g_.toggle(q.u, q.v);
    }
    return false;
  }

  Graph g_;
  Variant variant_;
  std::set<VertexPair> touched_;
};

std::optional<EditSet> search_min(const Graph& g, Variant v, int k) {
  for (int b = 0; b <= k; ++b) {
    if (auto f = BranchSearch(g, v).run(b)) return f;
  }
  return std::nullopt;
}

}  // namespace

Solution solve(const ModInstance& inst, SolveOptions opts) {
  const EditSet none{inst.variant, {}};
  if (inst.k < 0) return {false, none};
  if (is_p4_free(inst.graph)) return {true, none};
  if (inst.k == 0) return {false, none};
  if (opts.kernelize) {
    const KernelResult r = kernelize(inst);
    if (r.verdict == Verdict::no) return {false, none};
    if (r.verdict == Verdict::undecided &&
        !BranchSearch(r.instance.graph, r.instance.variant).run(r.instance.k))
      return {false, none};
  }
  if (auto f = search_min(inst.graph, inst.variant, inst.k)) return {true, std::move(*f)};
  return {false, none};
}

namespace {

double subsets_up_to(std::size_t p, int s) {
  double total = 0, term = 1;
  for (int i = 0; i <= s && static_cast<std::size_t>(i) <= p; ++i) {
    total += term;
    term = term * static_cast<double>(p - static_cast<std::size_t>(i)) / (i + 1);
  }
  return total;
}

bool choose(Graph& h, const std::vector<VertexPair>& cand, std::size_t from, int left,
            std::vector<VertexPair>& picked) {
  if (left == 0) return is_p4_free(h);
  for (std::size_t i = from; i + static_cast<std::size_t>(left) <= cand.size(); ++i) {
    h.toggle(cand[i].u, cand[i].v);
    picked.push_back(cand[i]);
    if (choose(h, cand, i + 1, left - 1, picked)) return true;
    picked.pop_back();
    h.toggle(cand[i].u, cand[i].v);
  }
  return false;
}

}  // namespace

std::optional<OptimalEdit> brute_force_optimal(const Graph& g, Variant variant,
                                               std::optional<int> max_size) {
  std::vector<VertexPair> cand;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      const bool edge = g.has_edge(u, v);
      if ((variant == Variant::deletion && edge) || (variant == Variant::completion && !edge) ||
          variant == Variant::edition)
        cand.push_back({u, v});
    }
  const int limit = max_size.value_or(static_cast<int>(cand.size()));
  if (!max_size && cand.size() > 28)
    throw OracleTooLarge("brute_force_optimal: " + std::to_string(cand.size()) +
                         " candidate pairs (limit 28)");
  if (max_size && subsets_up_to(cand.size(), limit) > 5e7)
    throw OracleTooLarge("brute_force_optimal: too many subsets up to size " +
                         std::to_string(limit));
  Graph h = g;
  for (int s = 0; s <= std::min(limit, static_cast<int>(cand.size())); ++s) {
    std::vector<VertexPair> picked;
    if (choose(h, cand, 0, s, picked)) {
      OptimalEdit out{s, {variant, {}}};
      out.witness.pairs.insert(picked.begin(), picked.end());
      return out;
    }
  }
  return std::nullopt;
}

bool verify_solution(const Graph& g, const EditSet& f, int k) {
  if (static_cast<long long>(f.size()) > k) return false;
  try {
    return is_p4_free(apply_edits(g, f));
  } catch (const IllegalEdit&) {
    return false;
  }
}

}  // namespace cokernel
