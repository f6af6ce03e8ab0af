#pragma once

// Protection strategies on rooted trees, plus the parameterized (k, p, q)
// family used to separate them. All totals count saved vertices (union of
// protected subtrees); sequences are reported in forward play order.

#include <gmpxx.h>

#include <vector>

#include "firebreak/tree.hpp"

namespace firebreak {

struct StrategyResult {
  long long saved = 0;
  std::vector<int> seq;                // one vertex per level 1..len(seq)
  std::vector<long long> step_weight;  // marginal new vertices saved per step
};

// Forward pass: at step i pick the level-i vertex of maximum subtree weight
// among those not already protected; ties go to the lowest id. Stops at the
// first level with no eligible vertex (deeper levels are then exhausted too).
StrategyResult greedy(const RootedTree& tree);

// Backward pass from the deepest level: pick the vertex maximizing the
// adjusted weight wt(v) minus the part of subtree(v) already covered by
// deeper picks; ties go to the lowest id. Every level gets a pick (the
// adjusted weight of a vertex never drops below 1), so the forward sequence
// protects one vertex per level 1..max_level. Picks may sit on the ancestor
// path of deeper picks; saved totals count the covered union once.
StrategyResult unburn(const RootedTree& tree);

struct BruteForceOptions {
  int vertex_cap = 60;  // guard against accidental exponential blowups
};

// Exact optimum over protection sequences, by branch-and-bound over
// one-vertex-per-level choices: the incumbent starts at the better of greedy
// and unburn, and a branch is cut when the sum of per-level maxima of the
// still-reachable subforest cannot beat it. Throws std::length_error
// ("size cap exceeded") when tree.n > vertex_cap.
StrategyResult optimal_bruteforce(const RootedTree& tree,
                                  const BruteForceOptions& opts = {});

// Family separating the two passes. The root has k+2 children: k+1 "left"
// subtrees, each a path of k+1 vertices whose deepest vertex carries q
// leaves, and one "right" subtree whose root carries k branches, branch j
// being a path of j vertices whose deepest vertex carries p leaves. Left
// subtrees take the lower ids (construction order pins low-id tie breaks).
// Requires k >= 1, p >= 1, q >= 1.
RootedTree make_kpq(int k, int p, int q);

// The closed forms below hold in the adversarial regime
//   q > k(k-3)/2  and  p > k+q-1,
// where the greedy pass clears one left path per step while the single
// right-subtree pick dominates everything it forfeits.
bool adversarial_regime(int k, int p, int q);

// Greedy (= optimal) total k(k+p+q+1)+2 and backward-pass total k(p+2)+q+2.
// Throw std::domain_error("adversarial regime violated") outside the regime.
long long greedy_total_formula(int k, int p, int q);
long long unburn_total_formula(int k, int p, int q);

// Regime-tight parameter choice: q = k(k-3)/2 + 1, p = k(k-1)/2 + 1.
int canonical_kpq_q(int k);
int canonical_kpq_p(int k);

// Exact unburn/greedy ratio at the canonical parameters; strictly decreasing
// in k with limit 1/2.
mpq_class canonical_kpq_ratio(int k);

}  // namespace firebreak
