#pragma once

// Integer/linear programming view of tree protection. The integer program
// assigns a 0/1 variable to every non-root vertex (the root is burned at
// time zero and can never be protected), maximizes total subtree weight, and
// constrains chosen vertices to at most one per level and to pairwise
// incomparability (no chosen vertex an ancestor of another). Its optimum
// equals the best protection sequence; the LP relaxation can exceed it, and
// the cross-level rows below tighten the relaxation without cutting any
// integer point.

#include <gmpxx.h>

#include <vector>

#include "firebreak/tree.hpp"

namespace firebreak {

struct LPRow {
  std::vector<int> vars;  // sorted variable ids; all coefficients are 1
  long long bound = 1;    // sum over vars <= bound
};

struct LPModel {
  int num_vars = 0;
  std::vector<int> var_to_vertex;      // variable -> vertex id
  std::vector<int> vertex_to_var;      // vertex -> variable id, -1 for root
  std::vector<long long> objective;    // maximize objective . x
  std::vector<LPRow> rows;             // 0 <= x implicit; see solve_lp on x<=1
};

// Rows emitted:
//  - one per nonempty level: its vertices are mutually exclusive;
//  - one per leaf: the leaf's ancestor chain (leaf included) is mutually
//    exclusive - protecting an ancestor makes deeper picks in that subtree
//    redundant;
//  - when with_cross_level_rows: for every internal non-root u, the ancestor
//    chain of u (u included) and the children of u are mutually exclusive.
//    The slice one level below u is the only one materialized: extending
//    these rows to deeper slices of subtree(u) stays valid for the integer
//    program but tightens the relaxation past the cut family being studied,
//    collapsing its known fractional optima (the 13-vertex census drops from
//    two gap trees to one).
// Rows then go through support-subset dominance dedup, which never changes
// the feasible region (all coefficients are 1 with bound 1).
LPModel build_ip(const RootedTree& tree, bool with_cross_level_rows);

struct LPSolution {
  mpq_class value;
  std::vector<mpq_class> x;  // one entry per variable
  int pivots = 0;
};

// Exact rational primal simplex (dense tableau, Bland's anti-cycling rule:
// entering = lowest-index improving variable, leaving = lowest-index basis
// variable among minimum ratios). Variables are box-bounded: any variable
// not already covered by a row with bound <= 1 gets an explicit x <= 1 row
// folded in, so the program is always bounded. The slack basis is feasible
// (all bounds are nonnegative), so no phase-1 is needed.
LPSolution solve_lp(const LPModel& model);

struct IPSolution {
  long long value = 0;
  std::vector<int> chosen;  // vertex ids, ascending by level
};

// Exact integer optimum by direct search over the feasible set (at most one
// vertex per level, levels may be skipped, no chosen vertex on the ancestor
// path of another), with an additive per-level upper bound for pruning.
// Deliberately independent of optimal_bruteforce so the two can cross-check.
IPSolution solve_ip(const RootedTree& tree);

struct GapResult {
  long long m = 0;      // integer optimum
  mpq_class m_star;     // LP relaxation optimum
  mpq_class gap;        // m_star - m, always >= 0
};

GapResult tree_gap(const RootedTree& tree, bool with_cross_level_rows = true);

}  // namespace firebreak
