#pragma once

// Exhaustive enumeration of unlabeled rooted trees and the census of trees
// whose LP relaxation exceeds the integer protection optimum.

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "firebreak/lp.hpp"
#include "firebreak/tree.hpp"

namespace firebreak {

// Streams every unlabeled rooted tree on n vertices exactly once, as parent
// vectors in preorder (root id 0, parents precede children). Generation
// walks canonical level sequences in decreasing lexicographic order from the
// path down to the star, so no duplicates can occur within a run.
// Requires 1 <= n <= 16 (the stream is cheap; the bound keeps callers away
// from count blowups measured in billions).
class RootedTreeStream {
 public:
  explicit RootedTreeStream(int n);
  // Fills parent and returns true, or returns false when exhausted.
  bool next(std::vector<int>& parent);

 private:
  int n_;
  bool done_ = false;
  bool first_ = true;
  std::vector<int> level_;
};

void for_each_rooted_tree(int n, const std::function<void(const std::vector<int>&)>& fn);
long long count_rooted_trees(int n);

// Root-preserving canonical form: children subcanons sorted, so two rooted
// trees are isomorphic (as rooted trees) exactly when the strings match.
std::string ahu_canonical(const RootedTree& tree);

struct GapTreeReport {
  std::string tree_text;  // two-line parent-vector format
  std::string canonical;
  long long m = 0;
  mpq_class m_star;
  mpq_class gap;  // m_star - m > 0
};

struct CensusOptions {
  int jobs = 0;                       // 0 = hardware concurrency
  bool cross_level_rows = true;       // drop to widen the relaxation
  bool override_size_guard = false;   // census is sized for n <= 14
};

struct CensusResult {
  int n = 0;
  long long total = 0;                // trees examined
  std::vector<GapTreeReport> gaps;    // in enumeration order
};

// Runs tree_gap over every rooted tree on n vertices and keeps the gap ones.
// Work is sharded across jobs worker threads; results are merged back into
// enumeration order, so parallel and serial runs return identical lists.
// Throws std::length_error unless n <= 14 or the guard is overridden.
CensusResult gap_census(int n, const CensusOptions& opts = {});

// Single summary line for census output streams.
std::string census_summary_line(const CensusResult& r);

struct LeafExtensionCheck {
  struct PerTree {
    bool decomposes = false;  // deleting some leaf lands on a base tree
    int parent_index = -1;    // index into base, -1 none, -2 ambiguous
  };
  std::vector<PerTree> per_tree;            // one per extended report
  std::vector<long long> parent_multiplicity;  // one per base report
  bool all_decompose = false;
};

// Tests whether every extended gap tree is a base gap tree plus one leaf.
// A tree's parent is the unique base tree reachable by deleting one non-root
// leaf; reaching two different base trees reports index -2.
LeafExtensionCheck leaf_extension_check(const std::vector<GapTreeReport>& extended,
                                        const std::vector<GapTreeReport>& base);

}  // namespace firebreak
