#pragma once

// Rooted-tree outbreak model. An infection starts at the root and advances
// one level per time step; immediately before each advance one vertex may be
// protected, which saves its entire subtree. A protection sequence a_1, a_2,
// ... is valid when a_i sits at level i (deeper vertices are unreachable by
// then, shallower ones already burned).

#include <optional>
#include <string>
#include <vector>

namespace firebreak {

// Dense vertex ids 0..n-1. parent[root] == -1. Children lists are sorted by
// id. level[v] = edge distance from the root, wt[v] = |subtree(v)|.
struct RootedTree {
  int n = 0;
  int root = 0;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> level;
  std::vector<int> wt;
  int max_level = 0;
};

// Builds the derived structure from a parent vector (-1 marks the root).
// Throws std::invalid_argument on malformed input: "missing root",
// "multiple roots", "parent id out of range", or "disconnected input"
// (with exactly one root, disconnection always comes from a parent cycle).
RootedTree build_tree(const std::vector<int>& parent);

// Text format: first line n, second line n whitespace-separated parent
// entries with the root written as "-". parse_tree accepts any whitespace
// layout; format_tree emits the canonical two-line form without a trailing
// newline. Round trip is exact.
RootedTree parse_tree(const std::string& text);
std::string format_tree(const RootedTree& tree);

struct SimulationResult {
  long long saved = 0;
  std::vector<char> protected_mask;  // 1 where some chosen subtree covers v
};

// Plays a protection sequence (seq[i] is protected at step i+1, so it must
// lie at level i+1). Sequences shorter than the tree depth are fine. Saved
// counts the union of the chosen subtrees, so a vertex protected inside an
// already protected subtree adds only its uncovered part. Throws
// std::invalid_argument only for an out-of-range id or a level violation.
SimulationResult simulate(const RootedTree& tree, const std::vector<int>& seq);

struct SequenceViolation {
  int index;           // position in seq of the first offending entry
  std::string reason;  // "vertex id out of range" or "level violation"
};

// Checks the same rules simulate enforces, reporting the first violation
// instead of throwing. nullopt means the sequence is valid.
std::optional<SequenceViolation> validate_sequence(const RootedTree& tree,
                                                   const std::vector<int>& seq);

}  // namespace firebreak
