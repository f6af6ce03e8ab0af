#include "firebreak/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace firebreak {

RootedTree build_tree(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  if (n == 0) throw std::invalid_argument("empty tree: missing root");

  RootedTree t;
  t.n = n;
  t.parent = parent;
  t.children.assign(n, {});

  int root = -1;
  for (int v = 0; v < n; ++v) {
    const int p = parent[v];
    if (p == -1) {
      if (root != -1) throw std::invalid_argument("multiple roots");
      root = v;
      continue;
    }
    if (p < 0 || p >= n) throw std::invalid_argument("parent id out of range");
    t.children[p].push_back(v);
  }
  if (root == -1) throw std::invalid_argument("missing root");
  t.root = root;

  // Levels via BFS from the root; unreached vertices sit on a parent cycle.
  t.level.assign(n, -1);
  t.level[root] = 0;
  std::vector<int> order;
  order.reserve(n);
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    t.max_level = std::max(t.max_level, t.level[v]);
    for (int c : t.children[v]) {
      t.level[c] = t.level[v] + 1;
      order.push_back(c);
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("disconnected input (parent cycle)");

  t.wt.assign(n, 1);
  for (size_t i = order.size(); i-- > 1;) {
    const int v = order[i];
    t.wt[parent[v]] += t.wt[v];
  }
  return t;
}

RootedTree parse_tree(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n)) throw std::invalid_argument("tree text: missing vertex count");
  if (n <= 0) throw std::invalid_argument("tree text: vertex count must be positive");
  std::vector<int> parent(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument("tree text: too few parent entries");
    if (tok == "-") {
      parent[i] = -1;
    } else {
      size_t used = 0;
      int p;
      try {
        p = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("tree text: bad parent entry '" + tok + "'");
      }
      if (used != tok.size())
        throw std::invalid_argument("tree text: bad parent entry '" + tok + "'");
      parent[i] = p;
    }
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("tree text: trailing tokens");
  return build_tree(parent);
}

std::string format_tree(const RootedTree& tree) {
  std::ostringstream out;
  out << tree.n << '\n';
  for (int v = 0; v < tree.n; ++v) {
    if (v) out << ' ';
    if (tree.parent[v] == -1)
      out << '-';
    else
      out << tree.parent[v];
  }
  return out.str();
}

namespace {

// Marks subtree(v); returns how many vertices were newly covered.
long long mark_subtree(const RootedTree& t, int v, std::vector<char>& mask) {
  long long added = 0;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (mask[u]) continue;  // nested choices overlap; count each vertex once
    mask[u] = 1;
    ++added;
    for (int c : t.children[u]) stack.push_back(c);
  }
  return added;
}

}  // namespace

SimulationResult simulate(const RootedTree& tree, const std::vector<int>& seq) {
  SimulationResult r;
  r.protected_mask.assign(tree.n, 0);
  for (size_t i = 0; i < seq.size(); ++i) {
    const int v = seq[i];
    if (v < 0 || v >= tree.n)
      throw std::invalid_argument("vertex id out of range in sequence");
    if (tree.level[v] != static_cast<int>(i) + 1)
      throw std::invalid_argument("level violation in sequence");
    r.saved += mark_subtree(tree, v, r.protected_mask);
  }
  return r;
}

std::optional<SequenceViolation> validate_sequence(const RootedTree& tree,
                                                   const std::vector<int>& seq) {
  for (size_t i = 0; i < seq.size(); ++i) {
    const int v = seq[i];
    if (v < 0 || v >= tree.n)
      return SequenceViolation{static_cast<int>(i), "vertex id out of range"};
    if (tree.level[v] != static_cast<int>(i) + 1)
      return SequenceViolation{static_cast<int>(i), "level violation"};
  }
  return std::nullopt;
}

}  // namespace firebreak
