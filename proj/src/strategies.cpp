#include "firebreak/strategies.hpp"

#include <algorithm>
#include <stdexcept>

namespace firebreak {

namespace {

std::vector<std::vector<int>> group_by_level(const RootedTree& t) {
  std::vector<std::vector<int>> by_level(t.max_level + 1);
  for (int v = 0; v < t.n; ++v) by_level[t.level[v]].push_back(v);
  return by_level;  // inner lists ascend by id
}

// Covers subtree(v), returning the number of newly covered vertices.
long long cover_subtree(const RootedTree& t, int v, std::vector<char>& covered) {
  long long added = 0;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (covered[u]) continue;
    covered[u] = 1;
    ++added;
    for (int c : t.children[u]) stack.push_back(c);
  }
  return added;
}

}  // namespace

StrategyResult greedy(const RootedTree& tree) {
  StrategyResult r;
  const auto by_level = group_by_level(tree);
  std::vector<char> covered(tree.n, 0);
  for (int lvl = 1; lvl <= tree.max_level; ++lvl) {
    int pick = -1;
    for (int v : by_level[lvl])
      if (!covered[v] && (pick == -1 || tree.wt[v] > tree.wt[pick])) pick = v;
    if (pick == -1) break;  // everything at this level and below is covered
    r.seq.push_back(pick);
    const long long w = cover_subtree(tree, pick, covered);
    r.step_weight.push_back(w);
    r.saved += w;
  }
  return r;
}

StrategyResult unburn(const RootedTree& tree) {
  const auto by_level = group_by_level(tree);
  std::vector<char> covered(tree.n, 0);
  // in_subtree_covered[v] = covered vertices inside subtree(v), kept exact by
  // walking the ancestor path whenever a vertex becomes covered.
  std::vector<long long> in_subtree_covered(tree.n, 0);

  std::vector<int> picks;
  std::vector<long long> weights;
  for (int lvl = tree.max_level; lvl >= 1; --lvl) {
    int pick = -1;
    long long pick_w = 0;
    for (int v : by_level[lvl]) {
      const long long w = tree.wt[v] - in_subtree_covered[v];
      if (w > pick_w) {
        pick_w = w;
        pick = v;
      }
    }
    // The pick itself is never covered by deeper picks, so pick_w >= 1.
    picks.push_back(pick);
    weights.push_back(pick_w);

    std::vector<int> stack{pick};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      if (covered[u]) continue;
      covered[u] = 1;
      for (int a = u; a != -1; a = tree.parent[a]) ++in_subtree_covered[a];
      for (int c : tree.children[u]) stack.push_back(c);
    }
  }

  StrategyResult r;
  r.seq.assign(picks.rbegin(), picks.rend());
  r.step_weight.assign(weights.rbegin(), weights.rend());
  for (long long w : weights) r.saved += w;
  return r;
}

namespace {

struct BruteState {
  const RootedTree* t;
  const std::vector<std::vector<int>>* by_level;
  std::vector<char> covered;
  std::vector<int> seq;
  long long saved = 0;
  long long best = -1;
  std::vector<int> best_seq;
};

// Admissible bound: per level >= lvl, the best any future pick could add is
// the maximum weight among currently uncovered vertices there (coverage only
// grows, so every future candidate is uncovered now and adds at most wt).
long long upper_bound(const BruteState& s, int lvl) {
  long long ub = s.saved;
  for (int j = lvl; j <= s.t->max_level; ++j) {
    long long mx = 0;
    for (int v : (*s.by_level)[j])
      if (!s.covered[v]) mx = std::max(mx, static_cast<long long>(s.t->wt[v]));
    ub += mx;
  }
  return ub;
}

void brute_dfs(BruteState& s, int lvl) {
  std::vector<int> eligible;
  if (lvl <= s.t->max_level)
    for (int v : (*s.by_level)[lvl])
      if (!s.covered[v]) eligible.push_back(v);

  if (eligible.empty()) {
    if (s.saved > s.best) {
      s.best = s.saved;
      s.best_seq = s.seq;
    }
    return;
  }
  if (upper_bound(s, lvl) <= s.best) return;

  // Skipping an eligible level never helps: inserting any eligible vertex
  // into a skipping schedule only grows the saved union.
  std::sort(eligible.begin(), eligible.end(), [&](int a, int b) {
    if (s.t->wt[a] != s.t->wt[b]) return s.t->wt[a] > s.t->wt[b];
    return a < b;
  });
  for (int v : eligible) {
    std::vector<int> newly;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      if (s.covered[u]) continue;
      s.covered[u] = 1;
      newly.push_back(u);
      for (int c : s.t->children[u]) stack.push_back(c);
    }
    s.saved += static_cast<long long>(newly.size());
    s.seq.push_back(v);

    brute_dfs(s, lvl + 1);

    s.seq.pop_back();
    s.saved -= static_cast<long long>(newly.size());
    for (int u : newly) s.covered[u] = 0;
  }
}

}  // namespace

StrategyResult optimal_bruteforce(const RootedTree& tree,
                                  const BruteForceOptions& opts) {
  if (tree.n > opts.vertex_cap)
    throw std::length_error("size cap exceeded: tree has " +
                            std::to_string(tree.n) + " vertices, cap is " +
                            std::to_string(opts.vertex_cap));

  const auto greedy_r = greedy(tree);
  const auto unburn_r = unburn(tree);
  const StrategyResult& warm =
      unburn_r.saved > greedy_r.saved ? unburn_r : greedy_r;

  BruteState s;
  s.t = &tree;
  const auto by_level = group_by_level(tree);
  s.by_level = &by_level;
  s.covered.assign(tree.n, 0);
  s.best = warm.saved;
  s.best_seq = warm.seq;
  brute_dfs(s, 1);

  StrategyResult r;
  r.saved = s.best;
  r.seq = s.best_seq;
  std::vector<char> covered(tree.n, 0);
  for (int v : r.seq) r.step_weight.push_back(cover_subtree(tree, v, covered));
  return r;
}

RootedTree make_kpq(int k, int p, int q) {
  if (k < 1 || p < 1 || q < 1)
    throw std::invalid_argument("make_kpq requires k, p, q >= 1");

  std::vector<int> parent{-1};
  auto add = [&parent](int par) {
    parent.push_back(par);
    return static_cast<int>(parent.size()) - 1;
  };

  // Left subtrees first so their leaves take the low ids at the deepest level.
  for (int s = 0; s < k + 1; ++s) {
    int prev = 0;
    for (int d = 0; d < k + 1; ++d) prev = add(prev);
    for (int leaf = 0; leaf < q; ++leaf) add(prev);
  }
  const int right_root = add(0);
  for (int j = 1; j <= k; ++j) {
    int prev = right_root;
    for (int d = 0; d < j; ++d) prev = add(prev);
    for (int leaf = 0; leaf < p; ++leaf) add(prev);
  }
  return build_tree(parent);
}

bool adversarial_regime(int k, int p, int q) {
  const long long kk = k;
  return 2 * static_cast<long long>(q) > kk * (kk - 3) &&
         static_cast<long long>(p) > static_cast<long long>(k) + q - 1;
}

namespace {
void require_regime(int k, int p, int q) {
  if (!adversarial_regime(k, p, q))
    throw std::domain_error(
        "adversarial regime violated: requires q > k(k-3)/2 and p > k+q-1");
}
}  // namespace

long long greedy_total_formula(int k, int p, int q) {
  require_regime(k, p, q);
  return static_cast<long long>(k) * (k + p + q + 1) + 2;
}

long long unburn_total_formula(int k, int p, int q) {
  require_regime(k, p, q);
  return static_cast<long long>(k) * (p + 2) + q + 2;
}

int canonical_kpq_q(int k) { return k * (k - 3) / 2 + 1; }
int canonical_kpq_p(int k) { return k * (k - 1) / 2 + 1; }

mpq_class canonical_kpq_ratio(int k) {
  const int p = canonical_kpq_p(k);
  const int q = canonical_kpq_q(k);
  mpq_class r(static_cast<long>(unburn_total_formula(k, p, q)),
              static_cast<long>(greedy_total_formula(k, p, q)));
  r.canonicalize();
  return r;
}

}  // namespace firebreak
