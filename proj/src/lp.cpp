#include "firebreak/lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace firebreak {

LPModel build_ip(const RootedTree& tree, bool with_cross_level_rows) {
  LPModel m;
  m.vertex_to_var.assign(tree.n, -1);
  for (int v = 0; v < tree.n; ++v) {
    if (v == tree.root) continue;
    m.vertex_to_var[v] = m.num_vars++;
    m.var_to_vertex.push_back(v);
    m.objective.push_back(tree.wt[v]);
  }

  std::set<std::vector<int>> seen;
  auto add_row = [&](std::vector<int> vars) {
    std::sort(vars.begin(), vars.end());
    if (vars.empty() || !seen.insert(vars).second) return;
    m.rows.push_back(LPRow{std::move(vars), 1});
  };

  std::vector<std::vector<int>> by_level(tree.max_level + 1);
  for (int v = 0; v < tree.n; ++v)
    if (v != tree.root) by_level[tree.level[v]].push_back(v);
  for (int lvl = 1; lvl <= tree.max_level; ++lvl) {
    std::vector<int> vars;
    for (int v : by_level[lvl]) vars.push_back(m.vertex_to_var[v]);
    add_row(std::move(vars));
  }

  auto chain_vars = [&](int u) {
    std::vector<int> vars;
    for (int a = u; a != tree.root; a = tree.parent[a])
      vars.push_back(m.vertex_to_var[a]);
    return vars;
  };
  for (int v = 0; v < tree.n; ++v)
    if (v != tree.root && tree.children[v].empty()) add_row(chain_vars(v));

  if (with_cross_level_rows) {
    for (int u = 0; u < tree.n; ++u) {
      if (u == tree.root || tree.children[u].empty()) continue;
      std::vector<int> vars = chain_vars(u);
      for (int c : tree.children[u]) vars.push_back(m.vertex_to_var[c]);
      add_row(std::move(vars));
    }
  }

  // Support-subset dominance: with unit coefficients and unit bounds, a row
  // whose support is strictly contained in another's is implied by it.
  // Exact duplicates never reach this point (add_row drops them), so flags
  // are decided against the full original list and collected afterwards.
  std::vector<char> dominated(m.rows.size(), 0);
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (size_t j = 0; j < m.rows.size(); ++j) {
      if (i == j || m.rows[j].vars.size() <= m.rows[i].vars.size()) continue;
      if (std::includes(m.rows[j].vars.begin(), m.rows[j].vars.end(),
                        m.rows[i].vars.begin(), m.rows[i].vars.end())) {
        dominated[i] = 1;
        break;
      }
    }
  std::vector<LPRow> kept;
  for (size_t i = 0; i < m.rows.size(); ++i)
    if (!dominated[i]) kept.push_back(std::move(m.rows[i]));
  m.rows = std::move(kept);
  return m;
}

LPSolution solve_lp(const LPModel& model) {
  const int n = model.num_vars;
  std::vector<LPRow> rows = model.rows;

  // Box the variables: anything not covered by a bound<=1 row could make the
  // program unbounded, so give it an explicit x <= 1 row.
  {
    std::vector<char> covered(n, 0);
    for (const auto& r : rows)
      if (r.bound <= 1)
        for (int v : r.vars) covered[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!covered[v]) rows.push_back(LPRow{{v}, 1});
  }

  const int mrows = static_cast<int>(rows.size());
  const int cols = n + mrows;  // structural then slack variables

  std::vector<std::vector<mpq_class>> tab(
      mrows, std::vector<mpq_class>(cols + 1, mpq_class(0)));
  std::vector<int> basis(mrows);
  for (int i = 0; i < mrows; ++i) {
    for (int v : rows[i].vars) tab[i][v] = 1;
    tab[i][n + i] = 1;
    tab[i][cols] = static_cast<long>(rows[i].bound);
    basis[i] = n + i;
  }
  std::vector<mpq_class> cost(cols + 1, mpq_class(0));
  for (int j = 0; j < n; ++j) cost[j] = -mpq_class(static_cast<long>(model.objective[j]));

  LPSolution sol;
  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;  // Bland: lowest-index improving column
      }
    if (enter == -1) break;

    int leave = -1;
    mpq_class best_ratio;
    for (int i = 0; i < mrows; ++i) {
      if (tab[i][enter] <= 0) continue;
      mpq_class ratio = tab[i][cols] / tab[i][enter];
      if (leave == -1 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == -1)
      throw std::runtime_error("unbounded linear program");  // boxed: unreachable

    ++sol.pivots;
    const mpq_class pivot = tab[leave][enter];
    for (int j = 0; j <= cols; ++j) tab[leave][j] /= pivot;
    for (int i = 0; i < mrows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const mpq_class f = tab[i][enter];
      for (int j = 0; j <= cols; ++j)
        if (tab[leave][j] != 0) tab[i][j] -= f * tab[leave][j];
    }
    if (cost[enter] != 0) {
      const mpq_class f = cost[enter];
      for (int j = 0; j <= cols; ++j)
        if (tab[leave][j] != 0) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  sol.x.assign(n, mpq_class(0));
  for (int i = 0; i < mrows; ++i)
    if (basis[i] < n) sol.x[basis[i]] = tab[i][cols];
  sol.value = 0;
  for (int j = 0; j < n; ++j)
    if (sol.x[j] != 0) sol.value += mpq_class(static_cast<long>(model.objective[j])) * sol.x[j];
  return sol;
}

namespace {

struct IPState {
  const RootedTree* t;
  const std::vector<std::vector<int>>* by_level;
  const std::vector<long long>* suffix_bound;
  std::vector<char> chosen;
  std::vector<int> picks;
  long long value = 0;
  long long best = 0;
  std::vector<int> best_picks;
};

bool has_chosen_ancestor(const IPState& s, int v) {
  for (int a = s.t->parent[v]; a != -1; a = s.t->parent[a])
    if (s.chosen[a]) return true;
  return false;
}

void ip_dfs(IPState& s, int lvl) {
  if (lvl > s.t->max_level) {
    if (s.value > s.best) {
      s.best = s.value;
      s.best_picks = s.picks;
    }
    return;
  }
  if (s.value + (*s.suffix_bound)[lvl] <= s.best) return;

  std::vector<int> cands;
  for (int v : (*s.by_level)[lvl])
    if (!has_chosen_ancestor(s, v)) cands.push_back(v);
  std::sort(cands.begin(), cands.end(), [&](int a, int b) {
    if (s.t->wt[a] != s.t->wt[b]) return s.t->wt[a] > s.t->wt[b];
    return a < b;
  });
  for (int v : cands) {
    s.chosen[v] = 1;
    s.picks.push_back(v);
    s.value += s.t->wt[v];
    ip_dfs(s, lvl + 1);
    s.value -= s.t->wt[v];
    s.picks.pop_back();
    s.chosen[v] = 0;
  }
  ip_dfs(s, lvl + 1);  // levels may be skipped
}

}  // namespace

IPSolution solve_ip(const RootedTree& tree) {
  std::vector<std::vector<int>> by_level(tree.max_level + 1);
  for (int v = 0; v < tree.n; ++v)
    if (v != tree.root) by_level[tree.level[v]].push_back(v);

  std::vector<long long> suffix_bound(tree.max_level + 2, 0);
  for (int lvl = tree.max_level; lvl >= 1; --lvl) {
    long long mx = 0;
    for (int v : by_level[lvl]) mx = std::max(mx, static_cast<long long>(tree.wt[v]));
    suffix_bound[lvl] = suffix_bound[lvl + 1] + mx;
  }

  IPState s;
  s.t = &tree;
  s.by_level = &by_level;
  s.suffix_bound = &suffix_bound;
  s.chosen.assign(tree.n, 0);
  ip_dfs(s, 1);

  IPSolution out;
  out.value = s.best;
  out.chosen = s.best_picks;
  std::sort(out.chosen.begin(), out.chosen.end(),
            [&](int a, int b) { return tree.level[a] < tree.level[b]; });
  return out;
}

GapResult tree_gap(const RootedTree& tree, bool with_cross_level_rows) {
  GapResult g;
  g.m = solve_ip(tree).value;
  g.m_star = solve_lp(build_ip(tree, with_cross_level_rows)).value;
  g.gap = g.m_star - mpq_class(static_cast<long>(g.m));
  return g;
}

}  // namespace firebreak
