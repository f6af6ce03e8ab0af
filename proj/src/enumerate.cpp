#include "firebreak/enumerate.hpp"

#include <algorithm>
#include <condition_variable>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <stdexcept>
#include <thread>

namespace firebreak {

RootedTreeStream::RootedTreeStream(int n) : n_(n) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("rooted tree stream requires 1 <= n <= 16");
  level_.resize(n);
  for (int i = 0; i < n; ++i) level_[i] = i;  // path, the lex-largest sequence
}

bool RootedTreeStream::next(std::vector<int>& parent) {
  if (done_) return false;
  if (!first_) {
    // Successor in decreasing lex order: trim the rightmost deep vertex back
    // onto its parent's level pattern and tile that block rightward.
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
      if (level_[i] > 1) {
        p = i;
        break;
      }
    if (p == -1) {
      done_ = true;
      return false;
    }
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (level_[i] == level_[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n_; ++i) level_[i] = level_[i - (p - q)];
  }
  first_ = false;

  parent.assign(n_, -1);
  std::vector<int> last_at(n_, -1);
  last_at[0] = 0;
  for (int i = 1; i < n_; ++i) {
    parent[i] = last_at[level_[i] - 1];
    last_at[level_[i]] = i;
  }
  return true;
}

void for_each_rooted_tree(int n,
                          const std::function<void(const std::vector<int>&)>& fn) {
  RootedTreeStream stream(n);
  std::vector<int> parent;
  while (stream.next(parent)) fn(parent);
}

long long count_rooted_trees(int n) {
  long long count = 0;
  for_each_rooted_tree(n, [&count](const std::vector<int>&) { ++count; });
  return count;
}

std::string ahu_canonical(const RootedTree& tree) {
  std::vector<std::string> canon(tree.n);
  std::vector<int> order{tree.root};
  order.reserve(tree.n);
  for (size_t i = 0; i < order.size(); ++i)
    for (int c : tree.children[order[i]]) order.push_back(c);
  for (size_t i = order.size(); i-- > 0;) {
    const int v = order[i];
    std::vector<std::string> parts;
    parts.reserve(tree.children[v].size());
    for (int c : tree.children[v]) parts.push_back(canon[c]);
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& part : parts) s += part;
    s += ")";
    canon[v] = std::move(s);
  }
  return canon[tree.root];
}

namespace {

GapTreeReport make_report(const RootedTree& tree, const GapResult& g) {
  GapTreeReport r;
  r.tree_text = format_tree(tree);
  r.canonical = ahu_canonical(tree);
  r.m = g.m;
  r.m_star = g.m_star;
  r.gap = g.gap;
  return r;
}

}  // namespace

CensusResult gap_census(int n, const CensusOptions& opts) {
  if (n > 14 && !opts.override_size_guard)
    throw std::length_error(
        "census guard: n > 14 must be explicitly overridden (tree counts and "
        "LP sizes grow superexponentially)");

  CensusResult result;
  result.n = n;

  int jobs = opts.jobs;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  if (jobs == 1) {
    for_each_rooted_tree(n, [&](const std::vector<int>& parent) {
      ++result.total;
      const RootedTree tree = build_tree(parent);
      const GapResult g = tree_gap(tree, opts.cross_level_rows);
      if (g.gap > 0) result.gaps.push_back(make_report(tree, g));
    });
    return result;
  }

  struct Batch {
    long long first_index = 0;
    std::vector<std::vector<int>> parents;
  };
  std::queue<Batch> work;
  std::mutex mu;
  std::condition_variable cv;
  bool closed = false;
  std::vector<std::pair<long long, GapTreeReport>> found;

  auto worker = [&]() {
    std::vector<std::pair<long long, GapTreeReport>> local;
    while (true) {
      Batch batch;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return closed || !work.empty(); });
        if (work.empty()) break;
        batch = std::move(work.front());
        work.pop();
      }
      cv.notify_all();
      for (size_t i = 0; i < batch.parents.size(); ++i) {
        const RootedTree tree = build_tree(batch.parents[i]);
        const GapResult g = tree_gap(tree, opts.cross_level_rows);
        if (g.gap > 0)
          local.emplace_back(batch.first_index + static_cast<long long>(i),
                             make_report(tree, g));
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    found.insert(found.end(), local.begin(), local.end());
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);

  constexpr size_t kBatchSize = 128;
  constexpr size_t kMaxQueued = 64;
  Batch current;
  for_each_rooted_tree(n, [&](const std::vector<int>& parent) {
    if (current.parents.empty()) current.first_index = result.total;
    current.parents.push_back(parent);
    ++result.total;
    if (current.parents.size() >= kBatchSize) {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return work.size() < kMaxQueued; });
      work.push(std::move(current));
      current = Batch{};
      cv.notify_all();
    }
  });
  {
    std::lock_guard<std::mutex> lock(mu);
    if (!current.parents.empty()) work.push(std::move(current));
    closed = true;
  }
  cv.notify_all();
  for (auto& t : pool) t.join();

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  result.gaps.reserve(found.size());
  for (auto& [idx, report] : found) result.gaps.push_back(std::move(report));
  return result;
}

std::string census_summary_line(const CensusResult& r) {
  return "n=" + std::to_string(r.n) + " total=" + std::to_string(r.total) +
         " gaps=" + std::to_string(r.gaps.size());
}

LeafExtensionCheck leaf_extension_check(const std::vector<GapTreeReport>& extended,
                                        const std::vector<GapTreeReport>& base) {
  std::map<std::string, int> base_index;
  for (size_t i = 0; i < base.size(); ++i)
    base_index.emplace(base[i].canonical, static_cast<int>(i));

  LeafExtensionCheck out;
  out.parent_multiplicity.assign(base.size(), 0);
  out.all_decompose = !extended.empty();

  for (const auto& report : extended) {
    const RootedTree tree = parse_tree(report.tree_text);
    std::set<int> parents_hit;
    for (int v = 0; v < tree.n; ++v) {
      if (v == tree.root || !tree.children[v].empty()) continue;
      std::vector<int> reduced;
      reduced.reserve(tree.n - 1);
      for (int u = 0; u < tree.n; ++u) {
        if (u == v) continue;
        int p = tree.parent[u];
        if (p != -1 && p > v) --p;  // ids above the deleted leaf shift down
        reduced.push_back(p);
      }
      const auto it = base_index.find(ahu_canonical(build_tree(reduced)));
      if (it != base_index.end()) parents_hit.insert(it->second);
    }
    LeafExtensionCheck::PerTree per;
    per.decomposes = !parents_hit.empty();
    if (parents_hit.size() == 1) {
      per.parent_index = *parents_hit.begin();
      ++out.parent_multiplicity[per.parent_index];
    } else if (parents_hit.size() > 1) {
      per.parent_index = -2;
    }
    if (!per.decomposes) out.all_decompose = false;
    out.per_tree.push_back(per);
  }
  return out;
}

}  // namespace firebreak
