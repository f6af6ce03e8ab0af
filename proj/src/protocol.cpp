#include "firebreak/protocol.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace firebreak {

namespace {

constexpr int kEligibleGuard = 24;
constexpr int kBranchGuard = 10000;
constexpr int kDistanceCap = 1 << 20;  // effectively unbounded on a lattice

}  // namespace

PpvLabel classify_ppv(Topology t, Coord ppv, const CoordSet& aiv_next,
                      const CoordSet& iv1) {
  const auto nbs = neighbors(t, ppv);
  bool touches_iv1 = false;
  int infected_neighbors = 0;
  for (Coord nb : nbs) {
    if (iv1.count(nb)) touches_iv1 = true;
    if (aiv_next.count(nb)) ++infected_neighbors;
  }
  if (!touches_iv1) return PpvLabel::unlabeled;
  return 2 * infected_neighbors <= static_cast<int>(nbs.size())
             ? PpvLabel::good
             : PpvLabel::bad;
}

std::vector<Coord> eligible_cells(const OutbreakState& s) {
  CoordSet out;
  for (Coord v : s.aiv)
    for (Coord nb : neighbors(s.topology, v))
      if (!s.aiv.count(nb) && !s.ppv.count(nb)) out.insert(nb);
  return {out.begin(), out.end()};
}

namespace {

Candidate make_candidate(const OutbreakState& s,
                         const std::vector<Coord>& eligible,
                         std::vector<Coord> cells) {
  Candidate c;
  c.cells = std::move(cells);

  for (Coord v : eligible)
    if (!std::binary_search(c.cells.begin(), c.cells.end(), v))
      c.iv1.insert(v);

  CoordSet aiv_next = s.aiv;
  aiv_next.insert(c.iv1.begin(), c.iv1.end());
  for (Coord v : aiv_next)
    for (Coord nb : neighbors(s.topology, v)) {
      if (aiv_next.count(nb) || s.ppv.count(nb)) continue;
      if (std::binary_search(c.cells.begin(), c.cells.end(), nb)) continue;
      c.iv2.insert(nb);
    }

  for (Coord p : s.ppv) {
    const PpvLabel label = classify_ppv(s.topology, p, aiv_next, c.iv1);
    if (label == PpvLabel::good) c.any_good = true;
    if (label == PpvLabel::bad) c.any_bad = true;
    for (Coord nb : neighbors(s.topology, p))
      if (c.iv2.count(nb)) ++c.cp2_pairs;
  }

  for (Coord cell : c.cells) {
    const int d = distance_to_set(s.topology, cell, s.ppv, kDistanceCap);
    c.cp5_distance += d >= 0 ? d : kDistanceCap;
  }
  return c;
}

// Rule 2: within distance 2 of another cell of this placement or of a PPV.
// Not applied while the board has no vaccine yet.
bool satisfies_rule2(const OutbreakState& s, const std::vector<Coord>& cells) {
  if (s.ppv.empty()) return true;
  for (Coord cell : cells) {
    CoordSet targets = s.ppv;
    for (Coord other : cells)
      if (other != cell) targets.insert(other);
    if (distance_to_set(s.topology, cell, targets, 2) < 0) return false;
  }
  return true;
}

}  // namespace

CandidateSet candidates(const OutbreakState& s, int budget) {
  CandidateSet out;
  const std::vector<Coord> eligible = eligible_cells(s);
  out.eligible = static_cast<int>(eligible.size());

  // A contained state has nothing to vaccinate; no placement exists.
  if (out.eligible == 0) return out;

  if (out.eligible <= budget) {
    // Covering placement seals the frontier; partial budgets are fine here.
    out.sealed = true;
    out.subsets = 1;
    out.list.push_back(make_candidate(s, eligible, eligible));
    return out;
  }
  if (out.eligible > kEligibleGuard)
    throw std::length_error("candidate explosion guard: " +
                            std::to_string(out.eligible) +
                            " eligible cells (limit " +
                            std::to_string(kEligibleGuard) + ")");

  std::vector<int> idx(budget);
  for (int i = 0; i < budget; ++i) idx[i] = i;
  while (true) {
    ++out.subsets;
    std::vector<Coord> cells(budget);
    for (int i = 0; i < budget; ++i) cells[i] = eligible[idx[i]];
    if (satisfies_rule2(s, cells))
      out.list.push_back(make_candidate(s, eligible, std::move(cells)));

    int i = budget - 1;
    while (i >= 0 && idx[i] == out.eligible - budget + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < budget; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

CascadeResult filter_cascade(const OutbreakState& s,
                             const std::vector<Candidate>& cands) {
  CascadeResult r;
  r.survivors = cands;

  auto stage = [&](int index, auto&& keep_if) {
    const long long before = static_cast<long long>(r.survivors.size());
    std::vector<Candidate> kept;
    for (const auto& c : r.survivors)
      if (keep_if(c)) kept.push_back(c);
    if (!kept.empty() && static_cast<long long>(kept.size()) < before) {
      r.survivors = std::move(kept);
      r.decided = index;
    }
    r.after[index] = static_cast<long long>(r.survivors.size());
  };

  // CP0: only the opening placement, and only when satisfiable.
  if (s.steps_taken == 0) {
    stage(0, [&](const Candidate& c) {
      for (Coord cell : c.cells) {
        bool near_other = false;
        for (Coord nb : neighbors(s.topology, cell))
          if (nb != cell &&
              std::binary_search(c.cells.begin(), c.cells.end(), nb)) {
            near_other = true;
            break;
          }
        if (!near_other) return false;
      }
      return !c.cells.empty();
    });
  } else {
    r.after[0] = static_cast<long long>(r.survivors.size());
  }

  long long best_iv2 = -1;
  for (const auto& c : r.survivors) {
    const long long v = static_cast<long long>(c.iv2.size());
    if (best_iv2 < 0 || v < best_iv2) best_iv2 = v;
  }
  stage(1, [&](const Candidate& c) {
    return static_cast<long long>(c.iv2.size()) == best_iv2;
  });

  long long best_pairs = -1;
  for (const auto& c : r.survivors)
    if (best_pairs < 0 || c.cp2_pairs < best_pairs) best_pairs = c.cp2_pairs;
  stage(2, [&](const Candidate& c) { return c.cp2_pairs == best_pairs; });

  bool some_good = false;
  for (const auto& c : r.survivors) some_good |= c.any_good;
  stage(3, [&](const Candidate& c) { return !some_good || c.any_good; });

  bool some_clean = false;
  for (const auto& c : r.survivors) some_clean |= !c.any_bad;
  stage(4, [&](const Candidate& c) { return !some_clean || !c.any_bad; });

  long long best_dist = -1;
  for (const auto& c : r.survivors)
    if (best_dist < 0 || c.cp5_distance < best_dist) best_dist = c.cp5_distance;
  stage(5, [&](const Candidate& c) { return c.cp5_distance == best_dist; });

  return r;
}

void step(OutbreakState& s, const Candidate& chosen) {
  // Recompute the spread against the live state; a stale candidate would
  // silently corrupt the run otherwise.
  CoordSet cells(chosen.cells.begin(), chosen.cells.end());
  CoordSet iv1;
  for (Coord v : s.aiv)
    for (Coord nb : neighbors(s.topology, v))
      if (!s.aiv.count(nb) && !s.ppv.count(nb) && !cells.count(nb))
        iv1.insert(nb);
  if (iv1 != chosen.iv1)
    throw std::logic_error("stale candidate applied to a different state");

  s.ppv.insert(cells.begin(), cells.end());
  s.aiv.insert(iv1.begin(), iv1.end());
  ++s.steps_taken;
}

namespace {

struct Branch {
  OutbreakState state;
  std::vector<StepRecord> trace;
  std::map<Coord, int> infected_at;
  std::map<Coord, int> vaccinated_at;
};

void apply_choice(Branch& b, const Candidate& chosen, StepRecord record) {
  record.chosen = chosen.cells;
  record.iv1 = static_cast<long long>(chosen.iv1.size());
  record.iv2 = static_cast<long long>(chosen.iv2.size());
  for (Coord c : chosen.cells) b.vaccinated_at.emplace(c, b.state.steps_taken);
  for (Coord c : chosen.iv1) b.infected_at.emplace(c, b.state.steps_taken);
  b.trace.push_back(std::move(record));
  step(b.state, chosen);
}

BranchOutcome finish(Branch&& b, bool contained) {
  BranchOutcome out;
  out.contained = contained;
  out.steps = b.state.steps_taken;
  out.infected = static_cast<long long>(b.state.aiv.size());
  out.trace = std::move(b.trace);
  out.final_state = std::move(b.state);
  out.infected_at = std::move(b.infected_at);
  out.vaccinated_at = std::move(b.vaccinated_at);
  return out;
}

}  // namespace

RunResult run_protocol(const ProtocolConfig& config) {
  RunResult result;
  if (config.initial.empty())
    throw std::invalid_argument("protocol requires a nonempty initial set");
  for (Coord c : config.initial)
    if (!is_vertex(config.topology, c))
      throw std::invalid_argument("initial vertex off the lattice");
  if (config.budget < 1)
    throw std::invalid_argument("protocol requires budget >= 1");

  Branch root;
  root.state.topology = config.topology;
  root.state.aiv.insert(config.initial.begin(), config.initial.end());
  for (Coord c : config.initial) root.infected_at.emplace(c, -1);

  std::mt19937_64 rng(config.seed);
  std::vector<Branch> stack;
  stack.push_back(std::move(root));
  long long branches_created = 1;

  while (!stack.empty()) {
    Branch b = std::move(stack.back());
    stack.pop_back();

    bool terminal = false;
    while (!terminal) {
      if (eligible_cells(b.state).empty()) {
        result.branches.push_back(finish(std::move(b), true));
        terminal = true;
        break;
      }
      if (b.state.steps_taken >= config.max_steps) {
        result.branches.push_back(finish(std::move(b), false));
        terminal = true;
        break;
      }

      CandidateSet cs;
      try {
        cs = candidates(b.state, config.budget);
      } catch (const std::length_error& e) {
        result.aborted = true;
        result.abort_reason = e.what();
        result.branches.push_back(finish(std::move(b), false));
        return result;
      }

      StepRecord record;
      record.step = b.state.steps_taken;
      record.eligible = cs.eligible;
      record.subsets = cs.subsets;
      record.candidates = static_cast<long long>(cs.list.size());

      if (cs.sealed) {
        record.survivors.fill(1);
        record.tie = "none";
        apply_choice(b, cs.list.front(), std::move(record));
        continue;
      }

      const CascadeResult cascade = filter_cascade(b.state, cs.list);
      record.survivors = cascade.after;
      record.decided = cascade.decided;

      // Orbit classes under the board stabilizer: symmetric survivors are
      // one decision, not several.
      const auto stab = stabilizer(b.state.topology, b.state.aiv, b.state.ppv);
      std::map<std::vector<Coord>, const Candidate*> classes;
      for (const auto& c : cascade.survivors) {
        const auto key = orbit_canonical(stab, c.cells);
        auto [it, inserted] = classes.emplace(key, &c);
        // Prefer the representative that literally equals the class key; the
        // stabilizer maps survivors to survivors, so it exists.
        if (!inserted && c.cells == key) it->second = &c;
      }

      if (classes.size() == 1) {
        record.tie = "none";
        apply_choice(b, *classes.begin()->second, std::move(record));
        continue;
      }

      const long long shared_iv2 =
          static_cast<long long>(cascade.survivors.front().iv2.size());
      if (shared_iv2 <= config.budget) {
        // Every survivor infects the same count now and seals next step, so
        // the outcome is forced; take the canonical class.
        record.tie = "determined";
        apply_choice(b, *classes.begin()->second, std::move(record));
        continue;
      }

      if (config.tie == TiePolicy::random) {
        std::uniform_int_distribution<size_t> pick(0,
                                                   cascade.survivors.size() - 1);
        record.tie = "random";
        apply_choice(b, cascade.survivors[pick(rng)], std::move(record));
        continue;
      }

      branches_created += static_cast<long long>(classes.size()) - 1;
      if (branches_created > kBranchGuard) {
        result.aborted = true;
        result.abort_reason = "branch guard: more than " +
                              std::to_string(kBranchGuard) + " branches";
        result.branches.push_back(finish(std::move(b), false));
        return result;
      }
      record.tie = "branch";
      std::vector<Branch> children;
      for (const auto& [key, cand] : classes) {
        Branch child = b;  // trace and history copied per fork
        apply_choice(child, *cand, record);
        children.push_back(std::move(child));
      }
      for (size_t i = children.size(); i-- > 0;)
        stack.push_back(std::move(children[i]));
      terminal = true;  // this path continues in the children
    }
  }
  return result;
}

}  // namespace firebreak
