#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "firebreak/grid.hpp"
#include "firebreak/protocol.hpp"

using namespace firebreak;

namespace {

ProtocolConfig make_config(Topology t, std::vector<Coord> initial, int budget,
                           TiePolicy tie = TiePolicy::branch_all) {
  ProtocolConfig cfg;
  cfg.topology = t;
  cfg.initial = std::move(initial);
  cfg.budget = budget;
  cfg.tie = tie;
  return cfg;
}

// (steps, infected) pairs of all branches, sorted for multiset comparison.
std::vector<std::pair<int, long long>> outcomes(const RunResult& r) {
  std::vector<std::pair<int, long long>> out;
  for (const BranchOutcome& b : r.branches) out.push_back({b.steps, b.infected});
  std::sort(out.begin(), out.end());
  return out;
}

// Board state immediately before the placement at time t, replayed from the
// per-cell step maps of a finished branch.
OutbreakState state_before(const BranchOutcome& b, Topology topo, int t) {
  OutbreakState s;
  s.topology = topo;
  s.steps_taken = t;
  for (auto [c, st] : b.infected_at)
    if (st < t) s.aiv.insert(c);
  for (auto [c, st] : b.vaccinated_at)
    if (st < t) s.ppv.insert(c);
  return s;
}

void check_branch_consistency(const ProtocolConfig& cfg,
                              const BranchOutcome& b) {
  REQUIRE(b.steps == static_cast<int>(b.trace.size()));

  // Infection only ever grows, one spread per placement.
  long long infected = static_cast<long long>(cfg.initial.size());
  for (const StepRecord& rec : b.trace) infected += rec.iv1;
  CHECK(infected == b.infected);
  CHECK(b.infected == static_cast<long long>(b.final_state.aiv.size()));

  // Step maps agree with the trace.
  for (const StepRecord& rec : b.trace)
    for (Coord c : rec.chosen) {
      REQUIRE(b.vaccinated_at.count(c) == 1);
      CHECK(b.vaccinated_at.at(c) == rec.step);
    }
  for (Coord c : cfg.initial) CHECK(b.infected_at.at(c) == -1);

  if (b.contained) {
    CHECK(eligible_cells(b.final_state).empty());
    CHECK(b.trace.back().iv2 == 0);
  }
}

}  // namespace

TEST_CASE("square outbreak, budget two: the full deterministic trace") {
  ProtocolConfig cfg = make_config(Topology::square, {{0, 0}}, 2);
  RunResult r = run_protocol(cfg);
  CHECK(!r.aborted);
  REQUIRE(r.branches.size() == 1);
  const BranchOutcome& b = r.branches[0];
  CHECK(b.contained);
  CHECK(b.steps == 8);
  CHECK(b.infected == 18);
  check_branch_consistency(cfg, b);

  REQUIRE(b.trace.size() == 8);
  const std::vector<std::vector<Coord>> chosen{
      {{-1, 0}, {0, -1}}, {{-1, 1}, {0, 2}}, {{1, -2}, {2, -1}},
      {{1, 3}, {3, -1}},  {{4, -1}, {5, 0}}, {{2, 4}, {3, 3}},
      {{4, 3}, {6, 1}},   {{5, 3}, {6, 2}}};
  const int decided[] = {1, 1, 3, 4, 1, 3, 4, -1};
  const int eligible[] = {4, 5, 5, 5, 5, 4, 3, 2};
  const long long iv1[] = {2, 3, 3, 3, 3, 2, 1, 0};
  for (int t = 0; t < 8; ++t) {
    CAPTURE(t);
    const StepRecord& rec = b.trace[t];
    CHECK(rec.step == t);
    CHECK(rec.chosen == chosen[t]);
    CHECK(rec.decided == decided[t]);
    CHECK(rec.eligible == eligible[t]);
    CHECK(rec.iv1 == iv1[t]);
    CHECK(rec.tie == "none");
  }
  // The first step weighs all six pairs; the last covers the frontier.
  CHECK(b.trace[0].subsets == 6);
  CHECK(b.trace[0].candidates == 6);
  CHECK(b.trace[0].iv2 == 5);
  CHECK(b.trace[7].subsets == 1);
  CHECK(b.trace[7].iv2 == 0);
}

TEST_CASE("square run is translation-equivariant") {
  RunResult r = run_protocol(make_config(Topology::square, {{5, -3}}, 2));
  REQUIRE(r.branches.size() == 1);
  CHECK(r.branches[0].steps == 8);
  CHECK(r.branches[0].infected == 18);
  CHECK(r.branches[0].trace[0].chosen ==
        std::vector<Coord>{{4, -3}, {5, -4}});
}

TEST_CASE("triangular outbreak, budget three: three branches") {
  ProtocolConfig cfg = make_config(Topology::triangular, {{0, 0}}, 3);
  RunResult r = run_protocol(cfg);
  CHECK(!r.aborted);
  CHECK(outcomes(r) ==
        std::vector<std::pair<int, long long>>{{6, 17}, {7, 18}, {7, 18}});
  for (const BranchOutcome& b : r.branches) {
    CHECK(b.contained);
    check_branch_consistency(cfg, b);
    // The opening placement is forced by the connectivity rule.
    CHECK(b.trace[0].decided == 0);
    CHECK(b.trace[0].chosen ==
          std::vector<Coord>{{-1, -1}, {-1, 0}, {0, -1}});
    CHECK(b.trace[0].subsets == 20);
  }
  // Third placement: 35 subsets, two fall to the anchoring rule.
  const StepRecord& t2 = r.branches[0].trace[2];
  CHECK(t2.eligible == 7);
  CHECK(t2.subsets == 35);
  CHECK(t2.candidates == 33);
}

TEST_CASE("hexagonal outbreak is contained in two steps from any start") {
  for (Coord start : {Coord{0, 0}, Coord{3, 5}}) {
    CAPTURE(start.x);
    CAPTURE(start.y);
    RunResult r = run_protocol(make_config(Topology::hexagonal, {start}, 2));
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].contained);
    CHECK(r.branches[0].steps == 2);
    CHECK(r.branches[0].infected == 2);
    // Symmetric survivors with a forced outcome collapse without forking.
    CHECK(r.branches[0].trace[0].tie == "determined");
  }
  RunResult r = run_protocol(make_config(Topology::hexagonal, {{3, 5}}, 2));
  CHECK(r.branches[0].trace[0].chosen == std::vector<Coord>{{2, 5}, {3, 6}});
}

TEST_CASE("strong outbreak, budget four: four branches") {
  RunResult r = run_protocol(make_config(Topology::strong, {{0, 0}}, 4));
  CHECK(!r.aborted);
  CHECK(outcomes(r) == std::vector<std::pair<int, long long>>{
                           {8, 35}, {8, 35}, {9, 41}, {9, 41}});
  for (const BranchOutcome& b : r.branches) CHECK(b.contained);
}

TEST_CASE("pentagonal outbreaks") {
  SUBCASE("degree-3 start") {
    RunResult r = run_protocol(make_config(Topology::pentagonal, {{0, 1}}, 2));
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].steps == 2);
    CHECK(r.branches[0].infected == 2);
    CHECK(r.branches[0].trace[0].chosen ==
          std::vector<Coord>{{-1, 1}, {0, 0}});
  }
  SUBCASE("degree-4 start forks three ways at the second step") {
    RunResult r = run_protocol(make_config(Topology::pentagonal, {{0, 0}}, 2));
    CHECK(outcomes(r) == std::vector<std::pair<int, long long>>{
                             {4, 7}, {4, 7}, {4, 7}});
    for (const BranchOutcome& b : r.branches) {
      CHECK(b.contained);
      CHECK(b.trace[0].chosen == std::vector<Coord>{{-2, 0}, {2, 0}});
    }
    CHECK(r.branches[0].trace[1].tie == "branch");
  }
  SUBCASE("adjacent degree-3 pair") {
    RunResult r = run_protocol(
        make_config(Topology::pentagonal, {{0, 1}, {1, 1}}, 2));
    CHECK(outcomes(r) == std::vector<std::pair<int, long long>>{
                             {4, 8}, {6, 12}, {6, 12}, {6, 12}, {6, 12}});
  }
}

TEST_CASE("random tie policy is seed-reproducible") {
  auto run = [&](std::uint64_t seed) {
    ProtocolConfig cfg =
        make_config(Topology::triangular, {{0, 0}}, 3, TiePolicy::random);
    cfg.seed = seed;
    return run_protocol(cfg);
  };
  RunResult a = run(1), b = run(1), c = run(2), d = run(3);
  REQUIRE(a.branches.size() == 1);
  CHECK(a.branches[0].steps == 6);
  CHECK(a.branches[0].infected == 17);
  CHECK(c.branches[0].steps == 7);
  CHECK(c.branches[0].infected == 18);
  CHECK(d.branches[0].steps == 7);
  CHECK(d.branches[0].infected == 18);
  REQUIRE(a.branches[0].trace.size() == b.branches[0].trace.size());
  for (size_t i = 0; i < a.branches[0].trace.size(); ++i)
    CHECK(a.branches[0].trace[i].chosen == b.branches[0].trace[i].chosen);

  // Every random outcome appears in the exhaustive branch set.
  RunResult all =
      run_protocol(make_config(Topology::triangular, {{0, 0}}, 3));
  auto pool = outcomes(all);
  for (const RunResult* r : {&a, &c, &d}) {
    std::pair<int, long long> got{r->branches[0].steps,
                                  r->branches[0].infected};
    CHECK(std::find(pool.begin(), pool.end(), got) != pool.end());
  }
}

TEST_CASE("candidate metrics at a mid-run square state") {
  // Replay the unique square branch to just before the fourth placement.
  ProtocolConfig cfg = make_config(Topology::square, {{0, 0}}, 2);
  RunResult r = run_protocol(cfg);
  OutbreakState s = state_before(r.branches[0], Topology::square, 3);
  REQUIRE(s.aiv.size() == 9);
  REQUIRE(s.ppv.size() == 6);

  CandidateSet cs = candidates(s, 2);
  CHECK(cs.eligible == 5);
  CHECK(cs.subsets == 10);
  CHECK(cs.list.size() == 7);  // three pairs fail the anchoring rule

  // The placement the run rejected in favor of {(1,3),(3,-1)} leaves a
  // vaccinated cell with most neighbors infected.
  bool saw_rejected = false, saw_chosen = false;
  for (const Candidate& c : cs.list) {
    if (c.cells == std::vector<Coord>{{1, 3}, {2, 2}}) {
      saw_rejected = true;
      CHECK(c.any_bad);
      CHECK(!c.any_good);
      CoordSet aiv_next = s.aiv;
      for (Coord v : c.iv1) aiv_next.insert(v);
      CHECK(classify_ppv(Topology::square, {2, -1}, aiv_next, c.iv1) ==
            PpvLabel::bad);
    }
    if (c.cells == std::vector<Coord>{{1, 3}, {3, -1}}) {
      saw_chosen = true;
      CHECK(!c.any_bad);
      CHECK(c.iv2.size() == 5);
    }
  }
  CHECK(saw_rejected);
  CHECK(saw_chosen);

  // A vaccinated cell shielded from the spread is good at the third step.
  OutbreakState s2 = state_before(r.branches[0], Topology::square, 2);
  CandidateSet cs2 = candidates(s2, 2);
  for (const Candidate& c : cs2.list)
    if (c.cells == r.branches[0].trace[2].chosen) {
      CoordSet aiv_next = s2.aiv;
      for (Coord v : c.iv1) aiv_next.insert(v);
      CHECK(classify_ppv(Topology::square, {0, 2}, aiv_next, c.iv1) ==
            PpvLabel::good);
    }
}

TEST_CASE("a contained state offers no candidates") {
  OutbreakState s;
  s.topology = Topology::square;
  s.aiv = {{0, 0}};
  s.ppv = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  CHECK(eligible_cells(s).empty());
  CandidateSet cs = candidates(s, 2);
  CHECK(cs.list.empty());
  CHECK(cs.eligible == 0);
}

TEST_CASE("step rejects a candidate built for a different state") {
  OutbreakState s;
  s.topology = Topology::square;
  s.aiv = {{0, 0}};
  CandidateSet cs = candidates(s, 2);
  REQUIRE(!cs.list.empty());
  OutbreakState other = s;
  other.aiv.insert({3, 3});
  CHECK_THROWS_AS(step(other, cs.list.front()), std::logic_error);
}

TEST_CASE("guards and input validation") {
  CHECK_THROWS_AS(run_protocol(make_config(Topology::square, {}, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_protocol(make_config(Topology::square, {{0, 0}}, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      run_protocol(make_config(Topology::pentagonal, {{1, 0}}, 2)),
      std::invalid_argument);

  // One vaccine per step cannot contain a square outbreak; the frontier
  // guard ends the run once 25 cells are eligible.
  RunResult r =
      run_protocol(make_config(Topology::square, {{0, 0}}, 1,
                               TiePolicy::random));
  CHECK(r.aborted);
  CHECK(r.abort_reason ==
        "candidate explosion guard: 25 eligible cells (limit 24)");
  REQUIRE(r.branches.size() == 1);
  CHECK(!r.branches[0].contained);

  // max_steps cuts the same run off earlier, without an abort.
  ProtocolConfig capped =
      make_config(Topology::square, {{0, 0}}, 1, TiePolicy::random);
  capped.max_steps = 3;
  RunResult rc = run_protocol(capped);
  CHECK(!rc.aborted);
  REQUIRE(rc.branches.size() == 1);
  CHECK(!rc.branches[0].contained);
  CHECK(rc.branches[0].steps == 3);
  CHECK(rc.branches[0].infected == 19);
}
