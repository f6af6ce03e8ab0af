#pragma once

// Containment protocol for lattice outbreaks. Each time step places up to
// `budget` vaccines on susceptible neighbors of the infected set (AIV), then
// the infection spreads to every unvaccinated neighbor. Placements are
// scored by a fixed cascade of elimination rules; surviving ties are either
// resolved by a seeded draw or explored exhaustively (branch-all).
//
// Candidate rules (all placements must satisfy):
//   rule 0: cells are susceptible (not AIV, not PPV) lattice vertices;
//   rule 1: every cell is adjacent to an AIV (hence on the frontier);
//   rule 2: once any vaccine is on the board (PPV nonempty), every cell is
//           within graph distance 2 of another cell of this placement or of
//           a PPV. The very first placement is exempt: with an empty board
//           there is nothing to anchor to.
//
// Cascade over the surviving placements:
//   CP0 (step 0 only, and only if satisfiable): keep placements where every
//        cell is adjacent to another cell;
//   CP1: minimize |IV2| (the frontier the placement leaves for next step);
//   CP2: minimize the number of adjacent (PPV, IV2-vertex) pairs;
//   CP3: if any survivor has a good PPV, drop those with none;
//   CP4: if any survivor has no bad PPV, drop those with one;
//   CP5: minimize the summed distance from cells to the nearest PPV.
// A PPV adjacent to the placement's IV1 is good when at most half its
// neighbors end up infected after the spread, bad otherwise; PPVs not
// adjacent to IV1 stay unlabeled.
//
// Ties after CP5 are first deduplicated into orbit classes under the
// stabilizer of the current board. If the shared |IV2| fits within the
// budget the outcome is already forced (this spread's infection count is
// placement-independent and the next step seals the IV2 set), so the run
// takes the canonical class instead of splitting; otherwise tie policy
// applies: a seeded uniform draw over raw survivors, or a fork per class.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "firebreak/grid.hpp"

namespace firebreak {

enum class TiePolicy { random, branch_all };

struct ProtocolConfig {
  Topology topology = Topology::square;
  std::vector<Coord> initial;
  int budget = 1;
  TiePolicy tie = TiePolicy::random;
  std::uint64_t seed = 0;
  int max_steps = 64;
};

struct OutbreakState {
  Topology topology = Topology::square;
  CoordSet aiv;  // infected
  CoordSet ppv;  // vaccinated
  int steps_taken = 0;
};

struct Candidate {
  std::vector<Coord> cells;  // sorted
  CoordSet iv1;              // infected next spread if this is placed
  CoordSet iv2;              // frontier left after that spread
  long long cp2_pairs = 0;
  bool any_good = false;
  bool any_bad = false;
  long long cp5_distance = 0;
};

enum class PpvLabel { good, bad, unlabeled };

// aiv_next = AIV u IV1 for the placement under evaluation.
PpvLabel classify_ppv(Topology t, Coord ppv, const CoordSet& aiv_next,
                      const CoordSet& iv1);

// Susceptible lattice neighbors of AIV, ascending.
std::vector<Coord> eligible_cells(const OutbreakState& s);

struct CandidateSet {
  std::vector<Candidate> list;
  int eligible = 0;
  long long subsets = 0;  // size-budget subsets before rule filtering
  bool sealed = false;    // frontier fit within budget; single covering placement
};

// Enumerates placements of exactly `budget` cells satisfying rules 0-2 (one
// covering placement when the frontier is not larger than the budget), with
// IV1/IV2 and the cascade metrics filled in.
CandidateSet candidates(const OutbreakState& s, int budget);

struct CascadeResult {
  std::vector<Candidate> survivors;
  std::array<long long, 6> after = {};  // survivor count after CP0..CP5
  int decided = -1;                     // last stage that strictly reduced
};

CascadeResult filter_cascade(const OutbreakState& s,
                             const std::vector<Candidate>& cands);

// Applies a placement: cells join PPV, IV1 joins AIV, the step counter
// advances. The caller's IV1 is revalidated against the state.
void step(OutbreakState& s, const Candidate& chosen);

struct StepRecord {
  int step = 0;
  int eligible = 0;
  long long subsets = 0;
  long long candidates = 0;              // after rules 0-2
  std::array<long long, 6> survivors = {};
  int decided = -1;                      // -1 none, else CP index 0..5
  std::string tie;                       // none | determined | random | branch
  std::vector<Coord> chosen;
  long long iv1 = 0;
  long long iv2 = 0;
};

struct BranchOutcome {
  bool contained = false;
  int steps = 0;          // placements made
  long long infected = 0; // |AIV| at the end, initial outbreak included
  std::vector<StepRecord> trace;
  OutbreakState final_state;
  std::map<Coord, int> infected_at;    // spread step per cell; initial = -1
  std::map<Coord, int> vaccinated_at;  // placement step per cell
};

struct RunResult {
  std::vector<BranchOutcome> branches;
  bool aborted = false;
  std::string abort_reason;
};

// Guards: a step whose frontier exceeds 24 eligible cells aborts the run
// (subset explosion), as does passing 10000 forked branches. A branch that
// reaches max_steps uncontained reports contained=false.
RunResult run_protocol(const ProtocolConfig& config);

}  // namespace firebreak
