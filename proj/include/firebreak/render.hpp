#pragma once

// Deterministic reporting: board renderers, the per-run summary table, and
// the JSON-lines emitters. Identical inputs produce identical bytes.

#include <string>

#include "firebreak/enumerate.hpp"
#include "firebreak/protocol.hpp"

namespace firebreak {

// Character board with a '#'-prefixed legend header. Rows run from the top
// (largest y) down; '*' initial, digits infection step (mod 10), letters
// placement step ('a' + step, mod 26), '?' the surviving frontier, '.'
// susceptible. The pentagonal lattice has holes that make a character grid
// misleading, so it falls back to a sorted coordinate listing.
std::string render_ascii(const ProtocolConfig& config, const BranchOutcome& branch);

// Standalone SVG 1.1 document, one shape per known cell (rects on
// square/strong, circles elsewhere), labels carrying the step number.
std::string render_svg(const ProtocolConfig& config, const BranchOutcome& branch);

// One row per branch (steps, infected, histogram of deciding rules), then
// min/max outcome lines ordered by (infected, steps).
std::string report_summary(const ProtocolConfig& config, const RunResult& run);

// One JSON record per (branch, step): candidate counts, per-rule survivor
// counts, the chosen cells, and the placement's |IV1|/|IV2|.
std::string trace_jsonl(const RunResult& run);

// One JSON record per gap tree: n, tree text, m, and m*/gap as exact
// fraction strings.
std::string census_jsonl(const CensusResult& census);

}  // namespace firebreak
