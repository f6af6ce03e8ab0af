#pragma once

// Scenario files configure a protocol run. Format: one `key = value` pair
// per line, `#` comments and blank lines ignored. Keys:
//   topology  = hexagonal | square | triangular | strong | pentagonal
//   initial   = (x,y) [, (x,y) ...]
//   budget    = vaccines per time step, >= 1
//   tie       = random | branch-all            (default random)
//   seed      = unsigned 64-bit                (default 0)
//   max_steps = positive step limit            (default 64)
// topology, initial, and budget are required.

#include <stdexcept>
#include <string>
#include <vector>

#include "firebreak/protocol.hpp"

namespace firebreak {

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(std::vector<std::string> all);
  std::vector<std::string> errors;  // every problem found, not just the first
};

// Parses and fully validates a scenario (unknown keys, malformed values,
// missing requirements, off-lattice or duplicate initial vertices). Throws
// ScenarioError carrying the complete error list.
ProtocolConfig parse_scenario(const std::string& text);

ProtocolConfig load_scenario_file(const std::string& path);

}  // namespace firebreak
