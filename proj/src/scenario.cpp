#include "firebreak/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace firebreak {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '\n';
    out += p;
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_ll(const std::string& s, long long& out) {
  try {
    size_t used = 0;
    out = std::stoll(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

// "(x,y), (x,y)" with free whitespace.
bool parse_coords(const std::string& value, std::vector<Coord>& out) {
  size_t i = 0;
  const auto skip_ws = [&] {
    while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i])))
      ++i;
  };
  while (true) {
    skip_ws();
    if (i >= value.size() || value[i] != '(') return false;
    const size_t close = value.find(')', i);
    const size_t comma = value.find(',', i);
    if (close == std::string::npos || comma == std::string::npos || comma > close)
      return false;
    long long x, y;
    if (!parse_ll(trim(value.substr(i + 1, comma - i - 1)), x) ||
        !parse_ll(trim(value.substr(comma + 1, close - comma - 1)), y))
      return false;
    out.push_back(Coord{x, y});
    i = close + 1;
    skip_ws();
    if (i == value.size()) return true;
    if (value[i] != ',') return false;
    ++i;
  }
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> all)
    : std::runtime_error(join(all)), errors(std::move(all)) {}

ProtocolConfig parse_scenario(const std::string& text) {
  ProtocolConfig config;
  std::vector<std::string> errors;
  bool saw_topology = false, saw_initial = false, saw_budget = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(lineno) +
                       ": expected key = value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "topology") {
      saw_topology = true;
      if (auto t = parse_topology(value)) {
        config.topology = *t;
      } else {
        std::string known;
        for (const char* name : kTopologyNames) {
          if (!known.empty()) known += ", ";
          known += name;
        }
        errors.push_back("unknown topology \"" + value + "\" (known: " + known +
                         ")");
        saw_topology = false;
      }
    } else if (key == "initial") {
      saw_initial = true;
      config.initial.clear();
      if (!parse_coords(value, config.initial) || config.initial.empty()) {
        errors.push_back("initial: expected (x,y) [, (x,y) ...], got \"" +
                         value + "\"");
        saw_initial = false;
      }
    } else if (key == "budget") {
      saw_budget = true;
      long long v;
      if (!parse_ll(value, v)) {
        errors.push_back("budget: not an integer: \"" + value + "\"");
        saw_budget = false;
      } else if (v < 1) {
        errors.push_back("budget must be ≥ 1");
        saw_budget = false;
      } else {
        config.budget = static_cast<int>(v);
      }
    } else if (key == "tie") {
      if (value == "random")
        config.tie = TiePolicy::random;
      else if (value == "branch-all")
        config.tie = TiePolicy::branch_all;
      else
        errors.push_back("tie: expected random or branch-all, got \"" + value +
                         "\"");
    } else if (key == "seed") {
      try {
        size_t used = 0;
        config.seed = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        errors.push_back("seed: not an unsigned integer: \"" + value + "\"");
      }
    } else if (key == "max_steps") {
      long long v;
      if (!parse_ll(value, v) || v < 1)
        errors.push_back("max_steps: expected a positive integer, got \"" +
                         value + "\"");
      else
        config.max_steps = static_cast<int>(v);
    } else {
      errors.push_back("unknown key \"" + key + "\"");
    }
  }

  if (!saw_topology) errors.push_back("missing required key: topology");
  if (!saw_initial) errors.push_back("missing required key: initial");
  if (!saw_budget) errors.push_back("missing required key: budget");

  if (saw_topology && saw_initial) {
    CoordSet seen;
    for (Coord c : config.initial) {
      if (!is_vertex(config.topology, c))
        errors.push_back("initial vertex (" + std::to_string(c.x) + "," +
                         std::to_string(c.y) + ") is not on the " +
                         topology_name(config.topology) + " lattice");
      if (!seen.insert(c).second)
        errors.push_back("duplicate initial vertex (" + std::to_string(c.x) +
                         "," + std::to_string(c.y) + ")");
    }
  }

  if (!errors.empty()) throw ScenarioError(std::move(errors));
  return config;
}

ProtocolConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ScenarioError({"cannot open scenario file: " + path});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace firebreak
