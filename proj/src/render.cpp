#include "firebreak/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace firebreak {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class CellState { initial, infected, vaccinated, frontier };

struct CellMark {
  CellState state;
  int step;  // spread or placement step; unused for initial/frontier
};

// Every coordinate the renderers draw, with its final state.
std::map<Coord, CellMark> collect_marks(const BranchOutcome& branch) {
  std::map<Coord, CellMark> marks;
  for (const auto& [c, t] : branch.infected_at) {
    marks[c] = t < 0 ? CellMark{CellState::initial, 0}
                     : CellMark{CellState::infected, t};
  }
  for (const auto& [c, t] : branch.vaccinated_at) {
    marks[c] = CellMark{CellState::vaccinated, t};
  }
  if (!branch.contained) {
    for (Coord c : eligible_cells(branch.final_state)) {
      marks[c] = CellMark{CellState::frontier, 0};
    }
  }
  return marks;
}

struct Box {
  long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

Box bounding_box(const std::map<Coord, CellMark>& marks, long long pad) {
  Box b;
  bool first = true;
  for (const auto& [c, mark] : marks) {
    (void)mark;
    if (first) {
      b = Box{c.x, c.x, c.y, c.y};
      first = false;
    } else {
      b.xmin = std::min(b.xmin, c.x);
      b.xmax = std::max(b.xmax, c.x);
      b.ymin = std::min(b.ymin, c.y);
      b.ymax = std::max(b.ymax, c.y);
    }
  }
  b.xmin -= pad;
  b.xmax += pad;
  b.ymin -= pad;
  b.ymax += pad;
  return b;
}

std::string header_line(const ProtocolConfig& config, const BranchOutcome& branch) {
  std::ostringstream out;
  out << "# firebreak topology=" << topology_name(config.topology)
      << " budget=" << config.budget << " steps=" << branch.steps
      << " infected=" << branch.infected
      << " contained=" << (branch.contained ? "yes" : "no");
  return out.str();
}

std::string state_text(const CellMark& mark) {
  switch (mark.state) {
    case CellState::initial:
      return "initial";
    case CellState::infected:
      return "infected@" + std::to_string(mark.step);
    case CellState::vaccinated:
      return "vaccinated@" + std::to_string(mark.step);
    case CellState::frontier:
      return "frontier";
  }
  return "";
}

// Sorted for display: top row first, left to right within a row.
std::vector<std::pair<Coord, CellMark>> display_order(
    const std::map<Coord, CellMark>& marks) {
  std::vector<std::pair<Coord, CellMark>> cells(marks.begin(), marks.end());
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (a.first.y != b.first.y) return a.first.y > b.first.y;
    return a.first.x < b.first.x;
  });
  return cells;
}

std::string histogram_text(const std::vector<StepRecord>& trace) {
  long long counts[7] = {};  // cp0..cp5, none
  for (const StepRecord& r : trace) {
    counts[r.decided >= 0 ? r.decided : 6]++;
  }
  std::ostringstream out;
  out << "rules[";
  bool any = false;
  for (int i = 0; i < 7; i++) {
    if (counts[i] == 0) continue;
    if (any) out << ' ';
    if (i < 6) {
      out << "cp" << i;
    } else {
      out << "none";
    }
    out << '=' << counts[i];
    any = true;
  }
  out << ']';
  return out.str();
}

}  // namespace

std::string render_ascii(const ProtocolConfig& config, const BranchOutcome& branch) {
  const Topology t = config.topology;
  const auto marks = collect_marks(branch);
  std::ostringstream out;
  out << header_line(config, branch) << '\n';

  if (t == Topology::pentagonal) {
    out << "# listing: x y state\n";
    for (const auto& [c, mark] : display_order(marks)) {
      out << c.x << ' ' << c.y << ' ' << state_text(mark) << '\n';
    }
    return out.str();
  }

  out << "# legend: *=initial digit=infected@step%10 letter=vaccinated@step%26"
         " ?=frontier .=susceptible\n";
  const Box b = bounding_box(marks, 1);
  for (long long y = b.ymax; y >= b.ymin; y--) {
    std::string row;
    for (long long x = b.xmin; x <= b.xmax; x++) {
      const Coord c{x, y};
      auto it = marks.find(c);
      char ch;
      if (it == marks.end()) {
        ch = is_vertex(t, c) ? '.' : ' ';
      } else {
        switch (it->second.state) {
          case CellState::initial:
            ch = '*';
            break;
          case CellState::infected:
            ch = static_cast<char>('0' + it->second.step % 10);
            break;
          case CellState::vaccinated:
            ch = static_cast<char>('a' + it->second.step % 26);
            break;
          default:
            ch = '?';
            break;
        }
      }
      row.push_back(ch);
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  }
  return out.str();
}

std::string render_svg(const ProtocolConfig& config, const BranchOutcome& branch) {
  const Topology t = config.topology;
  const auto marks = collect_marks(branch);
  const Box b = bounding_box(marks, 1);
  constexpr long long kScale = 28;
  const long long width = (b.xmax - b.xmin + 2) * kScale;
  const long long height = (b.ymax - b.ymin + 2) * kScale;
  const bool boxy = t == Topology::square || t == Topology::strong;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << ' ' << height << "\">\n";
  out << "<!-- " << header_line(config, branch).substr(2) << " -->\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";

  // Susceptible lattice dots give the board context without clutter.
  for (long long y = b.ymax; y >= b.ymin; y--) {
    for (long long x = b.xmin; x <= b.xmax; x++) {
      const Coord c{x, y};
      if (!is_vertex(t, c) || marks.count(c)) continue;
      const long long cx = (x - b.xmin + 1) * kScale;
      const long long cy = (b.ymax - y + 1) * kScale;
      out << "<circle cx=\"" << cx << "\" cy=\"" << cy
          << "\" r=\"3\" fill=\"#dddddd\"/>\n";
    }
  }

  for (const auto& [c, mark] : display_order(marks)) {
    const long long cx = (c.x - b.xmin + 1) * kScale;
    const long long cy = (b.ymax - c.y + 1) * kScale;
    std::string fill;
    std::string label;
    switch (mark.state) {
      case CellState::initial:
        fill = "#7a1f1f";
        label = "*";
        break;
      case CellState::infected:
        fill = "#d96a4a";
        label = std::to_string(mark.step);
        break;
      case CellState::vaccinated:
        fill = "#4a7ad9";
        label = std::to_string(mark.step);
        break;
      case CellState::frontier:
        fill = "none";
        break;
    }
    std::string shape;
    if (boxy) {
      std::ostringstream s;
      s << "<rect x=\"" << cx - 12 << "\" y=\"" << cy - 12
        << "\" width=\"24\" height=\"24\" rx=\"3\"";
      shape = s.str();
    } else {
      std::ostringstream s;
      s << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"12\"";
      shape = s.str();
    }
    out << shape;
    if (mark.state == CellState::frontier) {
      out << " fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"3,2\"/>\n";
    } else {
      out << " fill=\"" << fill << "\"/>\n";
      out << "<text x=\"" << cx << "\" y=\"" << cy + 4
          << "\" text-anchor=\"middle\" font-family=\"monospace\""
             " font-size=\"10\" fill=\"#ffffff\">"
          << label << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string report_summary(const ProtocolConfig& config, const RunResult& run) {
  std::ostringstream out;
  out << "topology=" << topology_name(config.topology)
      << " budget=" << config.budget
      << " tie=" << (config.tie == TiePolicy::random ? "random" : "branch-all")
      << " branches=" << run.branches.size()
      << " aborted=" << (run.aborted ? "yes" : "no") << '\n';
  if (run.aborted) {
    out << "abort: " << run.abort_reason << '\n';
  }
  for (std::size_t i = 0; i < run.branches.size(); i++) {
    const BranchOutcome& br = run.branches[i];
    out << "branch " << i << ": contained=" << (br.contained ? "yes" : "no")
        << " steps=" << br.steps << " infected=" << br.infected << ' '
        << histogram_text(br.trace) << '\n';
  }
  if (!run.branches.empty()) {
    auto key = [](const BranchOutcome& br) {
      return std::pair<long long, int>(br.infected, br.steps);
    };
    const BranchOutcome* lo = &run.branches[0];
    const BranchOutcome* hi = &run.branches[0];
    for (const BranchOutcome& br : run.branches) {
      if (key(br) < key(*lo)) lo = &br;
      if (key(br) > key(*hi)) hi = &br;
    }
    out << "min: steps=" << lo->steps << " infected=" << lo->infected << '\n';
    out << "max: steps=" << hi->steps << " infected=" << hi->infected << '\n';
  }
  return out.str();
}

std::string trace_jsonl(const RunResult& run) {
  std::ostringstream out;
  for (std::size_t i = 0; i < run.branches.size(); i++) {
    for (const StepRecord& r : run.branches[i].trace) {
      ordered_json j;
      j["branch"] = i;
      j["step"] = r.step;
      j["eligible"] = r.eligible;
      j["subsets"] = r.subsets;
      j["candidates"] = r.candidates;
      ordered_json survivors;
      for (int s = 0; s < 6; s++) {
        survivors["cp" + std::to_string(s)] = r.survivors[s];
      }
      j["survivors"] = survivors;
      j["decided"] = r.decided >= 0 ? "cp" + std::to_string(r.decided)
                                    : std::string("none");
      j["tie"] = r.tie;
      ordered_json chosen = ordered_json::array();
      for (Coord c : r.chosen) {
        chosen.push_back({c.x, c.y});
      }
      j["chosen"] = chosen;
      j["iv1"] = r.iv1;
      j["iv2"] = r.iv2;
      out << j.dump() << '\n';
    }
  }
  return out.str();
}

std::string census_jsonl(const CensusResult& census) {
  std::ostringstream out;
  for (const GapTreeReport& g : census.gaps) {
    ordered_json j;
    j["n"] = census.n;
    j["tree"] = g.tree_text;
    j["m"] = g.m;
    j["m_star"] = g.m_star.get_str();
    j["gap"] = g.gap.get_str();
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace firebreak
