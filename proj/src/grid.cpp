#include "firebreak/grid.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace firebreak {

const char* const kTopologyNames[5] = {"hexagonal", "square", "triangular",
                                       "strong", "pentagonal"};

const char* topology_name(Topology t) {
  return kTopologyNames[static_cast<int>(t)];
}

std::optional<Topology> parse_topology(const std::string& name) {
  for (int i = 0; i < 5; ++i)
    if (name == kTopologyNames[i]) return static_cast<Topology>(i);
  return std::nullopt;
}

namespace {

long long parity(long long v) { return ((v % 2) + 2) % 2; }

}  // namespace

bool is_vertex(Topology t, Coord c) {
  if (t != Topology::pentagonal) return true;
  if (parity(c.y) == 1) return true;
  return parity(c.x - c.y / 2) == 0;
}

std::vector<Coord> neighbors(Topology t, Coord c) {
  const auto [x, y] = c;
  std::vector<Coord> out;
  switch (t) {
    case Topology::hexagonal:
      out = {{x - 1, y}, {x + 1, y}};
      out.push_back(parity(x + y) == 0 ? Coord{x, y + 1} : Coord{x, y - 1});
      break;
    case Topology::square:
      out = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
      break;
    case Topology::triangular:
      out = {{x - 1, y}, {x + 1, y}, {x, y - 1},
             {x, y + 1}, {x + 1, y + 1}, {x - 1, y - 1}};
      break;
    case Topology::strong:
      out = {{x - 1, y - 1}, {x - 1, y}, {x - 1, y + 1}, {x, y - 1},
             {x, y + 1},     {x + 1, y - 1}, {x + 1, y}, {x + 1, y + 1}};
      break;
    case Topology::pentagonal:
      if (!is_vertex(t, c)) return {};
      if (parity(y) == 0) {
        out = {{x - 2, y}, {x + 2, y}, {x, y - 1}, {x, y + 1}};
      } else {
        out = {{x - 1, y}, {x + 1, y}};
        out.push_back(parity(x - (y + 1) / 2) == 0 ? Coord{x, y + 1}
                                                   : Coord{x, y - 1});
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int degree(Topology t, Coord c) {
  return static_cast<int>(neighbors(t, c).size());
}

int bfs_distance(Topology t, Coord from, Coord to, int cap) {
  CoordSet targets{to};
  return distance_to_set(t, from, targets, cap);
}

int distance_to_set(Topology t, Coord from, const CoordSet& targets, int cap) {
  if (targets.empty()) return 0;
  if (!is_vertex(t, from)) return -1;
  if (targets.count(from)) return 0;
  CoordSet visited{from};
  std::vector<Coord> frontier{from};
  for (int d = 1; d <= cap; ++d) {
    std::vector<Coord> next;
    for (Coord c : frontier)
      for (Coord nb : neighbors(t, c)) {
        if (!visited.insert(nb).second) continue;
        if (targets.count(nb)) return d;
        next.push_back(nb);
      }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return -1;
}

namespace {

AffineMap compose(const AffineMap& g, const AffineMap& h) {
  // (g o h): matrix product, translations ignored (point parts only).
  AffineMap r;
  r.a = g.a * h.a + g.b * h.c;
  r.b = g.a * h.b + g.b * h.d;
  r.c = g.c * h.a + g.d * h.c;
  r.d = g.c * h.b + g.d * h.d;
  return r;
}

std::vector<AffineMap> close_group(std::vector<AffineMap> gens) {
  auto key = [](const AffineMap& m) {
    return std::array<long long, 4>{m.a, m.b, m.c, m.d};
  };
  std::set<std::array<long long, 4>> seen;
  std::vector<AffineMap> out;
  for (const auto& g : gens)
    if (seen.insert(key(g)).second) out.push_back(g);
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j) {
      AffineMap m = compose(out[i], out[j]);
      if (seen.insert(key(m)).second) out.push_back(m);
    }
  return out;
}

}  // namespace

std::vector<AffineMap> point_symmetries(Topology t) {
  switch (t) {
    case Topology::square:
    case Topology::strong:
      return close_group({AffineMap{1, 0, 0, 1, 0, 0},
                          AffineMap{0, -1, 1, 0, 0, 0},    // quarter turn
                          AffineMap{0, 1, 1, 0, 0, 0}});   // diagonal flip
    case Topology::triangular:
      return close_group({AffineMap{1, 0, 0, 1, 0, 0},
                          AffineMap{1, -1, 1, 0, 0, 0},    // sixth turn
                          AffineMap{0, 1, 1, 0, 0, 0}});   // axis swap
    case Topology::hexagonal:
    case Topology::pentagonal:
      return {AffineMap{1, 0, 0, 1, 0, 0}, AffineMap{-1, 0, 0, 1, 0, 0},
              AffineMap{1, 0, 0, -1, 0, 0}, AffineMap{-1, 0, 0, -1, 0, 0}};
  }
  return {};
}

bool valid_symmetry(Topology t, const AffineMap& g) {
  bool matrix_ok = false;
  for (const auto& m : point_symmetries(t))
    if (m.a == g.a && m.b == g.b && m.c == g.c && m.d == g.d) {
      matrix_ok = true;
      break;
    }
  if (!matrix_ok) return false;
  switch (t) {
    case Topology::square:
    case Topology::strong:
    case Topology::triangular:
      return true;
    case Topology::hexagonal:
      // Vertical edge orientation alternates with column parity; a flip of
      // the y axis must be compensated by an odd translation parity.
      return (parity(g.tx + g.ty) == 0) == (g.d == 1);
    case Topology::pentagonal:
      return parity(g.ty) == 0 && parity(g.tx - g.ty / 2) == 0;
  }
  return false;
}

std::vector<AffineMap> stabilizer(Topology t, const CoordSet& aiv,
                                  const CoordSet& ppv) {
  std::vector<AffineMap> out{AffineMap{}};
  if (aiv.empty()) return out;
  const Coord anchor = *aiv.begin();

  std::set<std::array<long long, 6>> seen{{1, 0, 0, 1, 0, 0}};
  auto maps_set_onto_itself = [](const AffineMap& g, const CoordSet& s) {
    for (Coord c : s)
      if (!s.count(g.apply(c))) return false;
    return true;  // injective on a finite set onto itself means bijective
  };

  for (const auto& m : point_symmetries(t)) {
    const Coord moved{m.a * anchor.x + m.b * anchor.y,
                      m.c * anchor.x + m.d * anchor.y};
    for (Coord target : aiv) {
      AffineMap g = m;
      g.tx = target.x - moved.x;
      g.ty = target.y - moved.y;
      if (!valid_symmetry(t, g)) continue;
      if (!maps_set_onto_itself(g, aiv) || !maps_set_onto_itself(g, ppv))
        continue;
      if (seen.insert({g.a, g.b, g.c, g.d, g.tx, g.ty}).second)
        out.push_back(g);
    }
  }
  return out;
}

std::vector<Coord> orbit_canonical(const std::vector<AffineMap>& maps,
                                   std::vector<Coord> cells) {
  std::sort(cells.begin(), cells.end());
  std::vector<Coord> best = cells;
  std::vector<Coord> image(cells.size());
  for (const auto& g : maps) {
    for (size_t i = 0; i < cells.size(); ++i) image[i] = g.apply(cells[i]);
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  return best;
}

}  // namespace firebreak
