#pragma once

// Infinite lattice topologies on integer coordinates, with BFS metrics and
// the affine symmetry groups used to identify equivalent placements.
//
// Conventions (degree in parentheses):
//   hexagonal (3):  (x,y) ~ (x+-1,y), plus (x,y+1) when x+y is even,
//                   (x,y-1) when x+y is odd (brick-wall embedding).
//   square (4):     (x,y) ~ (x+-1,y), (x,y+-1).
//   triangular (6): square plus (x+1,y+1) and (x-1,y-1).
//   strong (8):     square plus all four diagonals.
//   pentagonal (3/4): vertices are every (x,y) with y odd, and (x,y) with
//                   y even and x == y/2 (mod 2). Even rows have degree 4:
//                   (x+-2,y), (x,y+-1). Odd rows have degree 3: (x+-1,y),
//                   plus (x,y+1) when x == (y+1)/2 (mod 2), else (x,y-1).
//
// Every topology except pentagonal has all of Z^2 as vertices. neighbors()
// of a non-vertex coordinate is empty.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace firebreak {

struct Coord {
  long long x = 0;
  long long y = 0;
  auto operator<=>(const Coord&) const = default;
};

using CoordSet = std::set<Coord>;

enum class Topology { hexagonal, square, triangular, strong, pentagonal };

extern const char* const kTopologyNames[5];
const char* topology_name(Topology t);
std::optional<Topology> parse_topology(const std::string& name);

bool is_vertex(Topology t, Coord c);
std::vector<Coord> neighbors(Topology t, Coord c);  // sorted; {} off lattice
int degree(Topology t, Coord c);

// Exact BFS distance through any vertices, or -1 when it exceeds cap.
int bfs_distance(Topology t, Coord from, Coord to, int cap);

// Min over targets of bfs_distance; 0 for an empty target set; -1 when every
// target is farther than cap.
int distance_to_set(Topology t, Coord from, const CoordSet& targets, int cap);

// g(x,y) = (a x + b y + tx, c x + d y + ty).
struct AffineMap {
  long long a = 1, b = 0, c = 0, d = 1;
  long long tx = 0, ty = 0;
  Coord apply(Coord p) const {
    return Coord{a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
  }
  bool operator==(const AffineMap&) const = default;
};

// Linear parts of the symmetry group (translations zero). Square/strong get
// the 8 dihedral matrices, triangular the 12-element point group of its
// rhombic embedding, hexagonal and pentagonal the 4 sign maps.
std::vector<AffineMap> point_symmetries(Topology t);

// Whether the full map (matrix plus translation) preserves the lattice and
// its adjacency. Square/strong/triangular accept every translation;
// hexagonal requires (-1)^(tx+ty) == d (column parity flips with vertical
// orientation); pentagonal requires ty even and tx == ty/2 (mod 2).
bool valid_symmetry(Topology t, const AffineMap& g);

// All symmetries fixing both sets (as sets). Contains at least the identity.
std::vector<AffineMap> stabilizer(Topology t, const CoordSet& aiv,
                                  const CoordSet& ppv);

// Lexicographically least image of cells under the given maps; the orbit
// canonical form used to deduplicate tied placements.
std::vector<Coord> orbit_canonical(const std::vector<AffineMap>& maps,
                                   std::vector<Coord> cells);

}  // namespace firebreak
