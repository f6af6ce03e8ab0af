#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "firebreak/grid.hpp"

using namespace firebreak;

namespace {

const Topology kAll[] = {Topology::hexagonal, Topology::square,
                         Topology::triangular, Topology::strong,
                         Topology::pentagonal};

std::vector<Coord> patch_vertices(Topology t, long long radius) {
  std::vector<Coord> out;
  for (long long x = -radius; x <= radius; ++x)
    for (long long y = -radius; y <= radius; ++y)
      if (is_vertex(t, {x, y})) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("topology names round trip") {
  CHECK(std::string(kTopologyNames[0]) == "hexagonal");
  CHECK(std::string(kTopologyNames[4]) == "pentagonal");
  for (Topology t : kAll) {
    auto parsed = parse_topology(topology_name(t));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == t);
  }
  CHECK(!parse_topology("octagonal").has_value());
  CHECK(!parse_topology("").has_value());
}

TEST_CASE("degrees are constant (or two-valued on the pentagonal board)") {
  for (Coord c : patch_vertices(Topology::hexagonal, 6))
    CHECK(degree(Topology::hexagonal, c) == 3);
  for (Coord c : patch_vertices(Topology::square, 6))
    CHECK(degree(Topology::square, c) == 4);
  for (Coord c : patch_vertices(Topology::triangular, 6))
    CHECK(degree(Topology::triangular, c) == 6);
  for (Coord c : patch_vertices(Topology::strong, 6))
    CHECK(degree(Topology::strong, c) == 8);

  bool saw3 = false, saw4 = false;
  for (Coord c : patch_vertices(Topology::pentagonal, 8)) {
    int d = degree(Topology::pentagonal, c);
    CHECK((d == 3 || d == 4));
    (d == 3 ? saw3 : saw4) = true;
    // Odd rows have degree 3, even rows degree 4.
    CHECK(d == ((c.y % 2 + 2) % 2 == 1 ? 3 : 4));
  }
  CHECK(saw3);
  CHECK(saw4);
}

TEST_CASE("adjacency lists are sorted, on-lattice, and symmetric") {
  for (Topology t : kAll)
    for (Coord a : patch_vertices(t, 5)) {
      std::vector<Coord> nb = neighbors(t, a);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Coord b : nb) {
        CHECK(is_vertex(t, b));
        std::vector<Coord> back = neighbors(t, b);
        CHECK(std::find(back.begin(), back.end(), a) != back.end());
      }
    }
}

TEST_CASE("off-lattice pentagonal coordinates have no neighbors") {
  CHECK(!is_vertex(Topology::pentagonal, {1, 0}));
  CHECK(neighbors(Topology::pentagonal, {1, 0}).empty());
  CHECK(degree(Topology::pentagonal, {1, 0}) == 0);
  CHECK(is_vertex(Topology::pentagonal, {0, 0}));
  CHECK(is_vertex(Topology::pentagonal, {1, 2}));
  CHECK(is_vertex(Topology::pentagonal, {5, 3}));  // every odd row is full
}

TEST_CASE("frozen neighbor sets") {
  CHECK(neighbors(Topology::hexagonal, {0, 0}) ==
        std::vector<Coord>{{-1, 0}, {0, 1}, {1, 0}});
  CHECK(neighbors(Topology::hexagonal, {1, 0}) ==
        std::vector<Coord>{{0, 0}, {1, -1}, {2, 0}});
  CHECK(neighbors(Topology::square, {0, 0}) ==
        std::vector<Coord>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
  CHECK(neighbors(Topology::triangular, {0, 0}) ==
        std::vector<Coord>{
            {-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(neighbors(Topology::strong, {0, 0}) ==
        std::vector<Coord>{{-1, -1},
                           {-1, 0},
                           {-1, 1},
                           {0, -1},
                           {0, 1},
                           {1, -1},
                           {1, 0},
                           {1, 1}});
  CHECK(neighbors(Topology::pentagonal, {0, 0}) ==
        std::vector<Coord>{{-2, 0}, {0, -1}, {0, 1}, {2, 0}});
  CHECK(neighbors(Topology::pentagonal, {0, 1}) ==
        std::vector<Coord>{{-1, 1}, {0, 0}, {1, 1}});
}

TEST_CASE("triangular diagonals run one way only") {
  std::vector<Coord> nb = neighbors(Topology::triangular, {0, 0});
  CHECK(std::find(nb.begin(), nb.end(), Coord{1, 1}) != nb.end());
  CHECK(std::find(nb.begin(), nb.end(), Coord{-1, -1}) != nb.end());
  CHECK(std::find(nb.begin(), nb.end(), Coord{1, -1}) == nb.end());
  CHECK(std::find(nb.begin(), nb.end(), Coord{-1, 1}) == nb.end());
}

TEST_CASE("bfs distances") {
  CHECK(bfs_distance(Topology::square, {0, 0}, {2, 1}, 10) == 3);
  CHECK(bfs_distance(Topology::strong, {0, 0}, {2, 2}, 10) == 2);
  CHECK(bfs_distance(Topology::triangular, {0, 0}, {1, 1}, 10) == 1);
  CHECK(bfs_distance(Topology::triangular, {0, 0}, {1, -1}, 10) == 2);
  CHECK(bfs_distance(Topology::hexagonal, {0, 1}, {1, 2}, 10) == 2);
  CHECK(bfs_distance(Topology::pentagonal, {0, 0}, {2, 0}, 10) == 1);
  CHECK(bfs_distance(Topology::square, {0, 0}, {0, 0}, 10) == 0);
  // Cap cuts the search off.
  CHECK(bfs_distance(Topology::square, {0, 0}, {5, 0}, 4) == -1);
  CHECK(bfs_distance(Topology::square, {0, 0}, {5, 0}, 5) == 5);
}

TEST_CASE("distance to a set") {
  CoordSet targets{{3, 0}, {0, 2}};
  CHECK(distance_to_set(Topology::square, {0, 0}, targets, 10) == 2);
  CHECK(distance_to_set(Topology::square, {3, 0}, targets, 10) == 0);
  CHECK(distance_to_set(Topology::square, {0, 0}, {}, 10) == 0);
  CHECK(distance_to_set(Topology::square, {0, 0}, {{9, 9}}, 3) == -1);
}

TEST_CASE("point symmetry groups have the right size and preserve adjacency") {
  auto group_size = [](Topology t) { return point_symmetries(t).size(); };
  CHECK(group_size(Topology::square) == 8);
  CHECK(group_size(Topology::strong) == 8);
  CHECK(group_size(Topology::triangular) == 12);
  CHECK(group_size(Topology::hexagonal) == 4);
  CHECK(group_size(Topology::pentagonal) == 4);

  // Each returned matrix is the linear part of some symmetry, but may need
  // a translation to line up row patterns (hexagonal y-flips shift by one).
  for (Topology t : kAll)
    for (const AffineMap& g : point_symmetries(t)) {
      AffineMap full = g;
      bool found = false;
      for (long long tx = -1; tx <= 1 && !found; ++tx)
        for (long long ty = -1; ty <= 1 && !found; ++ty) {
          full.tx = tx;
          full.ty = ty;
          found = valid_symmetry(t, full);
        }
      REQUIRE(found);
      for (Coord a : patch_vertices(t, 3)) {
        CHECK(is_vertex(t, full.apply(a)));
        for (Coord b : neighbors(t, a)) {
          std::vector<Coord> image = neighbors(t, full.apply(a));
          CHECK(std::find(image.begin(), image.end(), full.apply(b)) !=
                image.end());
        }
      }
    }

  // Zero translation completes every matrix except the hexagonal y-flips.
  for (Topology t : {Topology::square, Topology::strong, Topology::triangular,
                     Topology::pentagonal})
    for (const AffineMap& g : point_symmetries(t)) CHECK(valid_symmetry(t, g));
  int hex_valid_at_origin = 0;
  for (const AffineMap& g : point_symmetries(Topology::hexagonal))
    if (valid_symmetry(Topology::hexagonal, g)) ++hex_valid_at_origin;
  CHECK(hex_valid_at_origin == 2);
}

TEST_CASE("translation validity varies by topology") {
  AffineMap shift;  // identity matrix, translation filled per case
  shift.tx = 3;
  shift.ty = -2;
  CHECK(valid_symmetry(Topology::square, shift));
  CHECK(valid_symmetry(Topology::strong, shift));
  CHECK(valid_symmetry(Topology::triangular, shift));

  // Hexagonal: odd total translation flips the brick patterns.
  AffineMap hex_odd;
  hex_odd.tx = 1;
  CHECK(!valid_symmetry(Topology::hexagonal, hex_odd));
  AffineMap hex_even;
  hex_even.tx = 1;
  hex_even.ty = 1;
  CHECK(valid_symmetry(Topology::hexagonal, hex_even));

  // Pentagonal: translations must map the sparse even rows onto themselves.
  AffineMap pent;
  pent.tx = 1;
  CHECK(!valid_symmetry(Topology::pentagonal, pent));
  pent.tx = 2;
  CHECK(valid_symmetry(Topology::pentagonal, pent));
  pent.tx = 1;
  pent.ty = 2;
  CHECK(valid_symmetry(Topology::pentagonal, pent));
  pent.tx = 0;
  pent.ty = 1;
  CHECK(!valid_symmetry(Topology::pentagonal, pent));
}

TEST_CASE("stabilizer of board configurations") {
  CHECK(stabilizer(Topology::square, {{0, 0}}, {}).size() == 8);
  CHECK(stabilizer(Topology::square, {{0, 0}, {1, 0}}, {}).size() == 4);
  CHECK(stabilizer(Topology::square, {{0, 0}, {1, 0}, {2, 1}}, {}).size() == 1);

  // The stabilizer must fix AIV and PPV separately, not just their union.
  auto joint = stabilizer(Topology::square, {{0, 0}}, {{1, 0}, {-1, 0}});
  CHECK(joint.size() == 4);
  for (const AffineMap& g : joint) {
    CHECK(g.apply({0, 0}) == Coord{0, 0});
    Coord img = g.apply({1, 0});
    CHECK((img == Coord{1, 0} || img == Coord{-1, 0}));
  }
}

TEST_CASE("orbit canonical form is orbit-invariant and lex-least") {
  auto maps = stabilizer(Topology::square, {{0, 0}}, {});
  CHECK(orbit_canonical(maps, {Coord{1, 2}}) ==
        std::vector<Coord>{{-2, -1}});
  CHECK(orbit_canonical(maps, {Coord{1, 2}, Coord{2, 1}}) ==
        std::vector<Coord>{{-2, -1}, {-1, -2}});
  for (const AffineMap& g : maps) {
    std::vector<Coord> moved{g.apply({1, 2}), g.apply({2, 1})};
    CHECK(orbit_canonical(maps, moved) ==
          orbit_canonical(maps, {Coord{1, 2}, Coord{2, 1}}));
  }
}
