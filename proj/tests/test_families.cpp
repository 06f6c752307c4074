#include <doctest.h>

#include <algorithm>
#include <set>

#include "mapsym/analysis.hpp"
#include "mapsym/error.hpp"
#include "mapsym/families.hpp"
#include "mapsym/goldberg.hpp"
#include "mapsym/polyhedral.hpp"

using namespace mapsym;

namespace {

int face_of_size(const FlagSystem& m, int size) {
  const CellIndex c = cells(m);
  std::vector<int> count(c.face_count, 0);
  for (int x = 0; x < m.size(); ++x) ++count[c.face_of[x]];
  for (int f = 0; f < c.face_count; ++f) {
    if (count[f] == 2 * size) return f;
  }
  return -1;
}

bool degrees_and_faces_in(const FlagSystem& m, std::set<int> allowed) {
  const MapSummary s = summary(m);
  for (int d : s.vertex_degrees) {
    if (!allowed.count(d)) return false;
  }
  for (int f : s.face_sizes) {
    if (!allowed.count(f)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("platonic solids") {
    const MapSummary d = summary(platonic("dodecahedron"));
    CHECK(d.vertex_count == 20);
    CHECK(d.edge_count == 30);
    CHECK(d.face_count == 12);
    for (const auto& name : platonic_names()) {
      CAPTURE(name);
      CHECK(is_polyhedral(platonic(name)).polyhedral);
      CHECK(summary(platonic(name)).genus == 0);
    }
    CHECK(are_isomorphic(dual(platonic("icosahedron")), platonic("dodecahedron")));
    CHECK_THROWS_AS(platonic("rhombicuboctahedron"), MapError);
  }

  TEST_CASE("square torus") {
    const FlagSystem five = square_torus(5);
    CHECK(is_self_dual(five));
    CHECK(is_polyhedral(square_torus(3)).polyhedral);
    CHECK(automorphisms(square_torus(4)).group_order == 128);
    for (int n = 3; n <= 6; ++n) CHECK(is_self_dual(square_torus(n)));
    CHECK_THROWS_AS(square_torus(2), MapError);
    CHECK_THROWS_AS(square_torus(1), MapError);
  }

  TEST_CASE("smallest hexagonal torus") {
    CHECK_THROWS_AS(hex_torus(2, 2), MapError);
    CHECK_THROWS_AS(hex_torus(2, 3), MapError);
    const FlagSystem h = hex_torus(3, 3);
    CHECK(is_polyhedral(h).polyhedral);
    const MapSummary s = summary(h);
    CHECK(s.face_count == 9);
    CHECK(s.face_sizes == std::vector<int>(9, 6));
    CHECK(s.vertex_degrees == std::vector<int>(18, 3));
    CHECK(is_polyhedral(dual(h)).polyhedral);
  }

  TEST_CASE("hexagonal tori are face-transitive") {
    for (const auto& [r, s] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}, std::pair{3, 5}}) {
      CAPTURE(r);
      CAPTURE(s);
      const FlagSystem h = hex_torus(r, s);
      const CellIndex c = cells(h);
      const OrbitPartition o = chamber_orbits(h);
      std::set<int> orbits_meeting_face0;
      std::set<int> orbits_at_face;
      for (int x = 0; x < h.size(); ++x) orbits_at_face.insert(o.orbit_of[x]);
      for (int x = 0; x < h.size(); ++x) {
        if (c.face_of[x] == 0) orbits_meeting_face0.insert(o.orbit_of[x]);
      }
      CHECK(orbits_meeting_face0 == orbits_at_face);
    }
  }

  TEST_CASE("GC(2,0) on the hexagonal torus") {
    const MapSummary s = summary(apply(gc_patch({2, 0}), hex_torus(3, 3)).map);
    CHECK(s.genus == 1);
    CHECK(s.face_sizes == std::vector<int>(s.face_count, 6));
  }

  TEST_CASE("H_g counts and degrees") {
    for (int g = 2; g <= 5; ++g) {
      CAPTURE(g);
      const MapSummary s = summary(h_family(g));
      CHECK(s.vertex_count == 4 * g);
      CHECK(s.edge_count == 12 * g);
      CHECK(s.face_count == 6 * g + 2);
      CHECK(s.genus == g);
      CHECK(s.vertex_degrees == std::vector<int>(4 * g, 6));
      std::vector<int> expected{2 * g, 2 * g};
      expected.insert(expected.end(), 2 * g, 4);
      expected.insert(expected.end(), 4 * g, 3);
      CHECK(s.face_sizes == expected);
    }
    CHECK_THROWS_AS(h_family(1), MapError);
  }

  TEST_CASE("each triangle of H_g meets one big face and two different quadrangles") {
    for (int g = 3; g <= 4; ++g) {
      CAPTURE(g);
      const FlagSystem h = h_family(g);
      const CellIndex c = cells(h);
      std::vector<int> size(c.face_count, 0);
      for (int x = 0; x < h.size(); ++x) ++size[c.face_of[x]];
      for (int f = 0; f < c.face_count; ++f) {
        if (size[f] != 6) continue;
        std::multiset<int> across;
        std::set<int> quads;
        for (int x = 0; x < h.size(); ++x) {
          if (c.face_of[x] != f || h.orientation(x) != 0) continue;
          const int other = c.face_of[h.sigma(2, x)];
          across.insert(size[other] / 2);
          if (size[other] == 8) quads.insert(other);
        }
        CHECK(across == std::multiset<int>{4, 4, 2 * g});
        CHECK(quads.size() == 2);
      }
    }
  }

  TEST_CASE("gluing two tori along a hexagon") {
    const FlagSystem g = self_dual_piece_g();
    const int hexagon = face_of_size(g, 6);
    REQUIRE(hexagon >= 0);
    const FlagSystem glued = glue_along_face({g, hexagon, g, hexagon, 0, false});
    const MapSummary a = summary(g), b = summary(glued);
    CHECK(b.vertex_count == 2 * a.vertex_count - 6);
    CHECK(b.edge_count == 2 * a.edge_count - 6);
    CHECK(b.face_count == 2 * a.face_count - 2);
    CHECK(b.genus == 2);
  }

  TEST_CASE("gluing rejects faces of different size") {
    const FlagSystem g = self_dual_piece_g();
    const FlagSystem c = platonic("cube");
    CHECK_THROWS_AS(glue_along_face({g, face_of_size(g, 6), c, 0, 0, false}), MapError);
  }

  TEST_CASE("pieces have the hexagon, square and pentagon strips") {
    std::vector<int> holes;
    const FlagSystem g = self_dual_piece_g(&holes);
    CHECK(holes.size() == 1);
    MapSummary s = summary(g);
    CHECK(s.genus == 1);
    CHECK(std::count(s.face_sizes.begin(), s.face_sizes.end(), 6) == 1);
    CHECK(std::count(s.face_sizes.begin(), s.face_sizes.end(), 5) == 2);
    const FlagSystem h = self_dual_piece_h(&holes);
    CHECK(holes.size() == 2);
    s = summary(h);
    CHECK(s.genus == 1);
    CHECK(std::count(s.face_sizes.begin(), s.face_sizes.end(), 6) == 2);
    CHECK(std::count(s.face_sizes.begin(), s.face_sizes.end(), 5) == 4);
  }

  TEST_CASE("self-dual maps of small genus") {
    for (int genus = 0; genus <= 4; ++genus) {
      CAPTURE(genus);
      const FlagSystem m = self_dual_map(genus);
      CHECK(summary(m).genus == genus);
      CHECK(is_polyhedral(m).polyhedral);
      CHECK(is_self_dual(m));
      if (genus >= 2) CHECK(degrees_and_faces_in(m, {4, 5}));
    }
  }

  TEST_CASE("a chain with k copies of H has genus k + 2") {
    for (int k = 0; k <= 4; ++k) {
      CAPTURE(k);
      CHECK(summary(self_dual_map(k + 2)).genus == k + 2);
    }
  }
}
