#include <doctest.h>

#include "mapsym/analysis.hpp"
#include "mapsym/error.hpp"
#include "mapsym/families.hpp"
#include "mapsym/patch.hpp"
#include "mapsym/polyhedral.hpp"
#include "support/corpus.hpp"

using namespace mapsym;

namespace {

// n x n grid on the torus with explicit dart slots, so n = 1, 2 give
// loops and parallel edges instead of an error.
RotationSystem raw_grid(int n) {
  RotationSystem r;
  r.rotation.resize(n * n);
  auto id = [n](int i, int j) { return ((j % n + n) % n) * n + ((i % n + n) % n); };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      r.rotation[id(i, j)] = {{id(i + 1, j), 2}, {id(i, j - 1), 3}, {id(i - 1, j), 0}, {id(i, j + 1), 1}};
    }
  }
  return r;
}

std::vector<int> sizes(const FlagSystem& m, bool faces) {
  const MapSummary s = summary(m);
  return faces ? s.face_sizes : s.vertex_degrees;
}

}  // namespace

TEST_SUITE("core-map") {
  TEST_CASE("tetrahedron from a rotation system") {
    const FlagSystem t = platonic("tetrahedron");
    CHECK(t.size() == 24);
    const MapSummary s = summary(t);
    CHECK(s.vertex_count == 4);
    CHECK(s.edge_count == 6);
    CHECK(s.face_count == 4);
    CHECK(s.genus == 0);
    CHECK(s.face_sizes == std::vector<int>{3, 3, 3, 3});
    CHECK(s.vertex_degrees == std::vector<int>{3, 3, 3, 3});
  }

  TEST_CASE("H_3 counts and face profile") {
    const MapSummary s = summary(h_family(3));
    CHECK(s.vertex_count == 12);
    CHECK(s.edge_count == 36);
    CHECK(s.face_count == 20);
    CHECK(s.genus == 3);
    std::vector<int> expected{6, 6};
    expected.insert(expected.end(), 6, 4);
    expected.insert(expected.end(), 12, 3);
    CHECK(s.face_sizes == expected);
  }

  TEST_CASE("H_2 counts follow from Euler") {
    const MapSummary s = summary(h_family(2));
    CHECK(s.vertex_count == 8);
    CHECK(s.edge_count == 24);
    CHECK(s.face_count == 14);
    CHECK(s.genus == 2);
    std::vector<int> expected(6, 4);
    expected.insert(expected.end(), 8, 3);
    CHECK(s.face_sizes == expected);
    CHECK(s.vertex_degrees == std::vector<int>(8, 6));
  }

  TEST_CASE("square torus counts") {
    const MapSummary s = summary(square_torus(5));
    CHECK(s.vertex_count == 25);
    CHECK(s.edge_count == 50);
    CHECK(s.face_count == 25);
    CHECK(s.genus == 1);
  }

  TEST_CASE("rotation system round trip") {
    for (const auto& [name, m] : corpus::maps()) {
      CAPTURE(name);
      const RotationSystem r = to_rotation_system(m);
      CHECK(r.vertex_count() == summary(m).vertex_count);
      CHECK(are_isomorphic(from_rotation_system(r), m));
      // to_rotation_system is canonical, so a second round is exact
      CHECK(from_rotation_system(to_rotation_system(from_rotation_system(r))) == from_rotation_system(r));
    }
  }

  TEST_CASE("dual of the cube is the octahedron's rotation system") {
    const RotationSystem r = to_rotation_system(dual(platonic("cube")));
    CHECK(r.vertex_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(r.degree(v) == 4);
    CHECK(are_isomorphic(from_rotation_system(r), platonic("octahedron")));
  }

  TEST_CASE("H_2 rotation system is 6-regular") {
    const RotationSystem r = to_rotation_system(h_family(2));
    CHECK(r.vertex_count() == 8);
    for (int v = 0; v < 8; ++v) CHECK(r.degree(v) == 6);
  }

  TEST_CASE("dual") {
    CHECK(are_isomorphic(dual(platonic("tetrahedron")), platonic("tetrahedron")));
    const FlagSystem h3 = h_family(3);
    CHECK(dual(dual(h3)) == h3);
    const MapSummary s = summary(dual(platonic("cube")));
    CHECK(s.vertex_count == 6);
    CHECK(s.edge_count == 12);
    CHECK(s.face_count == 8);
    CHECK(s.genus == 0);
  }

  TEST_CASE("truncated tetrahedron counts") {
    const OperationPatch t = corpus::patch("truncate");
    const MapSummary s = summary(apply(t, platonic("tetrahedron")).map);
    CHECK(s.vertex_count == 12);
    CHECK(s.edge_count == 18);
    CHECK(s.face_count == 8);
    CHECK(s.genus == 0);
  }

  TEST_CASE("polyhedrality") {
    CHECK(is_polyhedral(platonic("tetrahedron")).polyhedral);
    const PolyhedralReport two = is_polyhedral(from_rotation_system(raw_grid(2)));
    CHECK_FALSE(two.polyhedral);
    CHECK(two.failed == PolyhedralCondition::kSimpleGraph);
    const PolyhedralReport one = is_polyhedral(from_rotation_system(raw_grid(1)));
    CHECK(one.failed == PolyhedralCondition::kSimpleGraph);
    CHECK(is_polyhedral(square_torus(3)).polyhedral);
  }

  TEST_CASE("H_g is simple and 3-connected but two faces meet in two vertices") {
    for (int g = 2; g <= 4; ++g) {
      CAPTURE(g);
      const PolyhedralReport r = is_polyhedral(h_family(g));
      CHECK_FALSE(r.polyhedral);
      CHECK(r.failed == PolyhedralCondition::kFaceIntersection);
      CHECK(r.witness.find("0 edge(s)") != std::string::npos);
    }
  }

  TEST_CASE("a cut vertex is reported") {
    // two triangles sharing vertex 0, embedded in the plane
    const RotationSystem r = rotation_from_faces(5, {{0, 1, 2}, {0, 3, 4}, {0, 2, 1, 0, 4, 3}});
    const PolyhedralReport p = is_polyhedral(from_rotation_system(r));
    CHECK_FALSE(p.polyhedral);
  }

  TEST_CASE("flag count, Euler and the handshake on the corpus") {
    for (const auto& [name, m] : corpus::maps()) {
      CAPTURE(name);
      const MapSummary s = summary(m);
      CHECK(m.size() == 4 * s.edge_count);
      CHECK(s.vertex_count - s.edge_count + s.face_count == 2 - 2 * s.genus);
      int face_total = 0, degree_total = 0;
      for (int f : s.face_sizes) face_total += f;
      for (int d : s.vertex_degrees) degree_total += d;
      CHECK(face_total == 2 * s.edge_count);
      CHECK(degree_total == 2 * s.edge_count);
      CHECK(dual(dual(m)) == m);
    }
  }

  TEST_CASE("polyhedral plane maps have a face of size at most 5") {
    for (const auto& [name, m] : corpus::maps()) {
      if (summary(m).genus != 0 || !is_polyhedral(m).polyhedral) continue;
      CAPTURE(name);
      CHECK(sizes(m, true).back() <= 5);
      CHECK(sizes(dual(m), true).back() <= 5);
    }
  }

  TEST_CASE("polyhedrality is invariant under duality") {
    for (const auto& [name, m] : corpus::maps()) {
      CAPTURE(name);
      CHECK(is_polyhedral(m).polyhedral == is_polyhedral(dual(m)).polyhedral);
    }
  }

  TEST_CASE("construction errors") {
    RotationSystem disconnected;
    disconnected.rotation = {{{1, 0}}, {{0, 0}}, {{3, 0}}, {{2, 0}}};
    CHECK_THROWS_AS(from_rotation_system(disconnected), MapError);

    RotationSystem bad_slot;
    bad_slot.rotation = {{{1, 1}}, {{0, 0}}};
    CHECK_THROWS_AS(from_rotation_system(bad_slot), MapError);

    // one edge with a twisted face: sigma1 pairs flags across both classes
    CHECK_THROWS_AS(FlagSystem({2, 3, 0, 1}, {3, 2, 1, 0}, {1, 0, 3, 2}), MapError);
    CHECK_THROWS_AS(FlagSystem({1, 0, 3, 2}, {1, 0, 3, 2}, {1, 0, 3, 2}), MapError);
  }
}
