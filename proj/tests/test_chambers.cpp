#include <doctest.h>

#include "mapsym/analysis.hpp"
#include "mapsym/chambers.hpp"
#include "mapsym/families.hpp"
#include "mapsym/patch.hpp"
#include "support/corpus.hpp"

using namespace mapsym;

namespace {

void check_subdivision(const FlagSystem& m) {
  const SubdivisionMap b = subdivision_as_map(barycentric(m));
  const CellIndex c = cells(b.map);
  for (int x = 0; x < b.map.size(); ++x) {
    CHECK(b.point_colour[c.vertex_of[x]] != b.point_colour[c.vertex_of[b.map.sigma(0, x)]]);
  }
  std::vector<int> face_flags(c.face_count, 0);
  std::vector<std::array<int, 3>> seen(c.face_count, {0, 0, 0});
  for (int x = 0; x < b.map.size(); ++x) {
    ++face_flags[c.face_of[x]];
    ++seen[c.face_of[x]][b.point_colour[c.vertex_of[x]]];
  }
  for (int f = 0; f < c.face_count; ++f) {
    CHECK(face_flags[f] == 6);
    CHECK(seen[f] == std::array<int, 3>{2, 2, 2});
  }
  std::vector<int> degree(c.vertex_count, 0);
  for (int x = 0; x < b.map.size(); ++x) ++degree[c.vertex_of[x]];
  for (int v = 0; v < c.vertex_count; ++v) {
    if (b.point_colour[v] == 1) CHECK(degree[v] == 8);
  }
}

}  // namespace

TEST_SUITE("chambers") {
  TEST_CASE("chamber counts") {
    CHECK(barycentric(platonic("tetrahedron")).chamber_count() == 24);
    CHECK(barycentric(h_family(2)).chamber_count() == 96);
    CHECK(barycentric(square_torus(5)).chamber_count() == 200);
  }

  TEST_CASE("barycentric and map_from_chambers are inverse") {
    for (const auto& [name, m] : corpus::maps()) {
      CAPTURE(name);
      const ChamberComplex c = barycentric(m);
      CHECK(c.flags().colored());
      CHECK(map_from_chambers(c) == m);
      CHECK(barycentric(map_from_chambers(c)).flags() == c.flags());
    }
  }

  TEST_CASE("corner orbits match the cells") {
    const FlagSystem m = platonic("cube");
    const ChamberComplex c = barycentric(m);
    const MapSummary s = summary(m);
    CHECK(c.point_count(0) == s.vertex_count);
    CHECK(c.point_count(1) == s.edge_count);
    CHECK(c.point_count(2) == s.face_count);
  }

  TEST_CASE("glued ambo chambers form the octahedron") {
    const AppliedOperation a = apply(corpus::patch("ambo"), platonic("tetrahedron"));
    const FlagSystem m = map_from_chambers(ChamberComplex(a.map));
    CHECK(are_isomorphic(m, platonic("octahedron")));
  }

  TEST_CASE("subdivision of the tetrahedron") {
    const SubdivisionMap b = subdivision_as_map(barycentric(platonic("tetrahedron")));
    const MapSummary s = summary(b.map);
    CHECK(s.vertex_count == 14);
    CHECK(s.edge_count == 36);
    CHECK(s.face_count == 24);
    CHECK(s.genus == 0);
  }

  TEST_CASE("subdivision of the square torus") {
    const MapSummary s = summary(subdivision_as_map(barycentric(square_torus(5))).map);
    CHECK(s.vertex_count == 100);
    CHECK(s.face_count == 200);
    CHECK(s.edge_count == 300);
    CHECK(s.genus == 1);
  }

  TEST_CASE("subdivision of H_2") {
    const MapSummary s = summary(subdivision_as_map(barycentric(h_family(2))).map);
    CHECK(s.face_count == 96);
    CHECK(s.genus == 2);
    CHECK(s.face_sizes == std::vector<int>(96, 3));
  }

  TEST_CASE("subdivisions are properly 3-coloured with edge points of degree 4") {
    for (const auto& [name, m] : corpus::small_maps(600)) {
      CAPTURE(name);
      check_subdivision(m);
    }
  }
}
