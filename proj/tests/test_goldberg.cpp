#include <doctest.h>

#include "mapsym/analysis.hpp"
#include "mapsym/error.hpp"
#include "mapsym/families.hpp"
#include "mapsym/goldberg.hpp"
#include "support/corpus.hpp"

using namespace mapsym;

TEST_SUITE("goldberg") {
  TEST_CASE("point classification") {
    CHECK(classify_point(HexPoint::integer(0, 0)) == PointKind::kFaceCenter);
    CHECK(classify_point(HexPoint::integer(1, 0)) == PointKind::kVertex);
    CHECK(classify_point(HexPoint::integer(3, 0)) == PointKind::kFaceCenter);
    CHECK(classify_point(HexPoint::integer(1, 1)) == PointKind::kFaceCenter);
    CHECK(classify_point(HexPoint{1, 4}) == PointKind::kEdgeMidpoint);
    CHECK(classify_point(HexPoint{1, 2}) == PointKind::kNone);
    CHECK(point_colour(HexPoint::integer(2, 0)) == 0);
    CHECK(point_colour(HexPoint{1, 4}) == 1);
    CHECK_FALSE(point_colour(HexPoint{1, 2}).has_value());
  }

  TEST_CASE("v1 is a point of the subdivided tiling for every allowed parameter") {
    for (int l = 1; l <= 9; ++l) {
      for (const GCParams p : {GCParams{l, 0}, GCParams{l, l}}) {
        CAPTURE(p.l);
        CAPTURE(p.m);
        CHECK(point_colour(gc_corners(p)[1]).has_value());
      }
    }
  }

  TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(check_params({0, 0}), MapError);
    CHECK_THROWS_AS(check_params({2, 1}), MapError);
    CHECK_THROWS_AS(gc_patch({3, 1}), MapError);
    CHECK_NOTHROW(check_params({4, 0}));
    CHECK_NOTHROW(check_params({2, 2}));
  }

  TEST_CASE("inflation factor is l^2 + lm + m^2") {
    for (int l = 1; l <= 6; ++l) {
      for (const GCParams p : {GCParams{l, 0}, GCParams{l, l}}) {
        CAPTURE(p.l);
        CAPTURE(p.m);
        const OperationPatch patch = gc_patch(p);
        const int k = p.l * p.l + p.l * p.m + p.m * p.m;
        CHECK(inflation_factor(patch) == k);
        CHECK(patch.chamber_count() == k);
        CHECK(is_c3(patch));
      }
    }
  }

  TEST_CASE("GC(5,0) multiplies the edges of the tetrahedron by 25") {
    const FlagSystem t = platonic("tetrahedron");
    const AppliedOperation a = apply(gc_patch({5, 0}), t);
    CHECK(summary(a.map).edge_count == 25 * summary(t).edge_count);
  }

  TEST_CASE("colour of v0") {
    CHECK(gc_patch({1, 0}).colour(gc_patch({1, 0}).special(0)) == 0);
    for (const GCParams p : {GCParams{2, 0}, GCParams{4, 0}, GCParams{3, 0}, GCParams{6, 0}, GCParams{1, 1},
                             GCParams{2, 2}}) {
      const OperationPatch patch = gc_patch(p);
      const int expected = p.m == 0 && p.l % 3 != 0 ? 0 : 2;
      CAPTURE(p.l);
      CAPTURE(p.m);
      CHECK(patch.colour(patch.special(0)) == expected);
      CHECK(patch.colour(patch.special(2)) == 2);
    }
  }

  TEST_CASE("small parameters give known operations") {
    CHECK(patch_isomorphism(gc_patch({1, 0}), identity_patch()).has_value());
    CHECK(patch_isomorphism(gc_patch({1, 1}), corpus::patch("zip")).has_value());
    CHECK(patch_isomorphism(gc_patch({1, 1}), pre_dual(corpus::patch("truncate"))).has_value());
    CHECK(patch_isomorphism(gc_patch({2, 0}), corpus::patch("chamfer")).has_value());
    CHECK(inflation_factor(gc_patch({2, 0})) == 4);
  }

  TEST_CASE("chambers at v0 and v2") {
    const GcIncidence two = v0_chamber_incidence({2, 0});
    CHECK(two.v0_colour == 0);
    CHECK(two.v0_chambers == 1);
    CHECK(two.v2_chambers == 1);
    for (const GCParams p : {GCParams{3, 0}, GCParams{1, 1}, GCParams{2, 2}}) {
      const GcIncidence i = v0_chamber_incidence(p);
      CAPTURE(p.l);
      CHECK(i.v0_colour == 2);
      CHECK(i.v0_chambers == 2);
      CHECK(i.v2_chambers == 1);
    }
  }

  TEST_CASE("decomposition through GC(1,1)") {
    for (const GCParams p : {GCParams{3, 0}, GCParams{6, 0}, GCParams{1, 1}, GCParams{2, 2}, GCParams{3, 3}}) {
      CAPTURE(p.l);
      CAPTURE(p.m);
      const DecompositionCheck d = verify_gc_decomposition(p);
      CHECK(d.holds);
      CHECK(static_cast<int>(d.chamber_witness.size()) == gc_patch(p).chamber_count());
    }
    CHECK(verify_gc_decomposition({6, 0}).identity == "GC(6,0) = GC(2,2) o GC(1,1)");
    CHECK_THROWS_AS(verify_gc_decomposition({2, 0}), MapError);
    CHECK_THROWS_AS(verify_gc_decomposition({2, 1}), MapError);
  }

  TEST_CASE("GC keeps 3-regular hexagonal tori 3-regular and hexagonal") {
    const FlagSystem h = hex_torus(3, 3);
    for (const GCParams p : {GCParams{2, 0}, GCParams{1, 1}, GCParams{3, 0}}) {
      CAPTURE(p.l);
      CAPTURE(p.m);
      const MapSummary s = summary(apply(gc_patch(p), h).map);
      CHECK(s.genus == 1);
      CHECK(s.face_sizes == std::vector<int>(s.face_count, 6));
      CHECK(s.vertex_degrees == std::vector<int>(s.vertex_count, 3));
    }
  }
}
