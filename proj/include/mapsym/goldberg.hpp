#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapsym/patch.hpp"

namespace mapsym {

// A point of the hexagonal tiling's plane in the 60-degree lattice basis,
// stored with doubled coordinates so that half-integers stay exact:
// the point is (x2 / 2, y2 / 2).
struct HexPoint {
  int x2 = 0;
  int y2 = 0;

  static HexPoint integer(int x, int y) { return {2 * x, 2 * y}; }

  friend bool operator==(const HexPoint&, const HexPoint&) = default;
  friend auto operator<=>(const HexPoint&, const HexPoint&) = default;
};

enum class PointKind { kFaceCenter, kVertex, kEdgeMidpoint, kNone };

const char* to_string(PointKind k);

// Integer points: face centre iff x - y = 0 mod 3, otherwise a vertex of the
// tiling. Points with a half-integer coordinate: edge midpoint iff
// 2(x - y) = 0 mod 3.
PointKind classify_point(HexPoint p);

// B_{T_H} colour of a point: 0 vertex, 1 edge midpoint, 2 face centre.
std::optional<int> point_colour(HexPoint p);

struct GCParams {
  int l = 1;
  int m = 0;
};

// Throws MapError unless (m = 0, l >= 1) or (l = m >= 1).
void check_params(const GCParams& p);

// Triangle corners v0 = (l, m), v1 = ((l-m)/2, (l+2m)/2), v2 = (0, 0).
std::array<HexPoint, 3> gc_corners(const GCParams& p);

// Cuts the triangle out of the subdivided hexagonal tiling: the chambers whose
// centroid lies strictly inside. Throws if v1 is not a point of B_{T_H}.
OperationPatch gc_patch(const GCParams& p);

struct GcIncidence {
  int v0_colour = 0;
  int v0_chambers = 0;
  int v2_chambers = 0;
};

GcIncidence v0_chamber_incidence(const GCParams& p);

struct DecompositionCheck {
  bool holds = false;
  std::string identity;              // e.g. "GC(3,0) = GC(1,1) o GC(1,1)"
  std::vector<int> chamber_witness;  // patch isomorphism when it holds
};

// GC(3k,0) = GC(k,k) o GC(1,1) and GC(l,l) = GC(l,0) o GC(1,1). Throws for
// parameters not of either shape.
DecompositionCheck verify_gc_decomposition(const GCParams& p);

}  // namespace mapsym
