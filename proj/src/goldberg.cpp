#include "mapsym/goldberg.hpp"

#include <algorithm>
#include <map>

#include "mapsym/error.hpp"

namespace mapsym {

namespace {

int mod3(int a) { return ((a % 3) + 3) % 3; }

// Twice the signed area of (a, b, c); the sign is invariant under the affine
// change from lattice to Cartesian coordinates.
long long orient(long long ax, long long ay, long long bx, long long by, long long cx, long long cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

std::string gc_name(int l, int m) { return "GC(" + std::to_string(l) + "," + std::to_string(m) + ")"; }

}  // namespace

const char* to_string(PointKind k) {
  switch (k) {
    case PointKind::kFaceCenter: return "face-center";
    case PointKind::kVertex: return "vertex";
    case PointKind::kEdgeMidpoint: return "edge-midpoint";
    case PointKind::kNone: return "none";
  }
  return "?";
}

PointKind classify_point(HexPoint p) {
  const bool integral = p.x2 % 2 == 0 && p.y2 % 2 == 0;
  if (integral) {
    return mod3(p.x2 / 2 - p.y2 / 2) == 0 ? PointKind::kFaceCenter : PointKind::kVertex;
  }
  return mod3(p.x2 - p.y2) == 0 ? PointKind::kEdgeMidpoint : PointKind::kNone;
}

std::optional<int> point_colour(HexPoint p) {
  switch (classify_point(p)) {
    case PointKind::kVertex: return 0;
    case PointKind::kEdgeMidpoint: return 1;
    case PointKind::kFaceCenter: return 2;
    case PointKind::kNone: return std::nullopt;
  }
  return std::nullopt;
}

void check_params(const GCParams& p) {
  if (!((p.m == 0 && p.l >= 1) || (p.l == p.m && p.l >= 1))) {
    throw MapError("GC parameters must satisfy m = 0 < l or l = m > 0, got " + gc_name(p.l, p.m));
  }
}

std::array<HexPoint, 3> gc_corners(const GCParams& p) {
  return {HexPoint{2 * p.l, 2 * p.m}, HexPoint{p.l - p.m, p.l + 2 * p.m}, HexPoint{0, 0}};
}

OperationPatch gc_patch(const GCParams& p) {
  check_params(p);
  const auto corners = gc_corners(p);
  for (int i = 0; i < 3; ++i) {
    if (!point_colour(corners[i])) {
      throw MapError(gc_name(p.l, p.m) + ": v" + std::to_string(i) +
                     " is not a vertex of the subdivided hexagonal tiling");
    }
  }

  // Chamber corners in doubled coordinates; the centroid scaled by 6 is the
  // plain sum of doubled corners, the triangle corners scale by 3.
  const long long ax = 3LL * corners[0].x2, ay = 3LL * corners[0].y2;
  const long long bx = 3LL * corners[1].x2, by = 3LL * corners[1].y2;
  const long long cx = 0, cy = 0;
  const long long total = orient(ax, ay, bx, by, cx, cy);
  auto inside = [&](long long px, long long py) {
    const long long s0 = orient(ax, ay, bx, by, px, py);
    const long long s1 = orient(bx, by, cx, cy, px, py);
    const long long s2 = orient(cx, cy, ax, ay, px, py);
    if (s0 == 0 || s1 == 0 || s2 == 0) throw MapError("chamber centroid on the cutting triangle");
    return (s0 > 0) == (total > 0) && (s1 > 0) == (total > 0) && (s2 > 0) == (total > 0);
  };

  static constexpr int kUx[6] = {1, 0, -1, -1, 0, 1};
  static constexpr int kUy[6] = {0, 1, 1, 0, -1, -1};
  const int lo_x = std::min({0, p.l, (p.l - p.m) / 2}) - 2;
  const int hi_x = std::max({0, p.l, (p.l - p.m + 1) / 2}) + 2;
  const int lo_y = -2;
  const int hi_y = p.l + 2 * p.m + 2;

  PatchComplex pc;
  std::map<HexPoint, int> id;
  auto vertex = [&](HexPoint q, int colour) {
    auto [it, fresh] = id.emplace(q, static_cast<int>(pc.colour.size()));
    if (fresh) pc.colour.push_back(colour);
    return it->second;
  };
  for (int fx = lo_x; fx <= hi_x; ++fx) {
    for (int fy = lo_y; fy <= hi_y; ++fy) {
      if (mod3(fx - fy) != 0) continue;
      for (int k = 0; k < 6; ++k) {
        for (int turn : {1, 5}) {
          const int k2 = (k + turn) % 6;
          const HexPoint face = HexPoint::integer(fx, fy);
          const HexPoint vtx = HexPoint::integer(fx + kUx[k], fy + kUy[k]);
          const HexPoint mid{2 * fx + kUx[k] + kUx[k2], 2 * fy + kUy[k] + kUy[k2]};
          if (!inside(face.x2 + vtx.x2 + mid.x2, face.y2 + vtx.y2 + mid.y2)) continue;
          pc.corner.push_back({vertex(vtx, 0), vertex(mid, 1), vertex(face, 2)});
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    auto it = id.find(corners[i]);
    if (it == id.end()) throw MapError(gc_name(p.l, p.m) + ": corner v" + std::to_string(i) + " is in no chamber");
    pc.special[i] = it->second;
  }

  const int t_count = static_cast<int>(pc.corner.size());
  pc.neighbour.assign(t_count, {-1, -1, -1});
  std::map<std::array<int, 3>, int> side_owner;
  for (int t = 0; t < t_count; ++t) {
    for (int i = 0; i < 3; ++i) {
      std::array<int, 3> key = pc.corner[t];
      key[i] = -1;
      auto [it, fresh] = side_owner.emplace(key, t);
      if (!fresh) {
        pc.neighbour[t][i] = it->second;
        pc.neighbour[it->second][i] = t;
      }
    }
  }
  return patch_from_complex(pc);
}

GcIncidence v0_chamber_incidence(const GCParams& p) {
  const OperationPatch patch = gc_patch(p);
  GcIncidence out;
  out.v0_colour = patch.colour(patch.special(0));
  for (int t = 0; t < patch.chamber_count(); ++t) {
    if (patch.corner(t, out.v0_colour) == patch.special(0)) ++out.v0_chambers;
    if (patch.corner(t, patch.colour(patch.special(2))) == patch.special(2)) ++out.v2_chambers;
  }
  return out;
}

DecompositionCheck verify_gc_decomposition(const GCParams& p) {
  check_params(p);
  DecompositionCheck out;
  GCParams outer;
  if (p.m == 0) {
    if (p.l % 3 != 0) throw MapError(gc_name(p.l, p.m) + " has no decomposition through GC(1,1)");
    outer = {p.l / 3, p.l / 3};
  } else {
    outer = {p.l, 0};
  }
  out.identity = gc_name(p.l, p.m) + " = " + gc_name(outer.l, outer.m) + " o GC(1,1)";
  const OperationPatch composed = compose(gc_patch(outer), gc_patch({1, 1}));
  if (auto iso = patch_isomorphism(gc_patch(p), composed)) {
    out.holds = true;
    out.chamber_witness = std::move(*iso);
  }
  return out;
}

}  // namespace mapsym
