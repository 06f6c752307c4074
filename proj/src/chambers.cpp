#include "mapsym/chambers.hpp"

namespace mapsym {

ChamberComplex::ChamberComplex(const FlagSystem& chambers)
    : chambers_(chambers.with_colored(true)) {
  for (int colour = 0; colour < 3; ++colour) {
    corners_[colour] = orbits(chambers_, (colour + 1) % 3, (colour + 2) % 3, &counts_[colour]);
  }
}

ChamberComplex barycentric(const FlagSystem& m) { return ChamberComplex(m); }

FlagSystem map_from_chambers(const ChamberComplex& c) { return c.flags().with_colored(false); }

SubdivisionMap subdivision_as_map(const ChamberComplex& c) {
  // Flags of the triangulation: (chamber x, corner colour a, side opposite
  // colour b) with a != b; the side contains corner a. Six per chamber.
  const FlagSystem& m = c.flags();
  const int n = m.size();
  auto slot = [](int a, int b) { return a * 2 + (b > a ? b - 1 : b); };
  auto third = [](int a, int b) { return 3 - a - b; };
  std::vector<int> t0(6 * n), t1(6 * n), t2(6 * n);
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        const int f = 6 * x + slot(a, b);
        // other endpoint of the same side
        t0[f] = 6 * x + slot(third(a, b), b);
        // other side at the same corner
        t1[f] = 6 * x + slot(a, third(a, b));
        // neighbouring chamber across the same side
        t2[f] = 6 * m.sigma(b, x) + slot(a, b);
      }
    }
  }
  SubdivisionMap out{FlagSystem(std::move(t0), std::move(t1), std::move(t2)), {}};
  const CellIndex cc = cells(out.map);
  out.point_colour.assign(cc.vertex_count, -1);
  for (int f = 0; f < 6 * n; ++f) out.point_colour[cc.vertex_of[f]] = (f % 6) / 2;
  return out;
}

}  // namespace mapsym
