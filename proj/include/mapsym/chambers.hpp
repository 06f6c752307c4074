#pragma once

#include <array>
#include <vector>

#include "mapsym/flag_system.hpp"

namespace mapsym {

// The barycentric subdivision B_P viewed through its chambers. Chamber x is
// the triangle spanned by the colour-0 (vertex), colour-1 (edge) and colour-2
// (face) points of flag x; sigma(i) crosses the side opposite the colour-i
// corner.
class ChamberComplex {
 public:
  explicit ChamberComplex(const FlagSystem& chambers);

  const FlagSystem& flags() const { return chambers_; }
  int chamber_count() const { return chambers_.size(); }

  // Point of colour i in chamber x; points of one colour are numbered from 0.
  // Colour-i points are the orbits of the two involutions other than sigma(i).
  int corner(int x, int colour) const { return corners_[colour][x]; }
  int point_count(int colour) const { return counts_[colour]; }

  friend bool operator==(const ChamberComplex& a, const ChamberComplex& b) {
    return a.chambers_ == b.chambers_;
  }

 private:
  FlagSystem chambers_;
  std::array<std::vector<int>, 3> corners_;
  std::array<int, 3> counts_{};
};

ChamberComplex barycentric(const FlagSystem& m);
FlagSystem map_from_chambers(const ChamberComplex& c);

// B_P as an ordinary triangulated map: one triangular face per chamber.
// `point_colour[v]` is the 0/1/2 colour of vertex v of the returned map;
// vertex numbering follows cells() of the returned map.
struct SubdivisionMap {
  FlagSystem map;
  std::vector<int> point_colour;
};

SubdivisionMap subdivision_as_map(const ChamberComplex& c);

}  // namespace mapsym
