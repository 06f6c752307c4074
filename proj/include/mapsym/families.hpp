#pragma once

#include <string>
#include <vector>

#include "mapsym/flag_system.hpp"
#include "mapsym/rotation.hpp"

namespace mapsym {

// tetrahedron, cube, octahedron, dodecahedron, icosahedron
FlagSystem platonic(const std::string& name);
const std::vector<std::string>& platonic_names();

// n x n quadrangulation of the torus; n >= 3.
FlagSystem square_torus(int n);

// 6-regular triangulation of the torus on an r x s grid of vertices; r, s >= 3.
FlagSystem triangle_torus(int r, int s);

// Dual of triangle_torus(r, s): 3-regular, all faces hexagons. Rejects
// parameters whose result is not polyhedral.
FlagSystem hex_torus(int r, int s);

// The genus-g map with 4g vertices A_0..A_{2g-1} (indices 0..2g-1) and
// B_0..B_{2g-1} (indices 2g..4g-1); g >= 2.
RotationSystem h_family_rotation(int g);
FlagSystem h_family(int g);

// Glues two maps along one face each. The faces are removed and their
// boundaries identified: walking the first face from its base vertex u_0 and
// the second from w_0, u_j is identified with w_{offset - j}; with `flip` the
// correspondence is u_j <-> w_{offset + j}, which glues the mirror image of
// the second map. A face is given by its index in cells(); its base is the
// smallest orientation-class-0 flag of the face.
struct GlueSpec {
  FlagSystem first;
  int first_face = 0;
  FlagSystem second;
  int second_face = 0;
  int offset = 0;
  bool flip = false;
};

FlagSystem glue_along_face(const GlueSpec& spec);

// Same gluing with explicit base flags; each face is walked from its base
// flag by sigma1 sigma0. `renumber_*` receive the new index of every old
// flag, -1 for the removed ones.
FlagSystem glue_at_flags(const FlagSystem& a, int base_a, const FlagSystem& b, int base_b, int offset,
                         bool flip, std::vector<int>* renumber_a = nullptr,
                         std::vector<int>* renumber_b = nullptr);

// Genus-1 tilings with one and with two hexagonal holes, built from the 5x5
// square torus by replacing strips of three squares. `hole_flags` receives
// a class-0 flag of each hexagon, based at the hexagon's gluing vertex.
// Two holes glued with offset 5 and no flip give a self-dual result.
FlagSystem self_dual_piece_g(std::vector<int>* hole_flags = nullptr);
FlagSystem self_dual_piece_h(std::vector<int>* hole_flags = nullptr);

// Self-dual polyhedral map of the given genus: tetrahedron (0), 5x5 square
// torus (1), two G pieces glued along their hexagons (2), and for higher
// genus a chain G - H - ... - H - G with genus - 2 copies of H.
FlagSystem self_dual_map(int genus);

}  // namespace mapsym
