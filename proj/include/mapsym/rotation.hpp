#pragma once

#include <vector>

#include "mapsym/flag_system.hpp"

namespace mapsym {

// One edge-end in a rotation list: the far vertex and the position of the
// partner dart in that vertex's list.
struct Dart {
  int vertex = 0;
  int slot = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

// Clockwise cyclic lists of darts around each vertex. Parallel edges and
// loops are allowed; the slot fields pair darts into edges.
struct RotationSystem {
  std::vector<std::vector<Dart>> rotation;

  int vertex_count() const { return static_cast<int>(rotation.size()); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
};

// Builds dart slots from plain neighbour lists. Requires a simple graph
// (every neighbour appears once per list and adjacency is symmetric).
RotationSystem rotation_from_neighbours(const std::vector<std::vector<int>>& neighbours);

// Builds a rotation system from faces given as vertex cycles with a common
// orientation (each directed edge occurs in exactly one face).
RotationSystem rotation_from_faces(int vertex_count,
                                   const std::vector<std::vector<int>>& faces);

// Flag convention: dart d = (u -> v) at position p of u's list carries the
// two flags 2d and 2d+1, both at vertex u on the edge of d.
//   sigma2: 2d <-> 2d+1
//   sigma0: 2d+s <-> 2 rev(d) + (1-s)
//   sigma1: 2d+1 <-> 2 next(d), next(d) the clockwise successor of d at u
// Flags 2d form orientation class 0.
FlagSystem from_rotation_system(const RotationSystem& r);

// Inverse of from_rotation_system up to relabeling: darts are the flags of
// orientation class 0, vertices are numbered by smallest flag, and every
// list starts at the smallest flag of its vertex.
RotationSystem to_rotation_system(const FlagSystem& m);

}  // namespace mapsym
