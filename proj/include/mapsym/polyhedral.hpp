#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mapsym/flag_system.hpp"

namespace mapsym {

enum class PolyhedralCondition {
  kNone,            // all conditions hold
  kSimpleGraph,     // loop or parallel edge
  kThreeConnected,  // fewer than 4 vertices, or a separating set of size <= 2
  kFaceCycle,       // a face boundary walk repeats a vertex
  kFaceIntersection // two face closures meet in a disconnected set
};

struct PolyhedralReport {
  bool polyhedral = false;
  PolyhedralCondition failed = PolyhedralCondition::kNone;
  std::string witness;  // human-readable description of the first violation

  explicit operator bool() const { return polyhedral; }
};

const char* to_string(PolyhedralCondition c);

// Checks, in order: simple underlying graph, 3-connectivity, face boundaries
// are simple cycles, and every pair of distinct face closures meets in
// nothing, one vertex, or one edge.
PolyhedralReport is_polyhedral(const FlagSystem& m);

// Underlying graph as an edge list over vertex ids of cells(m); loops and
// parallel edges are kept.
std::vector<std::pair<int, int>> underlying_edges(const FlagSystem& m, const CellIndex& c);

}  // namespace mapsym
