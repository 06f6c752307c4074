#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mapsym/flag_system.hpp"
#include "mapsym/rotation.hpp"

namespace mapsym {

// Patch data as written in an .lsp file: a 3-coloured plane map with a
// marked outer face and special vertices v0, v1, v2 (all 0-based here).
// The outer walk follows the face-tracing direction: for consecutive
// vertices u, v, w of the walk, w follows u in the clockwise rotation at v.
struct RawPatch {
  std::vector<int> colour;
  RotationSystem embedding;
  std::vector<int> outer;
  std::array<int, 3> special{};
};

// Chamber-level description of a patch: the inner triangles with their
// corners per colour and the adjacency across each side. A side opposite the
// colour-i corner of chamber t is shared with neighbour[t][i], or lies on the
// outer face when that entry is -1. Shared sides are opposite the same colour
// in both chambers.
struct PatchComplex {
  std::vector<int> colour;
  std::vector<std::array<int, 3>> corner;
  std::vector<std::array<int, 3>> neighbour;
  std::array<int, 3> special{};
};

// A validated lsp-operation. Besides the complex it records, for each
// boundary side of a chamber, which side path S_ab it lies on, labelled by
// the missing index k = 3 - a - b (so label k means "glued to the copy in
// sigma_k of the host chamber").
class OperationPatch {
 public:
  int chamber_count() const { return static_cast<int>(complex_.corner.size()); }
  int vertex_count() const { return static_cast<int>(complex_.colour.size()); }
  int colour(int v) const { return complex_.colour[v]; }
  int degree(int v) const { return raw_.embedding.degree(v); }
  int corner(int t, int i) const { return complex_.corner[t][i]; }
  int neighbour(int t, int i) const { return complex_.neighbour[t][i]; }
  int side(int t, int i) const { return side_[t][i]; }
  int special(int i) const { return complex_.special[i]; }

  // Vertices of S_ab (k = 3 - a - b), listed from v_a to v_b with a < b.
  const std::vector<int>& side_path(int k) const { return side_path_[k]; }

  const PatchComplex& complex() const { return complex_; }
  const RawPatch& raw() const { return raw_; }

 private:
  friend struct PatchAccess;
  RawPatch raw_;
  PatchComplex complex_;
  std::vector<std::array<int, 3>> side_;
  std::array<std::vector<int>, 3> side_path_;
};

struct Violation {
  std::string clause;
  std::string witness;
};

struct LspValidation {
  std::optional<OperationPatch> patch;
  std::vector<Violation> violations;

  bool ok() const { return patch.has_value(); }
};

// Checks every clause of the lsp definition (plane 2-connected map, inner
// faces are triangles, no monochromatic edges, the degree conditions on
// colour-1 vertices and on v0, v1, v2). All violated clauses are reported.
LspValidation validate_lsp(const RawPatch& raw);

// validate_lsp that throws MapError listing the violations.
OperationPatch make_patch(const RawPatch& raw);

// Chamber complex from inner triangles given as vertex triples in any order;
// neighbours are found through shared sides.
PatchComplex complex_from_triangles(const std::vector<int>& colour,
                                    const std::vector<std::array<int, 3>>& triangles,
                                    std::array<int, 3> special);

// Embeds a chamber complex as a plane map (outer face included), relabels it
// canonically and validates it.
OperationPatch patch_from_complex(const PatchComplex& complex);

// Vertex relabeling by breadth-first search from v2, neighbours taken in
// rotation order; rotation lists start at a fixed anchor. Deterministic for
// a given embedding.
RawPatch canonical_form(const RawPatch& raw);

int inflation_factor(const OperationPatch& p);

// The class map pi: for every flag of O(P), the patch chamber it copies and
// the patch vertex at each of its three corners.
struct ClassLabeling {
  std::vector<int> chamber_class;
  std::array<std::vector<int>, 3> point_class;

  int vertex_class(int flag) const { return point_class[0][flag]; }
  int edge_class(int flag) const { return point_class[1][flag]; }
  int face_class(int flag) const { return point_class[2][flag]; }
};

struct AppliedOperation {
  FlagSystem map;
  ClassLabeling classes;
};

// Glues a copy of the patch (mirrored on odd chambers) into every chamber of
// the host. Flag f*T + t of the result is the copy of patch chamber t in
// host chamber f, T = chamber_count().
AppliedOperation apply(const OperationPatch& p, const FlagSystem& m);

// compose(o, inner) is o after inner: a copy of o glued into every chamber of
// inner, so apply(compose(o, inner), m) ~ apply(o, apply(inner, m)).
OperationPatch compose(const OperationPatch& o, const OperationPatch& inner);

// D o p: colours 0 and 2 exchanged on every patch vertex.
OperationPatch post_dual(const OperationPatch& p);
// p o D: the roles of v0 and v2 exchanged.
OperationPatch pre_dual(const OperationPatch& p);

// The result of applying p to the tetrahedron is polyhedral.
bool is_c3(const OperationPatch& p);

// Chamber bijection commuting with the adjacency and preserving side labels
// (mirror images count as isomorphic).
std::optional<std::vector<int>> patch_isomorphism(const OperationPatch& a, const OperationPatch& b);

OperationPatch identity_patch();
OperationPatch dual_patch();

}  // namespace mapsym
