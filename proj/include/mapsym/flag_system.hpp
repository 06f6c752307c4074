#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mapsym {

// A map on an orientable surface encoded by its flags (vertex, edge, face
// triples, equivalently the chambers of the barycentric subdivision).
// sigma(i) replaces the element of dimension i and keeps the other two:
//   sigma(0): other vertex on the same edge, same face
//   sigma(1): other edge at the same vertex, same face
//   sigma(2): other face along the same edge, same vertex
//
// The constructor enforces the invariants: every sigma(i) is a fixed-point
// free involution, sigma(0)sigma(2) is a fixed-point free involution, the
// group generated is transitive, and the flags split into two orientation
// classes that every sigma(i) swaps.
class FlagSystem {
 public:
  using Involution = std::vector<int>;

  FlagSystem() = default;
  FlagSystem(Involution sigma0, Involution sigma1, Involution sigma2,
             bool colored = false);
  explicit FlagSystem(std::array<Involution, 3> sigma, bool colored = false);

  int size() const { return static_cast<int>(sigma_[0].size()); }
  int sigma(int i, int flag) const { return sigma_[i][flag]; }
  std::span<const int> involution(int i) const { return sigma_[i]; }
  const std::array<Involution, 3>& involutions() const { return sigma_; }

  // When set, the colours 0/1/2 are significant (chamber complex view).
  bool colored() const { return colored_; }
  FlagSystem with_colored(bool colored) const;

  // 0 or 1; flag 0 is in class 0.
  int orientation(int flag) const { return orientation_[flag]; }

  friend bool operator==(const FlagSystem& a, const FlagSystem& b) {
    return a.sigma_ == b.sigma_ && a.colored_ == b.colored_;
  }

 private:
  void validate();

  std::array<Involution, 3> sigma_;
  std::vector<std::uint8_t> orientation_;
  bool colored_ = false;
};

// Orbit labels of the three cell types. Cells are numbered in order of their
// smallest flag.
struct CellIndex {
  std::vector<int> vertex_of;  // orbits of <sigma1, sigma2>
  std::vector<int> edge_of;    // orbits of <sigma0, sigma2>
  std::vector<int> face_of;    // orbits of <sigma0, sigma1>
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
};

CellIndex cells(const FlagSystem& m);

// Orbits of the subgroup generated by sigma(i) and sigma(j).
std::vector<int> orbits(const FlagSystem& m, int i, int j, int* count = nullptr);

struct MapSummary {
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
  int genus = 0;
  std::vector<int> face_sizes;      // sorted descending
  std::vector<int> vertex_degrees;  // sorted descending

  friend bool operator==(const MapSummary&, const MapSummary&) = default;
};

MapSummary summary(const FlagSystem& m);
std::string to_string(const MapSummary& s);

// Swaps sigma(0) and sigma(2).
FlagSystem dual(const FlagSystem& m);

// Boundary walk of the face containing `flag` as a vertex sequence, starting
// at the vertex of `flag` and moving along the edge of `flag`.
std::vector<int> face_walk(const FlagSystem& m, const CellIndex& c, int flag);

}  // namespace mapsym
