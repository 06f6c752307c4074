#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapsym/flag_system.hpp"
#include "mapsym/patch.hpp"

namespace mapsym {

enum class AutMode {
  kColourPreserving,       // commutes with sigma0, sigma1, sigma2
  kAllowDualSwap,          // additionally maps that exchange sigma0 and sigma2
  kOrientationPreserving,  // colour-preserving and keeps the orientation class
};

const char* to_string(AutMode mode);
std::optional<AutMode> parse_aut_mode(const std::string& text);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  bool greater_than_one() const { return num > den; }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct AutReport {
  AutMode mode = AutMode::kColourPreserving;
  int group_order = 0;
  // Each element as a flag permutation, sorted by the image of flag 0.
  std::vector<std::vector<int>> elements;
  // Per element: whether it exchanges sigma0 and sigma2.
  std::vector<bool> swaps_colours;
  std::vector<int> chamber_orbit;  // orbit id per flag, numbered by smallest flag
  int orbit_count = 0;
};

// Every automorphism is determined by the image of flag 0; each candidate
// image is tried by propagating along the involutions. `jobs` > 1 splits the
// candidates across threads; the report does not depend on it.
AutReport automorphisms(const FlagSystem& m, AutMode mode = AutMode::kColourPreserving, int jobs = 1);

struct OrbitPartition {
  std::vector<int> orbit_of;
  int count = 0;
  std::vector<int> sizes;  // per orbit
};

OrbitPartition chamber_orbits(const FlagSystem& m, AutMode mode = AutMode::kColourPreserving, int jobs = 1);

// A flag bijection phi with phi(sigma_i x) = sigma_{c(i)} phi(x), where c is
// the identity, or the 0 <-> 2 exchange when the mode allows it.
std::optional<std::vector<int>> find_isomorphism(const FlagSystem& a, const FlagSystem& b,
                                                 AutMode mode = AutMode::kColourPreserving);
bool are_isomorphic(const FlagSystem& a, const FlagSystem& b, AutMode mode = AutMode::kColourPreserving);

std::optional<std::vector<int>> self_duality(const FlagSystem& m);
bool is_self_dual(const FlagSystem& m);

struct ClassCrossing {
  std::vector<int> automorphism;  // flag permutation of O(P)
  int chamber = 0;                // a flag whose image lies in another class
  int image = 0;
  bool crosses_everywhere = false;
};

struct IncreaseReport {
  bool increased = false;
  Rational ratio;
  int map_group_order = 0;
  int result_group_order = 0;
  std::optional<ClassCrossing> certificate;
  // Set when the map passes every polyhedrality condition except the
  // face-intersection one; `face_intersection_witness` then names the pair.
  bool map_polyhedral = true;
  std::string face_intersection_witness;
};

// Rejects non-c3 patches and maps that are not simple, 3-connected and
// bounded by simple face cycles with MapError. Maps failing only the
// face-intersection condition (such as h_family(g)) are accepted and flagged
// in the report.
IncreaseReport increases_symmetry(const OperationPatch& p, const FlagSystem& m, int jobs = 1);

// Same, without the polyhedrality and c3 preconditions (for property tests).
IncreaseReport compare_symmetry(const OperationPatch& p, const FlagSystem& m, int jobs = 1);

}  // namespace mapsym
