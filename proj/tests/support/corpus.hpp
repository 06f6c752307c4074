#pragma once

#include <string>
#include <vector>

#include "mapsym/families.hpp"
#include "mapsym/flag_system.hpp"
#include "mapsym/io.hpp"

namespace corpus {

struct NamedMap {
  std::string name;
  mapsym::FlagSystem map;
};

// Maps used by the property suites, smallest first.
inline const std::vector<NamedMap>& maps() {
  static const std::vector<NamedMap> all = [] {
    std::vector<NamedMap> out;
    for (const auto& n : mapsym::platonic_names()) out.push_back({n, mapsym::platonic(n)});
    out.push_back({"square-torus(3)", mapsym::square_torus(3)});
    out.push_back({"square-torus(5)", mapsym::square_torus(5)});
    out.push_back({"triangle-torus(3,3)", mapsym::triangle_torus(3, 3)});
    out.push_back({"hex-torus(3,3)", mapsym::hex_torus(3, 3)});
    out.push_back({"H2", mapsym::h_family(2)});
    out.push_back({"H3", mapsym::h_family(3)});
    out.push_back({"selfdual(2)", mapsym::self_dual_map(2)});
    return out;
  }();
  return all;
}

// Small maps for quadratic property checks.
inline std::vector<NamedMap> small_maps(int max_flags) {
  std::vector<NamedMap> out;
  for (const auto& m : maps()) {
    if (m.map.size() <= max_flags) out.push_back(m);
  }
  return out;
}

inline const std::vector<std::string>& patch_names() {
  static const std::vector<std::string> names{
      "identity", "dual",   "ambo",  "join", "truncate", "needle", "zip",      "kis",
      "expand",   "ortho",  "chamfer", "subdivide", "loft", "o6a", "o6b", "bevel",
      "meta",     "o6d",    "joinlace", "o6e", "quinto", "quinto-d", "quinto-od", "quinto-dod"};
  return names;
}

inline mapsym::OperationPatch patch(const std::string& name) { return mapsym::fixture_patch(name); }

}  // namespace corpus
