#include "mapsym/analysis.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <thread>

#include "mapsym/error.hpp"
#include "mapsym/polyhedral.hpp"

namespace mapsym {

namespace {

using ColourMap = std::array<int, 3>;
constexpr ColourMap kIdentity{0, 1, 2};
constexpr ColourMap kSwap{2, 1, 0};

// Half the number of flags around the vertex and around the face of each flag.
struct LocalShape {
  std::vector<int> degree;
  std::vector<int> face_size;

  explicit LocalShape(const FlagSystem& m) : degree(m.size()), face_size(m.size()) {
    const CellIndex c = cells(m);
    std::vector<int> dv(c.vertex_count, 0), df(c.face_count, 0);
    for (int x = 0; x < m.size(); ++x) {
      ++dv[c.vertex_of[x]];
      ++df[c.face_of[x]];
    }
    for (int x = 0; x < m.size(); ++x) {
      degree[x] = dv[c.vertex_of[x]];
      face_size[x] = df[c.face_of[x]];
    }
  }
};

// Propagates phi(base) = target; phi(sigma_i x) must equal
// sigma_{cmap[i]} phi(x). Both systems are connected, so a consistent phi is
// a bijection when the sizes agree.
bool extend(const FlagSystem& a, const FlagSystem& b, int base, int target, const ColourMap& cmap,
            std::vector<int>& phi, std::vector<int>& stack) {
  std::fill(phi.begin(), phi.end(), -1);
  phi[base] = target;
  stack.clear();
  stack.push_back(base);
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    const int fx = phi[x];
    for (int i = 0; i < 3; ++i) {
      const int y = a.sigma(i, x);
      const int fy = b.sigma(cmap[i], fx);
      if (phi[y] < 0) {
        phi[y] = fy;
        stack.push_back(y);
      } else if (phi[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

bool shape_matches(const LocalShape& sa, const LocalShape& sb, int base, int target, const ColourMap& cmap) {
  if (cmap == kIdentity) {
    return sa.degree[base] == sb.degree[target] && sa.face_size[base] == sb.face_size[target];
  }
  return sa.degree[base] == sb.face_size[target] && sa.face_size[base] == sb.degree[target];
}

std::vector<ColourMap> colour_maps(AutMode mode) {
  if (mode == AutMode::kAllowDualSwap) return {kIdentity, kSwap};
  return {kIdentity};
}

}  // namespace

const char* to_string(AutMode mode) {
  switch (mode) {
    case AutMode::kColourPreserving: return "colour-preserving";
    case AutMode::kAllowDualSwap: return "allow-dual-swap";
    case AutMode::kOrientationPreserving: return "orientation-preserving";
  }
  return "?";
}

std::optional<AutMode> parse_aut_mode(const std::string& text) {
  if (text == "colour-preserving" || text == "color-preserving" || text == "colour") {
    return AutMode::kColourPreserving;
  }
  if (text == "allow-dual-swap" || text == "dual-swap") return AutMode::kAllowDualSwap;
  if (text == "orientation-preserving" || text == "orientation") return AutMode::kOrientationPreserving;
  return std::nullopt;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw MapError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

AutReport automorphisms(const FlagSystem& m, AutMode mode, int jobs) {
  const int n = m.size();
  const auto maps = colour_maps(mode);
  const int patterns = static_cast<int>(maps.size());
  const LocalShape shape(m);
  std::vector<std::vector<int>> found(static_cast<size_t>(n) * patterns);
  std::atomic<int> next{0};
  auto worker = [&] {
    std::vector<int> phi(n), stack;
    for (int target = next++; target < n; target = next++) {
      if (mode == AutMode::kOrientationPreserving && m.orientation(target) != m.orientation(0)) continue;
      for (int p = 0; p < patterns; ++p) {
        if (!shape_matches(shape, shape, 0, target, maps[p])) continue;
        if (extend(m, m, 0, target, maps[p], phi, stack)) found[static_cast<size_t>(target) * patterns + p] = phi;
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  AutReport report;
  report.mode = mode;
  for (int target = 0; target < n; ++target) {
    for (int p = 0; p < patterns; ++p) {
      auto& phi = found[static_cast<size_t>(target) * patterns + p];
      if (phi.empty()) continue;
      report.elements.push_back(std::move(phi));
      report.swaps_colours.push_back(maps[p] != kIdentity);
    }
  }
  report.group_order = static_cast<int>(report.elements.size());
  report.chamber_orbit.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (report.chamber_orbit[x] >= 0) continue;
    for (const auto& phi : report.elements) report.chamber_orbit[phi[x]] = report.orbit_count;
    ++report.orbit_count;
  }
  return report;
}

OrbitPartition chamber_orbits(const FlagSystem& m, AutMode mode, int jobs) {
  AutReport r = automorphisms(m, mode, jobs);
  OrbitPartition out{std::move(r.chamber_orbit), r.orbit_count, std::vector<int>(r.orbit_count, 0)};
  for (int o : out.orbit_of) ++out.sizes[o];
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const FlagSystem& a, const FlagSystem& b, AutMode mode) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  const LocalShape sa(a), sb(b);
  std::vector<int> phi(n), stack;
  for (const ColourMap& cmap : colour_maps(mode)) {
    for (int target = 0; target < n; ++target) {
      if (mode == AutMode::kOrientationPreserving && b.orientation(target) != a.orientation(0)) continue;
      if (!shape_matches(sa, sb, 0, target, cmap)) continue;
      if (extend(a, b, 0, target, cmap, phi, stack)) return phi;
    }
  }
  return std::nullopt;
}

bool are_isomorphic(const FlagSystem& a, const FlagSystem& b, AutMode mode) {
  return find_isomorphism(a, b, mode).has_value();
}

std::optional<std::vector<int>> self_duality(const FlagSystem& m) {
  return find_isomorphism(m, dual(m), AutMode::kColourPreserving);
}

bool is_self_dual(const FlagSystem& m) { return self_duality(m).has_value(); }

IncreaseReport compare_symmetry(const OperationPatch& p, const FlagSystem& m, int jobs) {
  const AppliedOperation applied = apply(p, m);
  const AutReport base = automorphisms(m, AutMode::kColourPreserving, jobs);
  AutReport result = automorphisms(applied.map, AutMode::kColourPreserving, jobs);
  IncreaseReport out;
  out.map_group_order = base.group_order;
  out.result_group_order = result.group_order;
  out.ratio = Rational::of(result.group_order, base.group_order);
  out.increased = out.ratio.greater_than_one();
  const auto& cls = applied.classes.chamber_class;
  for (auto& phi : result.elements) {
    int first = -1;
    bool everywhere = true;
    for (int x = 0; x < applied.map.size(); ++x) {
      if (cls[phi[x]] != cls[x]) {
        if (first < 0) first = x;
      } else {
        everywhere = false;
      }
    }
    if (first >= 0) {
      out.certificate = ClassCrossing{std::move(phi), first, 0, everywhere};
      out.certificate->image = out.certificate->automorphism[first];
      break;
    }
  }
  return out;
}

IncreaseReport increases_symmetry(const OperationPatch& p, const FlagSystem& m, int jobs) {
  const auto report = is_polyhedral(m);
  if (!report.polyhedral && report.failed != PolyhedralCondition::kFaceIntersection) {
    throw MapError(std::string("map is not polyhedral (") + to_string(report.failed) + "): " + report.witness);
  }
  if (!is_c3(p)) throw MapError("operation is not c3 (its result on the tetrahedron is not polyhedral)");
  IncreaseReport out = compare_symmetry(p, m, jobs);
  out.map_polyhedral = report.polyhedral;
  out.face_intersection_witness = report.witness;
  return out;
}

}  // namespace mapsym
