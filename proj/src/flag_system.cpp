#include "mapsym/flag_system.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mapsym/error.hpp"

namespace mapsym {

FlagSystem::FlagSystem(Involution sigma0, Involution sigma1, Involution sigma2,
                       bool colored)
    : FlagSystem({std::move(sigma0), std::move(sigma1), std::move(sigma2)}, colored) {}

FlagSystem::FlagSystem(std::array<Involution, 3> sigma, bool colored)
    : sigma_(std::move(sigma)), colored_(colored) {
  validate();
}

FlagSystem FlagSystem::with_colored(bool colored) const {
  FlagSystem copy = *this;
  copy.colored_ = colored;
  return copy;
}

void FlagSystem::validate() {
  const int n = static_cast<int>(sigma_[0].size());
  if (sigma_[1].size() != sigma_[0].size() || sigma_[2].size() != sigma_[0].size()) {
    throw MapError("involutions have different lengths");
  }
  if (n == 0) throw MapError("empty flag system");
  if (n % 4 != 0) throw MapError("flag count " + std::to_string(n) + " is not a multiple of 4");
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < n; ++x) {
      const int y = sigma_[i][x];
      if (y < 0 || y >= n) {
        throw MapError("sigma" + std::to_string(i) + " maps flag " + std::to_string(x) +
                       " out of range");
      }
      if (y == x) {
        throw MapError("sigma" + std::to_string(i) + " fixes flag " + std::to_string(x));
      }
      if (sigma_[i][y] != x) {
        throw MapError("sigma" + std::to_string(i) + " is not an involution at flag " +
                       std::to_string(x));
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    const int y = sigma_[0][sigma_[2][x]];
    if (y == x || sigma_[0][sigma_[2][y]] != x) {
      throw MapError("sigma0*sigma2 is not a fixed-point free involution at flag " +
                     std::to_string(x));
    }
  }

  // Connectivity and orientability in one pass: 2-colour the flags so that
  // every sigma(i) changes the colour.
  orientation_.assign(n, 2);
  std::vector<int> stack{0};
  orientation_[0] = 0;
  int seen = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      const int y = sigma_[i][x];
      if (orientation_[y] == 2) {
        orientation_[y] = static_cast<std::uint8_t>(1 - orientation_[x]);
        ++seen;
        stack.push_back(y);
      } else if (orientation_[y] == orientation_[x]) {
        throw MapError("flag system is not orientable (flags " + std::to_string(x) + " and " +
                       std::to_string(y) + ")");
      }
    }
  }
  if (seen != n) throw MapError("flag system is not connected");
}

std::vector<int> orbits(const FlagSystem& m, int i, int j, int* count) {
  const int n = m.size();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    // Orbits of two involutions are alternating cycles.
    int x = start;
    bool use_i = true;
    do {
      label[x] = next;
      x = use_i ? m.sigma(i, x) : m.sigma(j, x);
      use_i = !use_i;
    } while (x != start || !use_i);
    ++next;
  }
  if (count) *count = next;
  return label;
}

CellIndex cells(const FlagSystem& m) {
  CellIndex c;
  c.vertex_of = orbits(m, 1, 2, &c.vertex_count);
  c.edge_of = orbits(m, 0, 2, &c.edge_count);
  c.face_of = orbits(m, 0, 1, &c.face_count);
  return c;
}

MapSummary summary(const FlagSystem& m) {
  const CellIndex c = cells(m);
  MapSummary s;
  s.vertex_count = c.vertex_count;
  s.edge_count = c.edge_count;
  s.face_count = c.face_count;
  const int euler = s.vertex_count - s.edge_count + s.face_count;
  if (euler > 2 || (euler % 2) != 0) {
    throw MapError("Euler characteristic " + std::to_string(euler) +
                   " is not that of an orientable surface");
  }
  s.genus = (2 - euler) / 2;
  std::vector<int> face_flags(c.face_count, 0), vertex_flags(c.vertex_count, 0);
  for (int x = 0; x < m.size(); ++x) {
    ++face_flags[c.face_of[x]];
    ++vertex_flags[c.vertex_of[x]];
  }
  for (int k : face_flags) s.face_sizes.push_back(k / 2);
  for (int k : vertex_flags) s.vertex_degrees.push_back(k / 2);
  std::sort(s.face_sizes.rbegin(), s.face_sizes.rend());
  std::sort(s.vertex_degrees.rbegin(), s.vertex_degrees.rend());
  return s;
}

namespace {

// "6^2 4^6 3^12"
std::string multiset(const std::vector<int>& sorted_desc) {
  std::ostringstream out;
  for (size_t i = 0; i < sorted_desc.size();) {
    size_t j = i;
    while (j < sorted_desc.size() && sorted_desc[j] == sorted_desc[i]) ++j;
    if (i > 0) out << ' ';
    out << sorted_desc[i] << '^' << (j - i);
    i = j;
  }
  return out.str();
}

}  // namespace

std::string to_string(const MapSummary& s) {
  std::ostringstream out;
  out << "V=" << s.vertex_count << " E=" << s.edge_count << " F=" << s.face_count
      << " genus=" << s.genus << " faces=[" << multiset(s.face_sizes) << "] degrees=["
      << multiset(s.vertex_degrees) << "]";
  return out.str();
}

FlagSystem dual(const FlagSystem& m) {
  const auto& s = m.involutions();
  return FlagSystem(s[2], s[1], s[0], m.colored());
}

std::vector<int> face_walk(const FlagSystem& m, const CellIndex& c, int flag) {
  std::vector<int> walk;
  int x = flag;
  do {
    walk.push_back(c.vertex_of[x]);
    x = m.sigma(1, m.sigma(0, x));
  } while (x != flag);
  return walk;
}

}  // namespace mapsym
