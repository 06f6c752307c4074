#include "mapsym/rotation.hpp"

#include <map>
#include <numeric>
#include <string>

#include "mapsym/error.hpp"

namespace mapsym {

RotationSystem rotation_from_neighbours(const std::vector<std::vector<int>>& neighbours) {
  const int n = static_cast<int>(neighbours.size());
  std::vector<std::map<int, int>> position(n);
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < static_cast<int>(neighbours[v].size()); ++p) {
      const int w = neighbours[v][p];
      if (w < 0 || w >= n) throw MapError("neighbour index out of range at vertex " + std::to_string(v));
      if (w == v) throw MapError("loop at vertex " + std::to_string(v) + " needs explicit darts");
      if (!position[v].emplace(w, p).second) {
        throw MapError("parallel edge " + std::to_string(v) + "-" + std::to_string(w) +
                       " needs explicit darts");
      }
    }
  }
  RotationSystem r;
  r.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int w : neighbours[v]) {
      auto it = position[w].find(v);
      if (it == position[w].end()) {
        throw MapError("adjacency " + std::to_string(v) + "-" + std::to_string(w) +
                       " is not symmetric");
      }
      r.rotation[v].push_back({w, it->second});
    }
  }
  return r;
}

RotationSystem rotation_from_faces(int vertex_count, const std::vector<std::vector<int>>& faces) {
  // For consecutive a -> b -> c along a face, c follows a in the rotation at b.
  std::vector<std::map<int, int>> successor(vertex_count);
  for (const auto& face : faces) {
    const int k = static_cast<int>(face.size());
    for (int i = 0; i < k; ++i) {
      const int a = face[(i + k - 1) % k], b = face[i], c = face[(i + 1) % k];
      if (!successor[b].emplace(a, c).second) {
        throw MapError("directed edge " + std::to_string(b) + "->" + std::to_string(a) +
                       " occurs in two faces");
      }
    }
  }
  std::vector<std::vector<int>> neighbours(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    if (successor[v].empty()) throw MapError("vertex " + std::to_string(v) + " is in no face");
    const int first = successor[v].begin()->first;
    int w = first;
    do {
      neighbours[v].push_back(w);
      auto it = successor[v].find(w);
      if (it == successor[v].end()) {
        throw MapError("faces around vertex " + std::to_string(v) + " do not close up");
      }
      w = it->second;
    } while (w != first);
    if (neighbours[v].size() != successor[v].size()) {
      throw MapError("vertex " + std::to_string(v) + " is pinched (several face cycles)");
    }
  }
  return rotation_from_neighbours(neighbours);
}

FlagSystem from_rotation_system(const RotationSystem& r) {
  const int n = r.vertex_count();
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    if (r.degree(v) == 0) throw MapError("vertex " + std::to_string(v + 1) + " has degree 0");
    offset[v + 1] = offset[v] + r.degree(v);
  }
  const int darts = offset[n];
  std::vector<int> rev(darts);
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < r.degree(v); ++p) {
      const Dart& d = r.rotation[v][p];
      if (d.vertex < 0 || d.vertex >= n || d.slot < 0 || d.slot >= r.degree(d.vertex)) {
        throw MapError("dart " + std::to_string(p + 1) + " at vertex " + std::to_string(v + 1) +
                       " points outside the rotation system");
      }
      const Dart& back = r.rotation[d.vertex][d.slot];
      if (back.vertex != v || back.slot != p || (d.vertex == v && d.slot == p)) {
        throw MapError("dart " + std::to_string(p + 1) + " at vertex " + std::to_string(v + 1) +
                       " is not matched with a partner");
      }
      rev[offset[v] + p] = offset[d.vertex] + d.slot;
    }
  }
  std::vector<int> s0(2 * darts), s1(2 * darts), s2(2 * darts);
  for (int v = 0; v < n; ++v) {
    const int deg = r.degree(v);
    for (int p = 0; p < deg; ++p) {
      const int d = offset[v] + p;
      const int next = offset[v] + (p + 1) % deg;
      s2[2 * d] = 2 * d + 1;
      s2[2 * d + 1] = 2 * d;
      s0[2 * d] = 2 * rev[d] + 1;
      s0[2 * d + 1] = 2 * rev[d];
      s1[2 * d + 1] = 2 * next;
      s1[2 * next] = 2 * d + 1;
    }
  }
  try {
    return FlagSystem(std::move(s0), std::move(s1), std::move(s2));
  } catch (const MapError& e) {
    throw MapError(std::string("rotation system does not define a map: ") + e.what());
  }
}

RotationSystem to_rotation_system(const FlagSystem& m) {
  const CellIndex c = cells(m);
  const int n = m.size();
  // Position of every class-0 flag in its vertex's list.
  std::vector<int> slot(n, -1);
  std::vector<int> first(c.vertex_count, -1);
  for (int x = 0; x < n; ++x) {
    if (m.orientation(x) == 0 && first[c.vertex_of[x]] < 0) first[c.vertex_of[x]] = x;
  }
  RotationSystem r;
  r.rotation.resize(c.vertex_count);
  std::vector<std::vector<int>> flags_at(c.vertex_count);
  for (int v = 0; v < c.vertex_count; ++v) {
    int x = first[v];
    do {
      slot[x] = static_cast<int>(flags_at[v].size());
      flags_at[v].push_back(x);
      x = m.sigma(1, m.sigma(2, x));
    } while (x != first[v]);
  }
  for (int v = 0; v < c.vertex_count; ++v) {
    for (int x : flags_at[v]) {
      const int back = m.sigma(2, m.sigma(0, x));
      r.rotation[v].push_back({c.vertex_of[back], slot[back]});
    }
  }
  return r;
}

}  // namespace mapsym
