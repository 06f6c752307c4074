#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "mapsym/error.hpp"
#include "mapsym/patch.hpp"
#include "patch_internal.hpp"

namespace mapsym {

namespace {

void check_complex(const PatchComplex& pc) {
  const int t_count = static_cast<int>(pc.corner.size());
  const int n = static_cast<int>(pc.colour.size());
  if (t_count == 0) throw MapError("patch has no chambers");
  if (static_cast<int>(pc.neighbour.size()) != t_count) throw MapError("neighbour table size mismatch");
  for (int t = 0; t < t_count; ++t) {
    for (int i = 0; i < 3; ++i) {
      const int v = pc.corner[t][i];
      if (v < 0 || v >= n || pc.colour[v] != i) {
        throw MapError("chamber " + std::to_string(t) + " has a bad colour-" + std::to_string(i) + " corner");
      }
      const int nb = pc.neighbour[t][i];
      if (nb < 0) continue;
      if (nb >= t_count || nb == t || pc.neighbour[nb][i] != t) {
        throw MapError("chamber adjacency is not symmetric at chamber " + std::to_string(t));
      }
      for (int j = 0; j < 3; ++j) {
        if (j != i && pc.corner[nb][j] != pc.corner[t][j]) {
          throw MapError("chambers " + std::to_string(t) + " and " + std::to_string(nb) +
                         " disagree on a shared side");
        }
      }
    }
  }
}

}  // namespace

PatchComplex complex_from_triangles(const std::vector<int>& colour,
                                    const std::vector<std::array<int, 3>>& triangles,
                                    std::array<int, 3> special) {
  PatchComplex pc;
  pc.colour = colour;
  pc.special = special;
  const int n = static_cast<int>(colour.size());
  for (const auto& tri : triangles) {
    std::array<int, 3> corner{-1, -1, -1};
    for (int v : tri) {
      if (v < 0 || v >= n) throw MapError("triangle vertex out of range");
      if (corner[colour[v]] >= 0) throw MapError("triangle with two corners of one colour");
      corner[colour[v]] = v;
    }
    pc.corner.push_back(corner);
  }
  const int t_count = static_cast<int>(pc.corner.size());
  pc.neighbour.assign(t_count, {-1, -1, -1});
  std::map<std::array<int, 3>, int> owner;
  for (int t = 0; t < t_count; ++t) {
    for (int i = 0; i < 3; ++i) {
      std::array<int, 3> key = pc.corner[t];
      key[i] = -1;
      auto [it, fresh] = owner.emplace(key, t);
      if (fresh) continue;
      if (pc.neighbour[it->second][i] >= 0) throw MapError("side shared by more than two triangles");
      pc.neighbour[t][i] = it->second;
      pc.neighbour[it->second][i] = t;
    }
  }
  return pc;
}

OperationPatch patch_from_complex(const PatchComplex& pc) {
  check_complex(pc);
  const int t_count = static_cast<int>(pc.corner.size());
  const int n = static_cast<int>(pc.colour.size());

  std::vector<int> parity(t_count, -1);
  parity[0] = 0;
  std::vector<int> stack{0};
  int reached = 1;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      const int nb = pc.neighbour[t][i];
      if (nb < 0) continue;
      if (parity[nb] < 0) {
        parity[nb] = 1 - parity[t];
        ++reached;
        stack.push_back(nb);
      } else if (parity[nb] == parity[t]) {
        throw MapError("chamber complex is not orientable");
      }
    }
  }
  if (reached != t_count) throw MapError("chamber complex is not connected");

  std::vector<std::array<int, 3>> edge_id(t_count, {-1, -1, -1});
  std::vector<std::pair<int, int>> endpoints;
  for (int t = 0; t < t_count; ++t) {
    for (int i = 0; i < 3; ++i) {
      const int nb = pc.neighbour[t][i];
      if (nb >= 0 && edge_id[nb][i] >= 0) {
        edge_id[t][i] = edge_id[nb][i];
        continue;
      }
      edge_id[t][i] = static_cast<int>(endpoints.size());
      endpoints.emplace_back(pc.corner[t][(i + 1) % 3], pc.corner[t][(i + 2) % 3]);
    }
  }

  // Chambers of parity 0 run c0 -> c1 -> c2, parity 1 the other way. For an
  // oriented chamber x -> y -> z the edge to z follows the edge to x at y.
  auto cycle = [&](int t) {
    return parity[t] == 0 ? std::array<int, 3>{0, 1, 2} : std::array<int, 3>{0, 2, 1};
  };
  std::vector<std::map<int, int>> succ(n);
  std::vector<std::set<int>> incident(n);
  for (int t = 0; t < t_count; ++t) {
    const auto ord = cycle(t);
    for (int m = 0; m < 3; ++m) {
      const int y = ord[m], x = ord[(m + 2) % 3], z = ord[(m + 1) % 3];
      const int v = pc.corner[t][y];
      incident[v].insert(edge_id[t][z]);
      incident[v].insert(edge_id[t][x]);
      if (!succ[v].emplace(edge_id[t][z], edge_id[t][x]).second) {
        throw MapError("vertex " + std::to_string(v) + " is pinched");
      }
    }
  }

  RotationSystem rot;
  rot.rotation.resize(n);
  std::map<std::pair<int, int>, int> slot;
  std::vector<std::vector<int>> edges_at(n);
  for (int v = 0; v < n; ++v) {
    if (incident[v].empty()) throw MapError("vertex " + std::to_string(v) + " lies in no chamber");
    std::set<int> has_pred;
    for (auto [a, b] : succ[v]) has_pred.insert(b);
    int first = *incident[v].begin();
    for (int e : incident[v]) {
      if (!has_pred.count(e)) {
        first = e;
        break;
      }
    }
    int e = first;
    while (true) {
      slot[{v, e}] = static_cast<int>(edges_at[v].size());
      edges_at[v].push_back(e);
      auto it = succ[v].find(e);
      if (it == succ[v].end() || it->second == first) break;
      e = it->second;
    }
    if (edges_at[v].size() != incident[v].size()) {
      throw MapError("chambers around vertex " + std::to_string(v) + " do not form a disk");
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int e : edges_at[v]) {
      const auto [a, b] = endpoints[e];
      const int w = a == v ? b : a;
      rot.rotation[v].push_back({w, slot.at({w, e})});
    }
  }

  // The outer face runs against the boundary sides of the chambers.
  std::map<int, int> outer_next;
  int boundary_sides = 0;
  for (int t = 0; t < t_count; ++t) {
    const auto ord = cycle(t);
    for (int m = 0; m < 3; ++m) {
      const int p = ord[m], q = ord[(m + 1) % 3];
      if (pc.neighbour[t][3 - p - q] >= 0) continue;
      ++boundary_sides;
      if (!outer_next.emplace(pc.corner[t][q], pc.corner[t][p]).second) {
        throw MapError("patch boundary is not a simple cycle");
      }
    }
  }
  std::vector<int> outer;
  const int start = outer_next.begin()->first;
  int v = start;
  do {
    outer.push_back(v);
    v = outer_next.at(v);
  } while (v != start && static_cast<int>(outer.size()) <= boundary_sides);
  if (static_cast<int>(outer.size()) != boundary_sides) {
    throw MapError("patch boundary is not a simple cycle");
  }

  RawPatch raw{pc.colour, std::move(rot), std::move(outer), pc.special};
  return make_patch(canonical_form(raw));
}

RawPatch canonical_form(const RawPatch& raw) {
  const int n = raw.embedding.vertex_count();
  const FlagSystem fs = from_rotation_system(raw.embedding);
  const CellIndex c = cells(fs);
  const auto start = detail::locate_outer(fs, c, raw.outer, nullptr);
  if (!start) throw MapError("outer walk does not match a face");

  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + raw.embedding.degree(v);
  // class-0 flags are 2d for dart d
  std::vector<int> anchor(n, -1);
  std::vector<int> walk;
  for (int x = *start;;) {
    const int v = c.vertex_of[x];
    walk.push_back(v);
    anchor[v] = x / 2 - offset[v];
    x = fs.sigma(1, fs.sigma(0, x));
    if (x == *start) break;
  }

  std::vector<int> new_id(n, -1);
  std::deque<int> queue{raw.special[2]};
  new_id[raw.special[2]] = 0;
  int next = 1;
  if (anchor[raw.special[2]] < 0) throw MapError("v2 is not on the outer face");
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const int deg = raw.embedding.degree(u);
    for (int q = 0; q < deg; ++q) {
      const Dart& d = raw.embedding.rotation[u][(anchor[u] + q) % deg];
      if (new_id[d.vertex] >= 0) continue;
      new_id[d.vertex] = next++;
      if (anchor[d.vertex] < 0) anchor[d.vertex] = d.slot;
      queue.push_back(d.vertex);
    }
  }
  if (next != n) throw MapError("patch graph is not connected");

  RawPatch out;
  out.colour.resize(n);
  out.embedding.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    const int nv = new_id[v];
    const int deg = raw.embedding.degree(v);
    out.colour[nv] = raw.colour[v];
    for (int q = 0; q < deg; ++q) {
      const Dart& d = raw.embedding.rotation[v][(anchor[v] + q) % deg];
      const int dd = raw.embedding.degree(d.vertex);
      out.embedding.rotation[nv].push_back({new_id[d.vertex], (d.slot - anchor[d.vertex] + dd) % dd});
    }
  }
  for (int i = 0; i < 3; ++i) out.special[i] = new_id[raw.special[i]];
  const auto v0 = std::find(walk.begin(), walk.end(), raw.special[0]);
  if (v0 == walk.end()) throw MapError("v0 is not on the outer face");
  std::rotate(walk.begin(), v0, walk.end());
  for (int v : walk) out.outer.push_back(new_id[v]);
  return out;
}

}  // namespace mapsym
