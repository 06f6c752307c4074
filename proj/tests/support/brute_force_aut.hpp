#pragma once

// Counts map automorphisms from vertex permutations alone: every bijection
// of the vertex set that preserves adjacency is tried, and it is kept when it
// carries every rotation list onto the rotation list of the image vertex
// either all in the same cyclic order or all reversed. Valid for maps whose
// graph is simple, where a vertex permutation fixes the map automorphism.

#include <algorithm>
#include <vector>

#include "mapsym/rotation.hpp"

namespace brute {

inline bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t shift = 0; shift < b.size(); ++shift) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + shift) % b.size()];
    if (ok) return true;
  }
  return false;
}

inline long long count_automorphisms(const mapsym::RotationSystem& r) {
  const int n = r.vertex_count();
  std::vector<std::vector<int>> nb(n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) {
    for (const auto& d : r.rotation[v]) {
      nb[v].push_back(d.vertex);
      adj[v][d.vertex] = true;
    }
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  long long count = 0;

  auto compatible = [&] {
    bool forward = true, backward = true;
    for (int v = 0; v < n; ++v) {
      std::vector<int> mapped;
      for (int w : nb[v]) mapped.push_back(image[w]);
      forward = forward && same_cycle(mapped, nb[image[v]]);
      std::reverse(mapped.begin(), mapped.end());
      backward = backward && same_cycle(mapped, nb[image[v]]);
    }
    return forward || backward;
  };

  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (compatible()) ++count;
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || nb[c].size() != nb[v].size()) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = adj[u][v] == adj[image[u]][c];
      if (!ok) continue;
      image[v] = c;
      used[c] = true;
      self(self, v + 1);
      used[c] = false;
      image[v] = -1;
    }
  };
  extend(extend, 0);
  return count;
}

}  // namespace brute
