#pragma once

#include <algorithm>
#include <vector>

namespace mapsym::detail {

// Articulation points of the graph with `removed` deleted; also reports
// whether the rest is connected. Iterative Tarjan low-link.
struct CutSearch {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> order, low, parent;
  std::vector<size_t> next_edge;

  explicit CutSearch(const std::vector<std::vector<int>>& a)
      : adj(a), order(a.size()), low(a.size()), parent(a.size()), next_edge(a.size()) {}

  // Returns -2 if disconnected, an articulation point if one exists, else -1.
  // `removed` may be -1 to search the whole graph.
  int run(int removed) {
    const int n = static_cast<int>(adj.size());
    std::fill(order.begin(), order.end(), -1);
    std::fill(next_edge.begin(), next_edge.end(), 0);
    const int root = removed == 0 ? 1 : 0;
    int counter = 0;
    int root_children = 0;
    std::vector<int> stack{root};
    order[root] = low[root] = counter++;
    parent[root] = -1;
    int cut = -1;
    while (!stack.empty()) {
      const int v = stack.back();
      if (next_edge[v] < adj[v].size()) {
        const int w = adj[v][next_edge[v]++];
        if (w == removed) continue;
        if (order[w] < 0) {
          parent[w] = v;
          order[w] = low[w] = counter++;
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], order[w]);
        }
      } else {
        stack.pop_back();
        const int p = parent[v];
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= order[p] && cut < 0) cut = p;
        }
      }
    }
    if (counter != n - (removed >= 0 ? 1 : 0)) return -2;
    if (root_children > 1 && cut < 0) cut = root;
    return cut;
  }
};

}  // namespace mapsym::detail
