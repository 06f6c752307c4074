#include "mapsym/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graph_util.hpp"

namespace mapsym {

const char* to_string(PolyhedralCondition c) {
  switch (c) {
    case PolyhedralCondition::kNone: return "none";
    case PolyhedralCondition::kSimpleGraph: return "simple-graph";
    case PolyhedralCondition::kThreeConnected: return "3-connected";
    case PolyhedralCondition::kFaceCycle: return "face-cycle";
    case PolyhedralCondition::kFaceIntersection: return "face-intersection";
  }
  return "?";
}

std::vector<std::pair<int, int>> underlying_edges(const FlagSystem& m, const CellIndex& c) {
  std::vector<std::pair<int, int>> edges(c.edge_count, {-1, -1});
  for (int x = 0; x < m.size(); ++x) {
    auto& e = edges[c.edge_of[x]];
    if (e.first < 0) e = {c.vertex_of[x], c.vertex_of[m.sigma(0, x)]};
  }
  return edges;
}

namespace {

PolyhedralReport fail(PolyhedralCondition c, std::string witness) {
  PolyhedralReport r;
  r.failed = c;
  r.witness = std::move(witness);
  return r;
}

}  // namespace

PolyhedralReport is_polyhedral(const FlagSystem& m) {
  const CellIndex c = cells(m);
  const auto edges = underlying_edges(m, c);
  const int n = c.vertex_count;

  // (a) simple graph
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < c.edge_count; ++e) {
    auto [a, b] = edges[e];
    if (a == b) return fail(PolyhedralCondition::kSimpleGraph, "loop at vertex " + std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second) {
      return fail(PolyhedralCondition::kSimpleGraph,
                  "parallel edges between vertices " + std::to_string(std::min(a, b)) + " and " +
                      std::to_string(std::max(a, b)));
    }
  }

  // (b) 3-connected: for every vertex v, G - v must be 2-connected.
  if (n < 4) {
    return fail(PolyhedralCondition::kThreeConnected, "only " + std::to_string(n) + " vertices");
  }
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  detail::CutSearch search(adj);
  for (int v = 0; v < n; ++v) {
    const int cut = search.run(v);
    if (cut == -2) {
      return fail(PolyhedralCondition::kThreeConnected,
                  "removing vertex " + std::to_string(v) + " disconnects the graph");
    }
    if (cut >= 0) {
      return fail(PolyhedralCondition::kThreeConnected, "vertices " + std::to_string(std::min(v, cut)) +
                                                            " and " + std::to_string(std::max(v, cut)) +
                                                            " form a 2-cut");
    }
  }

  // (c) face boundaries are simple cycles
  std::vector<int> face_start(c.face_count, -1);
  for (int x = 0; x < m.size(); ++x) {
    if (face_start[c.face_of[x]] < 0) face_start[c.face_of[x]] = x;
  }
  std::vector<std::vector<int>> face_vertices(c.face_count);
  std::vector<std::set<int>> face_edges(c.face_count);
  for (int f = 0; f < c.face_count; ++f) {
    auto walk = face_walk(m, c, face_start[f]);
    auto sorted = walk;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return fail(PolyhedralCondition::kFaceCycle,
                  "face " + std::to_string(f) + " visits a vertex twice");
    }
    face_vertices[f] = std::move(sorted);
  }
  for (int x = 0; x < m.size(); ++x) face_edges[c.face_of[x]].insert(c.edge_of[x]);

  // (d) closures of distinct faces meet in nothing, a vertex, or an edge.
  std::vector<std::vector<int>> faces_at(n);
  for (int f = 0; f < c.face_count; ++f) {
    for (int v : face_vertices[f]) faces_at[v].push_back(f);
  }
  std::map<std::pair<int, int>, std::vector<int>> shared;
  for (int v = 0; v < n; ++v) {
    const auto& fs = faces_at[v];
    for (size_t i = 0; i < fs.size(); ++i) {
      for (size_t j = i + 1; j < fs.size(); ++j) {
        shared[std::minmax(fs[i], fs[j])].push_back(v);
      }
    }
  }
  for (const auto& [pair, verts] : shared) {
    int common_edges = 0;
    for (int e : face_edges[pair.first]) common_edges += face_edges[pair.second].count(e);
    const bool ok = (verts.size() == 1 && common_edges == 0) || (verts.size() == 2 && common_edges == 1);
    if (!ok) {
      std::string w = "faces " + std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                      " share vertices {";
      for (size_t i = 0; i < verts.size(); ++i) w += (i ? "," : "") + std::to_string(verts[i]);
      w += "} and " + std::to_string(common_edges) + " edge(s)";
      return fail(PolyhedralCondition::kFaceIntersection, w);
    }
  }

  PolyhedralReport ok;
  ok.polyhedral = true;
  return ok;
}

}  // namespace mapsym
