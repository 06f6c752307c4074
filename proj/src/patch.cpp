#include "mapsym/patch.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "graph_util.hpp"
#include "mapsym/error.hpp"
#include "mapsym/families.hpp"
#include "mapsym/polyhedral.hpp"
#include "patch_internal.hpp"

namespace mapsym {

namespace detail {

std::optional<int> locate_outer(const FlagSystem& fs, const CellIndex& c,
                                const std::vector<int>& outer, bool* reversed) {
  const int k = static_cast<int>(outer.size());
  if (k == 0) return std::nullopt;
  auto matches = [&](const std::vector<int>& target, int* start) {
    int found = 0;
    std::vector<bool> face_done(c.face_count, false);
    for (int x = 0; x < fs.size(); ++x) {
      if (fs.orientation(x) != 0 || face_done[c.face_of[x]]) continue;
      face_done[c.face_of[x]] = true;
      const auto walk = face_walk(fs, c, x);
      if (static_cast<int>(walk.size()) != k) continue;
      int y = x;
      for (int r = 0; r < k; ++r, y = fs.sigma(1, fs.sigma(0, y))) {
        bool same = true;
        for (int i = 0; i < k && same; ++i) same = walk[(r + i) % k] == target[i];
        if (same) {
          ++found;
          *start = y;
          break;
        }
      }
    }
    return found;
  };
  int start = -1;
  const int direct = matches(outer, &start);
  if (direct == 1) {
    if (reversed) *reversed = false;
    return start;
  }
  if (direct == 0 && matches(std::vector<int>(outer.rbegin(), outer.rend()), &start) == 1) {
    if (reversed) *reversed = true;
    return start;
  }
  return std::nullopt;
}

}  // namespace detail

struct PatchAccess {
  static OperationPatch build(RawPatch raw, PatchComplex complex,
                              std::vector<std::array<int, 3>> side,
                              std::array<std::vector<int>, 3> paths) {
    OperationPatch p;
    p.raw_ = std::move(raw);
    p.complex_ = std::move(complex);
    p.side_ = std::move(side);
    p.side_path_ = std::move(paths);
    return p;
  }
};

namespace {

std::string vname(int v) { return "vertex " + std::to_string(v + 1); }

}  // namespace

LspValidation validate_lsp(const RawPatch& raw) {
  LspValidation out;
  auto add = [&](std::string clause, std::string witness) {
    out.violations.push_back({std::move(clause), std::move(witness)});
  };
  const int n = static_cast<int>(raw.colour.size());
  if (raw.embedding.vertex_count() != n) {
    add("input", "colour count " + std::to_string(n) + " differs from rotation vertex count " +
                     std::to_string(raw.embedding.vertex_count()));
    return out;
  }
  for (int v = 0; v < n; ++v) {
    if (raw.colour[v] < 0 || raw.colour[v] > 2) {
      add("input", vname(v) + " has colour " + std::to_string(raw.colour[v]));
      return out;
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (raw.special[i] < 0 || raw.special[i] >= n) {
      add("input", "special vertex v" + std::to_string(i) + " out of range");
      return out;
    }
  }
  if (raw.special[0] == raw.special[1] || raw.special[1] == raw.special[2] ||
      raw.special[0] == raw.special[2]) {
    add("input", "special vertices are not distinct");
    return out;
  }

  FlagSystem fs;
  try {
    fs = from_rotation_system(raw.embedding);
  } catch (const MapError& e) {
    add("plane map", e.what());
    return out;
  }
  const CellIndex c = cells(fs);
  const MapSummary s = summary(fs);
  if (s.genus != 0) {
    add("plane map", "embedding has genus " + std::to_string(s.genus));
    return out;
  }
  {
    std::vector<int> sorted = raw.outer;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      add("2-connected", "outer walk repeats a vertex");
      return out;
    }
  }
  const auto start = detail::locate_outer(fs, c, raw.outer, nullptr);
  if (!start) {
    add("outer face", "outer walk does not match exactly one face");
    return out;
  }
  const int outer_face = c.face_of[*start];

  // outer walk as class-0 flags: x_j is at walk[j] on the edge to walk[j+1]
  std::vector<int> walk_flags;
  for (int x = *start;;) {
    walk_flags.push_back(x);
    x = fs.sigma(1, fs.sigma(0, x));
    if (x == *start) break;
  }
  // from_rotation_system numbers darts by vertex, so cell vertex ids agree
  // with the raw ids
  std::vector<int> walk;
  for (int x : walk_flags) walk.push_back(c.vertex_of[x]);
  std::vector<int> position(n, -1);
  for (int j = 0; j < static_cast<int>(walk.size()); ++j) position[walk[j]] = j;
  auto vertex = [&](int flag) { return c.vertex_of[flag]; };

  // 1. inner faces are triangles
  std::vector<int> face_start(c.face_count, -1);
  for (int x = 0; x < fs.size(); ++x) {
    if (fs.orientation(x) == 0 && face_start[c.face_of[x]] < 0) face_start[c.face_of[x]] = x;
  }
  for (int f = 0; f < c.face_count; ++f) {
    if (f == outer_face) continue;
    auto fw = face_walk(fs, c, face_start[f]);
    if (fw.size() != 3) {
      std::string w = "inner face";
      for (int v : fw) w += " " + std::to_string(v + 1);
      w += " has size " + std::to_string(fw.size());
      add("inner faces are triangles", w);
    }
  }

  // 2-connected
  const auto edges = underlying_edges(fs, c);
  {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    if (n < 3) {
      add("2-connected", "fewer than 3 vertices");
    } else {
      detail::CutSearch search(adj);
      const int cut = search.run(-1);
      if (cut == -2) add("2-connected", "map is disconnected");
      if (cut >= 0) add("2-connected", vname(cut) + " is a cut vertex");
    }
  }

  // 2. no edge between vertices of the same colour
  for (auto [a, b] : edges) {
    const int ra = a, rb = b;
    if (raw.colour[ra] == raw.colour[rb]) {
      add("no edge joins vertices of the same colour",
          "edge " + std::to_string(ra + 1) + "-" + std::to_string(rb + 1) + " has both ends coloured " +
              std::to_string(raw.colour[ra]));
    }
  }

  // 3. degree conditions
  const auto& sp = raw.special;
  for (int v = 0; v < n; ++v) {
    if (raw.colour[v] != 1) continue;
    const int deg = raw.embedding.degree(v);
    const bool on_outer = position[v] >= 0;
    const bool is_special = v == sp[0] || v == sp[1] || v == sp[2];
    if (!on_outer && deg != 4) {
      add("c(v)=1 => deg(v)=4 for inner vertices", vname(v) + " has degree " + std::to_string(deg));
    }
    if (on_outer && !is_special && deg != 3) {
      add("c(v)=1 => deg(v)=3 for outer vertices other than v0,v1,v2",
          vname(v) + " has degree " + std::to_string(deg));
    }
  }
  if (raw.colour[sp[0]] == 1) add("c(v0) != 1", "v0 = " + vname(sp[0]) + " has colour 1");
  if (raw.colour[sp[2]] == 1) add("c(v2) != 1", "v2 = " + vname(sp[2]) + " has colour 1");
  if (raw.colour[sp[1]] == 1 && raw.embedding.degree(sp[1]) != 2) {
    add("c(v1)=1 => deg(v1)=2",
        "v1 = " + vname(sp[1]) + " has degree " + std::to_string(raw.embedding.degree(sp[1])));
  }
  for (int i = 0; i < 3; ++i) {
    if (position[sp[i]] < 0) {
      add("special vertices lie on the outer face", "v" + std::to_string(i) + " = " + vname(sp[i]));
    }
  }
  if (!out.violations.empty()) return out;

  // Side labels along the outer walk.
  const int k = static_cast<int>(walk.size());
  std::array<int, 3> pos{position[sp[0]], position[sp[1]], position[sp[2]]};
  auto special_at = [&](int j) {
    for (int i = 0; i < 3; ++i)
      if (pos[i] == j) return i;
    return -1;
  };
  std::vector<int> edge_label(c.edge_count, -1);
  for (int j = 0; j < k; ++j) {
    int prev = j;
    while (special_at(prev) < 0) prev = (prev + k - 1) % k;
    int next = (j + 1) % k;
    while (special_at(next) < 0) next = (next + 1) % k;
    edge_label[c.edge_of[walk_flags[j]]] = 3 - special_at(prev) - special_at(next);
  }
  std::array<std::vector<int>, 3> paths;
  for (int label = 0; label < 3; ++label) {
    const int a = label == 0 ? 1 : 0;
    const int b = label == 2 ? 1 : 2;
    // forward from v_a reaches v_b before the third special?
    int j = pos[a];
    std::vector<int> fwd{walk[j]};
    do {
      j = (j + 1) % k;
      fwd.push_back(walk[j]);
    } while (special_at(j) < 0);
    if (special_at(j) == b) {
      paths[label] = fwd;
    } else {
      j = pos[a];
      std::vector<int> back{walk[j]};
      do {
        j = (j + k - 1) % k;
        back.push_back(walk[j]);
      } while (special_at(j) < 0);
      paths[label] = back;
    }
  }

  // Chambers in face order.
  PatchComplex complex;
  complex.colour = raw.colour;
  complex.special = raw.special;
  std::vector<int> chamber_of_face(c.face_count, -1);
  for (int f = 0; f < c.face_count; ++f) {
    if (f == outer_face) continue;
    chamber_of_face[f] = static_cast<int>(complex.corner.size());
    std::array<int, 3> corner{-1, -1, -1};
    int x = face_start[f];
    do {
      corner[raw.colour[vertex(x)]] = vertex(x);
      x = fs.sigma(1, fs.sigma(0, x));
    } while (x != face_start[f]);
    complex.corner.push_back(corner);
  }
  const int chambers = static_cast<int>(complex.corner.size());
  complex.neighbour.assign(chambers, {-1, -1, -1});
  std::vector<std::array<int, 3>> side(chambers, {-1, -1, -1});
  for (int x = 0; x < fs.size(); ++x) {
    const int f = c.face_of[x];
    if (f == outer_face) continue;
    const int t = chamber_of_face[f];
    const int opposite = 3 - raw.colour[vertex(x)] - raw.colour[vertex(fs.sigma(0, x))];
    const int other = c.face_of[fs.sigma(2, x)];
    if (other == outer_face) {
      side[t][opposite] = edge_label[c.edge_of[x]];
    } else {
      complex.neighbour[t][opposite] = chamber_of_face[other];
    }
  }

  RawPatch stored = raw;
  stored.outer = walk;
  out.patch = PatchAccess::build(std::move(stored), std::move(complex), std::move(side), std::move(paths));
  return out;
}

OperationPatch make_patch(const RawPatch& raw) {
  auto v = validate_lsp(raw);
  if (!v.ok()) {
    std::string msg = "invalid lsp-operation:";
    for (const auto& viol : v.violations) msg += " [" + viol.clause + ": " + viol.witness + "]";
    throw MapError(msg);
  }
  return std::move(*v.patch);
}

int inflation_factor(const OperationPatch& p) { return p.chamber_count(); }

AppliedOperation apply(const OperationPatch& p, const FlagSystem& m) {
  const int t_count = p.chamber_count();
  const int n = m.size() * t_count;
  std::array<std::vector<int>, 3> sigma;
  for (auto& s : sigma) s.resize(n);
  ClassLabeling classes;
  classes.chamber_class.resize(n);
  for (auto& pc : classes.point_class) pc.resize(n);
  for (int f = 0; f < m.size(); ++f) {
    for (int t = 0; t < t_count; ++t) {
      const int x = f * t_count + t;
      for (int i = 0; i < 3; ++i) {
        const int nb = p.neighbour(t, i);
        sigma[i][x] = nb >= 0 ? f * t_count + nb : m.sigma(p.side(t, i), f) * t_count + t;
        classes.point_class[i][x] = p.corner(t, i);
      }
      classes.chamber_class[x] = t;
    }
  }
  try {
    return {FlagSystem(std::move(sigma)), std::move(classes)};
  } catch (const MapError& e) {
    throw MapError(std::string("gluing mismatch: ") + e.what());
  }
}

OperationPatch compose(const OperationPatch& o, const OperationPatch& inner) {
  const int t_count = o.chamber_count();
  const int u_count = inner.chamber_count();
  const int total = t_count * u_count;
  PatchComplex pc;
  pc.neighbour.assign(total, {-1, -1, -1});
  for (int u = 0; u < u_count; ++u) {
    for (int t = 0; t < t_count; ++t) {
      const int x = u * t_count + t;
      for (int i = 0; i < 3; ++i) {
        const int nb = o.neighbour(t, i);
        if (nb >= 0) {
          pc.neighbour[x][i] = u * t_count + nb;
        } else {
          const int nu = inner.neighbour(u, o.side(t, i));
          pc.neighbour[x][i] = nu >= 0 ? nu * t_count + t : -1;
        }
      }
    }
  }
  // corners: union of (chamber, colour) across shared sides
  std::vector<int> parent(3 * total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < total; ++x) {
    for (int i = 0; i < 3; ++i) {
      const int y = pc.neighbour[x][i];
      if (y < 0) continue;
      for (int col = 0; col < 3; ++col) {
        if (col == i) continue;
        parent[find(3 * x + col)] = find(3 * y + col);
      }
    }
  }
  std::vector<int> id(3 * total, -1);
  pc.corner.assign(total, {-1, -1, -1});
  for (int x = 0; x < total; ++x) {
    for (int col = 0; col < 3; ++col) {
      const int r = find(3 * x + col);
      if (id[r] < 0) {
        id[r] = static_cast<int>(pc.colour.size());
        pc.colour.push_back(col);
      }
      pc.corner[x][col] = id[r];
    }
  }
  for (int j = 0; j < 3; ++j) {
    const int sv = inner.special(j);
    const int k = inner.colour(sv);
    int u = 0;
    while (inner.corner(u, k) != sv) ++u;
    const int ov = o.special(k);
    const int kc = o.colour(ov);
    int t = 0;
    while (o.corner(t, kc) != ov) ++t;
    pc.special[j] = pc.corner[u * t_count + t][kc];
  }
  return patch_from_complex(pc);
}

OperationPatch post_dual(const OperationPatch& p) {
  PatchComplex pc = p.complex();
  for (int& col : pc.colour) col = 2 - col;
  for (auto& c : pc.corner) std::swap(c[0], c[2]);
  for (auto& nb : pc.neighbour) std::swap(nb[0], nb[2]);
  return patch_from_complex(pc);
}

OperationPatch pre_dual(const OperationPatch& p) {
  PatchComplex pc = p.complex();
  std::swap(pc.special[0], pc.special[2]);
  return patch_from_complex(pc);
}

bool is_c3(const OperationPatch& p) {
  return is_polyhedral(apply(p, platonic("tetrahedron")).map).polyhedral;
}

std::optional<std::vector<int>> patch_isomorphism(const OperationPatch& a, const OperationPatch& b) {
  const int n = a.chamber_count();
  if (b.chamber_count() != n || a.vertex_count() != b.vertex_count()) return std::nullopt;
  std::vector<int> phi(n), inverse(n);
  for (int target = 0; target < n; ++target) {
    std::fill(phi.begin(), phi.end(), -1);
    std::fill(inverse.begin(), inverse.end(), -1);
    phi[0] = target;
    inverse[target] = 0;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int i = 0; i < 3 && ok; ++i) {
        const int nx = a.neighbour(x, i);
        const int ny = b.neighbour(phi[x], i);
        if ((nx < 0) != (ny < 0)) {
          ok = false;
        } else if (nx < 0) {
          ok = a.side(x, i) == b.side(phi[x], i);
        } else if (phi[nx] < 0) {
          if (inverse[ny] >= 0) {
            ok = false;
          } else {
            phi[nx] = ny;
            inverse[ny] = nx;
            stack.push_back(nx);
          }
        } else {
          ok = phi[nx] == ny;
        }
      }
    }
    if (ok) return phi;
  }
  return std::nullopt;
}

OperationPatch identity_patch() {
  PatchComplex pc;
  pc.colour = {0, 1, 2};
  pc.corner = {{0, 1, 2}};
  pc.neighbour = {{-1, -1, -1}};
  pc.special = {0, 1, 2};
  return patch_from_complex(pc);
}

OperationPatch dual_patch() {
  PatchComplex pc;
  pc.colour = {2, 1, 0};
  pc.corner = {{2, 1, 0}};
  pc.neighbour = {{-1, -1, -1}};
  pc.special = {0, 1, 2};
  return patch_from_complex(pc);
}

}  // namespace mapsym
