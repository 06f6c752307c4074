#include "mapsym/families.hpp"

#include <algorithm>

#include "mapsym/error.hpp"
#include "mapsym/polyhedral.hpp"

namespace mapsym {

namespace {

FlagSystem from_faces(int n, const std::vector<std::vector<int>>& faces) {
  return from_rotation_system(rotation_from_faces(n, faces));
}

FlagSystem tetrahedron() { return from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }

FlagSystem octahedron() {
  // vertex 2a is +axis a, 2a+1 is -axis a
  std::vector<std::vector<int>> faces;
  for (int sx = 0; sx < 2; ++sx) {
    for (int sy = 0; sy < 2; ++sy) {
      for (int sz = 0; sz < 2; ++sz) {
        const int x = sx, y = 2 + sy, z = 4 + sz;
        if ((sx + sy + sz) % 2 == 0) {
          faces.push_back({x, y, z});
        } else {
          faces.push_back({x, z, y});
        }
      }
    }
  }
  return from_faces(6, faces);
}

FlagSystem icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom; lower vertex 6+i
  // sits between upper vertices 1+i and 1+(i+1)%5
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 5; ++i) {
    const int a = 1 + i, b = 1 + (i + 1) % 5;
    const int l = 6 + i, l2 = 6 + (i + 1) % 5;
    faces.push_back({0, a, b});
    faces.push_back({a, l, b});
    faces.push_back({b, l, l2});
    faces.push_back({11, l2, l});
  }
  return from_faces(12, faces);
}

struct Strip {
  int col = 0;
  int row = 0;
};

// Square torus with each strip of three squares (bottom-left corner at
// (col, row)) replaced by a hexagon, two pentagons and a square. Strip
// vertices: b_k = (col+k, row), t_k = (col+k, row+1), plus new x, y, z.
// Each returned hole flag is a class-0 flag of a hexagon at its b_0; the
// hexagon walk from it is b_0, b_1, b_2, y, z, x.
FlagSystem strip_piece(int n, const std::vector<Strip>& strips, std::vector<int>* holes) {
  auto id = [n](int i, int j) { return ((j % n + n) % n) * n + ((i % n + n) % n); };
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<bool>> replaced(n, std::vector<bool>(n, false));
  int next = n * n;
  std::vector<std::pair<int, int>> anchors;  // (b0, x) per strip
  for (const Strip& s : strips) {
    for (int k = 0; k < 3; ++k) {
      auto cell = replaced[(s.row % n + n) % n][((s.col + k) % n + n) % n];
      if (cell) throw MapError("strips overlap");
      cell = true;
    }
    int b[4], t[4];
    for (int k = 0; k < 4; ++k) {
      b[k] = id(s.col + k, s.row);
      t[k] = id(s.col + k, s.row + 1);
    }
    const int x = next++, y = next++, z = next++;
    faces.push_back({b[0], b[1], b[2], y, z, x});
    faces.push_back({b[2], b[3], t[3], t[2], y});
    faces.push_back({t[2], t[1], z, y});
    faces.push_back({t[1], t[0], b[0], x, z});
    anchors.emplace_back(b[0], x);
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!replaced[j][i]) faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  FlagSystem m = from_faces(next, faces);

  const CellIndex c = cells(m);
  const MapSummary s = summary(m);
  const int k = static_cast<int>(strips.size());
  std::vector<int> expected_faces(c.face_count - 3 * k, 4);
  for (int i = 0; i < k; ++i) expected_faces.insert(expected_faces.begin(), {6, 5, 5});
  std::sort(expected_faces.rbegin(), expected_faces.rend());
  if (s.genus != 1 || s.face_sizes != expected_faces) {
    throw MapError("strip piece has an unexpected face profile: " + to_string(s));
  }
  if (holes) {
    holes->clear();
    for (auto [b0, x] : anchors) {
      for (int f = 0; f < m.size(); ++f) {
        if (m.orientation(f) != 0 || c.vertex_of[f] != b0) continue;
        const auto walk = face_walk(m, c, f);
        if (walk.size() == 6 && std::find(walk.begin(), walk.end(), x) != walk.end()) {
          holes->push_back(f);
          break;
        }
      }
    }
  }
  return m;
}

const std::vector<Strip> kPieceG{{0, 0}};
const std::vector<Strip> kPieceH{{0, 0}, {4, 4}};

// identifies b_0, b_1, b_2 of one hole with x, z, y of the other
constexpr int kSeamOffset = 5;

}  // namespace

const std::vector<std::string>& platonic_names() {
  static const std::vector<std::string> names{"tetrahedron", "cube", "octahedron", "dodecahedron",
                                              "icosahedron"};
  return names;
}

FlagSystem platonic(const std::string& name) {
  if (name == "tetrahedron") return tetrahedron();
  if (name == "octahedron") return octahedron();
  if (name == "cube") return dual(octahedron());
  if (name == "icosahedron") return icosahedron();
  if (name == "dodecahedron") return dual(icosahedron());
  throw MapError("unknown platonic solid '" + name + "'");
}

FlagSystem square_torus(int n) {
  if (n < 3) throw MapError("square_torus needs n >= 3 (smaller grids have parallel edges)");
  RotationSystem r;
  r.rotation.resize(n * n);
  auto id = [n](int i, int j) { return ((j % n + n) % n) * n + ((i % n + n) % n); };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // right, down, left, up; the partner of direction d sits at slot (d+2)%4
      r.rotation[id(i, j)] = {{id(i + 1, j), 2}, {id(i, j - 1), 3}, {id(i - 1, j), 0}, {id(i, j + 1), 1}};
    }
  }
  return from_rotation_system(r);
}

FlagSystem triangle_torus(int r, int s) {
  if (r < 3 || s < 3) throw MapError("triangle_torus needs r, s >= 3");
  auto id = [r, s](int i, int j) { return ((j % s + s) % s) * r + ((i % r + r) % r); };
  std::vector<std::vector<int>> faces;
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < r; ++i) {
      faces.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
      faces.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return from_faces(r * s, faces);
}

FlagSystem hex_torus(int r, int s) {
  FlagSystem m = dual(triangle_torus(r, s));
  const auto report = is_polyhedral(m);
  if (!report.polyhedral) {
    throw MapError("hex_torus(" + std::to_string(r) + "," + std::to_string(s) +
                   ") is not polyhedral: " + report.witness);
  }
  return m;
}

RotationSystem h_family_rotation(int g) {
  if (g < 2) throw MapError("H_g needs g >= 2");
  const int k = 2 * g;
  auto a = [k](int i) { return ((i % k) + k) % k; };
  auto b = [k](int i) { return k + ((i % k) + k) % k; };
  std::vector<std::vector<int>> nb(2 * k);
  for (int i = 0; i < k; ++i) {
    nb[a(i)] = {a(i + 1), a(i - 1), b(i), b(i + g), b(i + g + 1), b(i + 1)};
    nb[b(i)] = {b(i - 1), b(i + 1), a(i + g), a(i), a(i - 1), a(i + g - 1)};
  }
  return rotation_from_neighbours(nb);
}

FlagSystem h_family(int g) { return from_rotation_system(h_family_rotation(g)); }

FlagSystem glue_at_flags(const FlagSystem& a, int base_a, const FlagSystem& b, int base_b, int offset, bool flip,
                         std::vector<int>* renumber_a, std::vector<int>* renumber_b) {
  if (base_a < 0 || base_a >= a.size() || base_b < 0 || base_b >= b.size()) {
    throw MapError("gluing base flag out of range");
  }
  const int n1 = a.size(), n2 = b.size(), n = n1 + n2;
  std::array<std::vector<int>, 3> s;
  for (int i = 0; i < 3; ++i) {
    s[i].resize(n);
    for (int x = 0; x < n1; ++x) s[i][x] = a.sigma(i, x);
    for (int x = 0; x < n2; ++x) s[i][n1 + x] = n1 + b.sigma(i, x);
  }
  auto boundary = [&](int base) {
    std::vector<int> flags;
    int x = base;
    do {
      flags.push_back(x);
      flags.push_back(s[0][x]);
      x = s[1][s[0][x]];
    } while (x != base);
    return flags;
  };
  const auto xs = boundary(base_a);
  const auto ys = boundary(n1 + base_b);
  if (xs.size() != ys.size()) {
    throw MapError("glued faces have different sizes (" + std::to_string(xs.size() / 2) + " and " +
                   std::to_string(ys.size() / 2) + ")");
  }
  const int k = static_cast<int>(xs.size()) / 2;
  std::vector<bool> removed(n, false);
  for (int x : xs) removed[x] = true;
  for (int y : ys) removed[y] = true;
  for (int x : xs) {
    if (removed[s[2][x]]) throw MapError("glued face meets itself along an edge");
  }
  for (int y : ys) {
    if (removed[s[2][y]]) throw MapError("glued face meets itself along an edge");
  }
  const auto mod = [k](int v) { return ((v % k) + k) % k; };
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < k; ++j) {
    if (flip) {
      const int q = mod(offset + j);
      pairs.emplace_back(xs[2 * j], ys[2 * q]);
      pairs.emplace_back(xs[2 * j + 1], ys[2 * q + 1]);
    } else {
      const int q = mod(offset - j - 1);
      pairs.emplace_back(xs[2 * j], ys[2 * q + 1]);
      pairs.emplace_back(xs[2 * j + 1], ys[2 * q]);
    }
  }
  // read all partners before rewriting sigma2
  std::vector<std::pair<int, int>> outside;
  for (auto [x, y] : pairs) outside.emplace_back(s[2][x], s[2][y]);
  for (auto [p, q] : outside) {
    s[2][p] = q;
    s[2][q] = p;
  }

  std::vector<int> index(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (!removed[x]) index[x] = next++;
  }
  std::array<std::vector<int>, 3> t;
  for (int i = 0; i < 3; ++i) {
    t[i].resize(next);
    for (int x = 0; x < n; ++x) {
      if (!removed[x]) t[i][index[x]] = index[s[i][x]];
    }
  }
  FlagSystem out(std::move(t));
  const CellIndex c = cells(out);
  for (auto [u, v] : underlying_edges(out, c)) {
    if (u == v) throw MapError("gluing creates a loop");
  }
  if (renumber_a) renumber_a->assign(index.begin(), index.begin() + n1);
  if (renumber_b) renumber_b->assign(index.begin() + n1, index.end());
  return out;
}

FlagSystem glue_along_face(const GlueSpec& spec) {
  auto base = [](const FlagSystem& m, int face) {
    const CellIndex c = cells(m);
    if (face < 0 || face >= c.face_count) throw MapError("face index " + std::to_string(face) + " out of range");
    for (int x = 0; x < m.size(); ++x) {
      if (c.face_of[x] == face && m.orientation(x) == 0) return x;
    }
    throw MapError("face without class-0 flag");
  };
  return glue_at_flags(spec.first, base(spec.first, spec.first_face), spec.second,
                       base(spec.second, spec.second_face), spec.offset, spec.flip);
}

FlagSystem self_dual_piece_g(std::vector<int>* hole_flags) { return strip_piece(5, kPieceG, hole_flags); }

FlagSystem self_dual_piece_h(std::vector<int>* hole_flags) { return strip_piece(5, kPieceH, hole_flags); }

FlagSystem self_dual_map(int genus) {
  if (genus < 0) throw MapError("genus must be non-negative");
  if (genus == 0) return tetrahedron();
  if (genus == 1) return square_torus(5);
  std::vector<int> g_holes, h_holes;
  const FlagSystem g = strip_piece(5, kPieceG, &g_holes);
  FlagSystem current = g;
  int open = g_holes[0];
  if (genus > 2) {
    const FlagSystem h = strip_piece(5, kPieceH, &h_holes);
    for (int i = 0; i < genus - 2; ++i) {
      std::vector<int> renumber;
      current = glue_at_flags(current, open, h, h_holes[0], kSeamOffset, false, nullptr, &renumber);
      open = renumber[h_holes[1]];
    }
  }
  FlagSystem out = glue_at_flags(current, open, g, g_holes[0], kSeamOffset, false);
  const MapSummary s = summary(out);
  for (int v : s.vertex_degrees) {
    if (v != 4 && v != 5) throw MapError("glued self-dual candidate has a vertex of degree " + std::to_string(v));
  }
  for (int f : s.face_sizes) {
    if (f != 4 && f != 5) throw MapError("glued self-dual candidate has a face of size " + std::to_string(f));
  }
  return out;
}

}  // namespace mapsym
