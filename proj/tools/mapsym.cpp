#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mapsym/analysis.hpp"
#include "mapsym/error.hpp"
#include "mapsym/families.hpp"
#include "mapsym/goldberg.hpp"
#include "mapsym/io.hpp"
#include "mapsym/polyhedral.hpp"
#include "mapsym/tables.hpp"

namespace {

using namespace mapsym;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
  int jobs = 1;
  bool kv = false;
};

// Prints either "human text" or "key=value" depending on --kv.
class Report {
 public:
  explicit Report(bool kv) : kv_(kv) {}

  void field(const std::string& key, const std::string& value, const std::string& human) {
    std::cout << (kv_ ? key + "=" + value : human) << '\n';
  }
  void field(const std::string& key, const std::string& value) { field(key, value, key + " " + value); }

 private:
  bool kv_;
};

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

// Profile like "6^2 4^6 3^12" from a descending list.
std::string profile(const std::vector<int>& sorted) {
  std::ostringstream out;
  for (size_t i = 0; i < sorted.size();) {
    size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out << (i ? " " : "") << sorted[i] << "^" << (j - i);
    i = j;
  }
  return out.str();
}

Format map_format(const std::string& name) {
  const auto f = parse_format(name);
  if (!f || *f == Format::kLsp) throw CLI::ValidationError("--format", "expected rot or flg");
  return *f;
}

void emit_map_to(const FlagSystem& m, const std::string& format, const std::string& out) {
  write_text(out, emit_map(m, map_format(format)));
}

AutMode aut_mode(const std::string& text) {
  const auto mode = parse_aut_mode(text);
  if (!mode) throw CLI::ValidationError("--mode", "unknown mode '" + text + "'");
  return *mode;
}

// Name of a shipped fixture patch isomorphic to p, if any.
std::string fixture_name_of(const OperationPatch& p) {
  std::error_code ec;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(fixture_dir(), ec)) {
    if (entry.path().extension() == ".lsp") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    try {
      const OperationPatch q = read_patch(path.string());
      if (q.chamber_count() == p.chamber_count() && patch_isomorphism(p, q)) return path.stem().string();
    } catch (const MapError&) {
    }
  }
  return "";
}

int cmd_info(const std::string& path, const Options& opt) {
  Report r(opt.kv);
  const Document doc = read_document(path);
  if (doc.patch) {
    const LspValidation v = validate_lsp(*doc.patch);
    if (!v.ok()) {
      for (const auto& viol : v.violations) std::cerr << path << ": " << viol.clause << ": " << viol.witness << '\n';
      return kViolation;
    }
    const OperationPatch& p = *v.patch;
    const std::string name = fixture_name_of(p);
    const std::string k = std::to_string(inflation_factor(p));
    r.field("kind", "patch", "lsp-operation");
    r.field("inflation_factor", k, "inflation factor " + k + (name.empty() ? "" : " (" + name + ")"));
    if (!name.empty() && opt.kv) r.field("name", name);
    r.field("vertices", std::to_string(p.vertex_count()));
    r.field("special_colours",
            join({p.colour(p.special(0)), p.colour(p.special(1)), p.colour(p.special(2))}),
            "colours of v0 v1 v2: " +
                join({p.colour(p.special(0)), p.colour(p.special(1)), p.colour(p.special(2))}));
    r.field("c3", is_c3(p) ? "yes" : "no");
    return kOk;
  }
  const FlagSystem& m = *doc.map;
  const MapSummary s = summary(m);
  r.field("kind", "map", "map");
  r.field("flags", std::to_string(m.size()));
  r.field("vertices", std::to_string(s.vertex_count));
  r.field("edges", std::to_string(s.edge_count));
  r.field("faces", std::to_string(s.face_count));
  r.field("genus", std::to_string(s.genus));
  r.field("face_sizes", profile(s.face_sizes), "face sizes " + profile(s.face_sizes));
  r.field("degrees", profile(s.vertex_degrees));
  const PolyhedralReport poly = is_polyhedral(m);
  r.field("polyhedral", poly.polyhedral ? "yes" : "no");
  return kOk;
}

int cmd_apply(const std::string& patch, const std::string& map, const std::string& format, const std::string& out) {
  const OperationPatch p = read_patch(patch);
  const FlagSystem m = read_map(map);
  emit_map_to(apply(p, m).map, format, out);
  return kOk;
}

int cmd_compose(const std::string& outer, const std::string& inner, const std::string& out) {
  write_text(out, emit_lsp(compose(read_patch(outer), read_patch(inner)).raw()));
  return kOk;
}

int cmd_aut(const std::string& path, const std::string& mode, bool list, const Options& opt) {
  const AutReport a = automorphisms(read_map(path), aut_mode(mode), opt.jobs);
  Report r(opt.kv);
  r.field("mode", to_string(a.mode));
  r.field("group_order", std::to_string(a.group_order), "group order " + std::to_string(a.group_order));
  r.field("orbits", std::to_string(a.orbit_count), "chamber orbits " + std::to_string(a.orbit_count));
  if (list) {
    for (size_t i = 0; i < a.elements.size(); ++i) {
      std::cout << (a.swaps_colours[i] ? "swap " : "keep ") << join(a.elements[i]) << '\n';
    }
  }
  return kOk;
}

int cmd_orbits(const std::string& path, const std::string& mode, const Options& opt) {
  const OrbitPartition o = chamber_orbits(read_map(path), aut_mode(mode), opt.jobs);
  Report r(opt.kv);
  r.field("orbits", std::to_string(o.count), "chamber orbits " + std::to_string(o.count));
  r.field("sizes", join(o.sizes), "orbit sizes " + join(o.sizes));
  r.field("orbit_of", join(o.orbit_of), "orbit of each flag " + join(o.orbit_of));
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b, const std::string& mode, const Options& opt) {
  const Document da = read_document(a), db = read_document(b);
  bool iso = false;
  if (da.patch && db.patch) {
    const OperationPatch pa = make_patch(*da.patch), pb = make_patch(*db.patch);
    iso = pa.chamber_count() == pb.chamber_count() && patch_isomorphism(pa, pb).has_value();
  } else if (da.map && db.map) {
    iso = are_isomorphic(*da.map, *db.map, aut_mode(mode));
  } else {
    std::cerr << "iso: cannot compare a map with a patch\n";
    return kUsage;
  }
  Report(opt.kv).field("isomorphic", iso ? "yes" : "no", iso ? "isomorphic" : "not isomorphic");
  return iso ? kOk : kViolation;
}

int cmd_selfdual(const std::string& path, const Options& opt) {
  const bool sd = is_self_dual(read_map(path));
  Report(opt.kv).field("self_dual", sd ? "yes" : "no", sd ? "self-dual" : "not self-dual");
  return sd ? kOk : kViolation;
}

int cmd_check(const std::string& path, const Options& opt) {
  const PolyhedralReport p = is_polyhedral(read_map(path));
  Report r(opt.kv);
  if (p.polyhedral) {
    r.field("polyhedral", "yes", "polyhedral");
    return kOk;
  }
  r.field("polyhedral", "no", std::string("not polyhedral: ") + to_string(p.failed) + ": " + p.witness);
  if (opt.kv) {
    r.field("condition", to_string(p.failed));
    r.field("witness", p.witness);
  }
  return kViolation;
}

int cmd_validate(const std::string& path, const Options& opt) {
  const Document doc = read_document(path);
  if (!doc.patch) {
    std::cerr << path << ": not an lsp file\n";
    return kUsage;
  }
  const LspValidation v = validate_lsp(*doc.patch);
  Report r(opt.kv);
  if (!v.ok()) {
    r.field("valid", "no", "invalid lsp-operation");
    for (const auto& viol : v.violations) {
      r.field("violation", viol.clause + ": " + viol.witness, "  " + viol.clause + ": " + viol.witness);
    }
    return kViolation;
  }
  const std::string k = std::to_string(inflation_factor(*v.patch));
  r.field("valid", "yes", "valid lsp-operation, inflation factor " + k);
  if (opt.kv) r.field("inflation_factor", k);
  r.field("c3", is_c3(*v.patch) ? "yes" : "no");
  return kOk;
}

int cmd_gc(int l, int m, bool decomposition, const std::string& out, const Options& opt) {
  const GCParams params{l, m};
  check_params(params);
  if (decomposition) {
    const DecompositionCheck d = verify_gc_decomposition(params);
    Report(opt.kv).field("decomposition", d.holds ? "holds" : "fails", d.identity + (d.holds ? ": holds" : ": fails"));
    return d.holds ? kOk : kViolation;
  }
  write_text(out, emit_lsp(gc_patch(params).raw()));
  return kOk;
}

FlagSystem build_family(const std::string& name, int g, int n, int rr, int ss, int genus) {
  if (name == "Hg" || name == "H") return h_family(g);
  if (name == "square-torus") return square_torus(n);
  if (name == "hex-torus") return hex_torus(rr, ss);
  if (name == "triangle-torus") return triangle_torus(rr, ss);
  if (name == "selfdual") return self_dual_map(genus);
  if (name == "selfdual-piece-g") return self_dual_piece_g();
  if (name == "selfdual-piece-h") return self_dual_piece_h();
  return platonic(name);
}

// MAP:FACE
std::pair<std::string, int> map_and_face(const std::string& arg) {
  const auto colon = arg.rfind(':');
  if (colon == std::string::npos || colon + 1 == arg.size()) {
    throw CLI::ValidationError("glue", "expected MAP:FACE, got '" + arg + "'");
  }
  int face = 0;
  try {
    face = std::stoi(arg.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("glue", "face index in '" + arg + "' is not a number");
  }
  return {arg.substr(0, colon), face};
}

int cmd_glue(const std::string& a, const std::string& b, int offset, bool flip, const std::string& format,
             const std::string& out) {
  const auto [path_a, face_a] = map_and_face(a);
  const auto [path_b, face_b] = map_and_face(b);
  GlueSpec spec{read_map(path_a), face_a, read_map(path_b), face_b, offset, flip};
  emit_map_to(glue_along_face(spec), format, out);
  return kOk;
}

int cmd_increase(const std::string& patch, const std::string& map, const Options& opt) {
  const IncreaseReport rep = increases_symmetry(read_patch(patch), read_map(map), opt.jobs);
  Report r(opt.kv);
  const std::string verdict = rep.increased ? "increased" : "not increased";
  r.field("ratio", rep.ratio.str(), "ratio " + rep.ratio.str() + ", " + verdict);
  if (opt.kv) r.field("increased", rep.increased ? "yes" : "no");
  r.field("aut_map", std::to_string(rep.map_group_order), "|Aut(P)| " + std::to_string(rep.map_group_order));
  r.field("aut_result", std::to_string(rep.result_group_order),
          "|Aut(O(P))| " + std::to_string(rep.result_group_order));
  if (rep.certificate) {
    const auto& c = *rep.certificate;
    r.field("certificate", std::to_string(c.chamber) + "->" + std::to_string(c.image),
            "certificate: chamber " + std::to_string(c.chamber) + " maps to chamber " + std::to_string(c.image) +
                " in another class" + (c.crosses_everywhere ? " (every chamber changes class)" : ""));
  }
  if (!rep.map_polyhedral) {
    r.field("map_face_intersection", rep.face_intersection_witness,
            "note: the map fails the face-intersection condition (" + rep.face_intersection_witness + ")");
  }
  return kOk;
}

int cmd_verify_tables(int max_genus, const Options& opt) {
  if (max_genus < 0 || max_genus > 3) throw CLI::ValidationError("--max-genus", "supported range is 0..3");
  const TableReport rep = verify_tables(max_genus, opt.jobs);
  if (opt.kv) {
    for (const auto& row : rep.rows) {
      for (const auto& cell : row.cells) {
        std::cout << row.row.fixture << ".genus" << cell.genus << "=" << to_string(cell.status);
        if (cell.observed) std::cout << "," << cell.witness << "," << cell.ratio;
        std::cout << '\n';
      }
    }
    std::cout << "contradiction=" << (rep.contradiction ? "yes" : "no") << '\n';
  } else {
    std::cout << format_table_report(rep);
  }
  return rep.contradiction ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mapsym: maps on orientable surfaces, lsp-operations and their symmetry"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--jobs", opt.jobs, "worker threads for automorphism searches")->check(CLI::PositiveNumber);
  app.add_flag("--kv", opt.kv, "print key=value lines");

  std::function<int()> run;
  std::string a, b, out = "-", format = "rot", mode = "colour-preserving";

  auto* info = app.add_subcommand("info", "summary of a map or a patch");
  info->add_option("FILE", a)->required();
  info->callback([&] { run = [&] { return cmd_info(a, opt); }; });

  auto* apply_cmd = app.add_subcommand("apply", "apply an lsp-operation to a map");
  apply_cmd->add_option("PATCH", a)->required();
  apply_cmd->add_option("MAP", b)->required();
  apply_cmd->add_option("-o,--output", out);
  apply_cmd->add_option("--format", format, "rot or flg");
  apply_cmd->callback([&] { run = [&] { return cmd_apply(a, b, format, out); }; });

  auto* compose_cmd = app.add_subcommand("compose", "patch of OUTER after INNER");
  compose_cmd->add_option("OUTER", a)->required();
  compose_cmd->add_option("INNER", b)->required();
  compose_cmd->add_option("-o,--output", out);
  compose_cmd->callback([&] { run = [&] { return cmd_compose(a, b, out); }; });

  auto* dual_cmd = app.add_subcommand("dual", "dual map");
  dual_cmd->add_option("MAP", a)->required();
  dual_cmd->add_option("-o,--output", out);
  dual_cmd->add_option("--format", format, "rot or flg");
  dual_cmd->callback([&] { run = [&] { emit_map_to(dual(read_map(a)), format, out); return kOk; }; });

  bool list = false;
  auto* aut = app.add_subcommand("aut", "automorphism group");
  aut->add_option("MAP", a)->required();
  aut->add_option("--mode", mode, "colour-preserving, allow-dual-swap or orientation-preserving");
  aut->add_flag("--elements", list, "list every automorphism as a flag permutation");
  aut->callback([&] { run = [&] { return cmd_aut(a, mode, list, opt); }; });

  auto* orbits = app.add_subcommand("orbits", "chamber orbits");
  orbits->add_option("MAP", a)->required();
  orbits->add_option("--mode", mode);
  orbits->callback([&] { run = [&] { return cmd_orbits(a, mode, opt); }; });

  auto* iso = app.add_subcommand("iso", "isomorphism test for two maps or two patches");
  iso->add_option("A", a)->required();
  iso->add_option("B", b)->required();
  iso->add_option("--mode", mode);
  iso->callback([&] { run = [&] { return cmd_iso(a, b, mode, opt); }; });

  auto* selfdual = app.add_subcommand("selfdual", "is the map isomorphic to its dual");
  selfdual->add_option("MAP", a)->required();
  selfdual->callback([&] { run = [&] { return cmd_selfdual(a, opt); }; });

  auto* check = app.add_subcommand("check", "polyhedrality check");
  check->add_option("MAP", a)->required();
  check->callback([&] { run = [&] { return cmd_check(a, opt); }; });

  auto* validate = app.add_subcommand("validate", "check a patch against the lsp conditions");
  validate->add_option("PATCH", a)->required();
  validate->callback([&] { run = [&] { return cmd_validate(a, opt); }; });

  int l = 1, m = 0;
  bool decomposition = false;
  auto* gc = app.add_subcommand("gc", "Goldberg-Coxeter patch GC(L,M)");
  gc->add_option("L", l)->required();
  gc->add_option("M", m)->required();
  gc->add_option("-o,--output", out);
  gc->add_flag("--decomposition", decomposition, "check the decomposition identity instead of emitting");
  gc->callback([&] { run = [&] { return cmd_gc(l, m, decomposition, out, opt); }; });

  int g = 2, n = 5, rr = 3, ss = 3, genus = 2;
  auto* family = app.add_subcommand("family", "generate a map");
  family->add_option("NAME", a,
                     "tetrahedron, cube, octahedron, dodecahedron, icosahedron, Hg, square-torus, hex-torus, "
                     "triangle-torus, selfdual, selfdual-piece-g, selfdual-piece-h")
      ->required();
  family->add_option("--g", g, "genus of H_g");
  family->add_option("--n", n, "square torus size");
  family->add_option("--r", rr);
  family->add_option("--s", ss);
  family->add_option("--genus", genus, "genus of the self-dual map");
  family->add_option("-o,--output", out);
  family->add_option("--format", format, "rot or flg");
  family->callback([&] {
    run = [&] {
      emit_map_to(build_family(a, g, n, rr, ss, genus), format, out);
      return kOk;
    };
  });

  int offset = 0;
  bool flip = false;
  auto* glue = app.add_subcommand("glue", "glue two maps along a face each");
  glue->add_option("FIRST", a, "MAP:FACE")->required();
  glue->add_option("SECOND", b, "MAP:FACE")->required();
  glue->add_option("--offset", offset)->required();
  glue->add_flag("--flip", flip);
  glue->add_option("-o,--output", out);
  glue->add_option("--format", format, "rot or flg");
  glue->callback([&] { run = [&] { return cmd_glue(a, b, offset, flip, format, out); }; });

  auto* increase = app.add_subcommand("increase", "does the operation increase the symmetry of the map");
  increase->add_option("PATCH", a)->required();
  increase->add_option("MAP", b)->required();
  increase->callback([&] { run = [&] { return cmd_increase(a, b, opt); }; });

  int max_genus = 3;
  auto* tables = app.add_subcommand("verify-tables", "check the operation tables on the witness corpus");
  tables->add_option("--max-genus", max_genus);
  tables->callback([&] { run = [&] { return cmd_verify_tables(max_genus, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const MapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
