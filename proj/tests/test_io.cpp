#include <doctest.h>

#include <sstream>

#include "mapsym/analysis.hpp"
#include "mapsym/chambers.hpp"
#include "mapsym/error.hpp"
#include "mapsym/families.hpp"
#include "mapsym/io.hpp"
#include "support/corpus.hpp"

using namespace mapsym;

namespace {

const char* const kMapFixtures[] = {"tetrahedron",     "cube",          "octahedron",       "dodecahedron",
                                    "icosahedron",     "square-torus-5", "hex-torus-3-3",   "triangle-torus-3-3",
                                    "h2",              "h3",            "h4",               "selfdual-piece-g",
                                    "selfdual-piece-h", "selfdual-2",   "selfdual-3"};

int parse_error_line(const std::string& text) {
  try {
    parse_document(text, "input");
  } catch (const ParseError& e) {
    CHECK(e.source() == "input");
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("rot round trip on every map fixture") {
    for (const char* name : kMapFixtures) {
      CAPTURE(name);
      const FlagSystem m = fixture_map(name);
      const std::string text = emit_map(m, Format::kRot);
      const Document doc = parse_document(text, name);
      REQUIRE(doc.map.has_value());
      CHECK(doc.format == Format::kRot);
      CHECK(*doc.map == m);
      CHECK(emit_map(*doc.map, Format::kRot) == text);
    }
  }

  TEST_CASE("flg round trip is exact") {
    for (const auto& [name, m] : corpus::maps()) {
      CAPTURE(name);
      const Document doc = parse_document(emit_flg(m), name);
      REQUIRE(doc.map.has_value());
      CHECK(doc.format == Format::kFlg);
      CHECK(*doc.map == m);
    }
  }

  TEST_CASE("colored flag systems keep the flag") {
    const FlagSystem c = barycentric(platonic("cube")).flags();
    REQUIRE(c.colored());
    const std::string text = emit_flg(c);
    CHECK(text.find("# colored: true") != std::string::npos);
    CHECK(parse_document(text, "c").map->colored());
  }

  TEST_CASE("lsp round trip on every patch fixture") {
    for (const auto& name : corpus::patch_names()) {
      CAPTURE(name);
      const OperationPatch p = corpus::patch(name);
      const std::string text = emit_lsp(p.raw());
      const Document doc = parse_document(text, name);
      REQUIRE(doc.patch.has_value());
      CHECK(doc.format == Format::kLsp);
      CHECK(emit_lsp(*doc.patch) == text);
      const OperationPatch q = make_patch(*doc.patch);
      CHECK(patch_isomorphism(p, q).has_value());
    }
  }

  TEST_CASE("shipped fixtures match the generators") {
    CHECK(are_isomorphic(fixture_map("tetrahedron"), platonic("tetrahedron")));
    CHECK(are_isomorphic(fixture_map("square-torus-5"), square_torus(5)));
    CHECK(are_isomorphic(fixture_map("h3"), h_family(3)));
    CHECK(are_isomorphic(fixture_map("selfdual-3"), self_dual_map(3)));
  }

  TEST_CASE("format detection without a header") {
    const Document rot = parse_document("4\n2 4 3\n1 3 4\n1 4 2\n1 2 3\n", "t");
    CHECK(rot.format == Format::kRot);
    CHECK(are_isomorphic(*rot.map, platonic("tetrahedron")));

    std::string flg = emit_flg(platonic("tetrahedron"));
    flg = flg.substr(flg.find('\n') + 1);
    CHECK(parse_document(flg, "t").format == Format::kFlg);

    std::string lsp = emit_lsp(corpus::patch("ambo").raw());
    lsp = lsp.substr(lsp.find('\n') + 1);
    CHECK(parse_document(lsp, "t").format == Format::kLsp);
  }

  TEST_CASE("repeated neighbours with explicit dart indices") {
    // one vertex, two loops: a torus with one square face
    const Document doc = parse_document("# format: rot\n1\n1/3 1/4 1/1 1/2\n", "loops");
    const MapSummary s = summary(*doc.map);
    CHECK(s.vertex_count == 1);
    CHECK(s.edge_count == 2);
    CHECK(s.face_count == 1);
    CHECK(s.genus == 1);
  }

  TEST_CASE("parse errors carry the line number") {
    CHECK(parse_error_line("# format: rot\n4\n2 4 3\n1 3 x\n1 4 2\n1 2 3\n") == 4);
    CHECK(parse_error_line("# format: rot\n4\n2 4 3\n1 3 4\n1 4 9\n1 2 3\n") == 5);
    CHECK(parse_error_line("# format: rot\n4\n2 4 3\n1 3 4\n") == 4);
    CHECK(parse_error_line("# format: bogus\n1\n") == 1);
    CHECK(parse_error_line("# format: lsp\n4\n2 0 7 2\n2 3\n4 3 1\n1 2 4\n3 2\nouter: 4 3 1 2\nspecial: 4 2 1\n") == 3);
    CHECK(parse_error_line("# format: flg\n4\n1 0 3 2\n1 0 3 2\n") == 4);
  }

  TEST_CASE("maps and patches are kept apart") {
    CHECK_THROWS_AS(read_map(fixture_path("ambo.lsp")), ParseError);
    CHECK_THROWS_AS(read_patch(fixture_path("cube.rot")), ParseError);
    CHECK_THROWS_AS(read_map(fixture_path("no-such-file.rot")), ParseError);
  }

  TEST_CASE("format names") {
    CHECK(parse_format("rot") == Format::kRot);
    CHECK(parse_format("flg") == Format::kFlg);
    CHECK(parse_format("lsp") == Format::kLsp);
    CHECK_FALSE(parse_format("obj").has_value());
    CHECK(std::string(to_string(Format::kFlg)) == "flg");
  }
}
