#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mapsym/flag_system.hpp"
#include "mapsym/patch.hpp"
#include "mapsym/rotation.hpp"

namespace mapsym {

enum class Format { kRot, kFlg, kLsp };

const char* to_string(Format f);
std::optional<Format> parse_format(const std::string& name);

// A parsed input file. Exactly one of `map` and `patch` is set.
struct Document {
  Format format = Format::kRot;
  std::optional<FlagSystem> map;
  std::optional<RawPatch> patch;
};

// All parsers throw ParseError naming the source and the 1-based line.
RotationSystem parse_rot(std::istream& in, const std::string& source);
FlagSystem parse_flg(std::istream& in, const std::string& source);
RawPatch parse_lsp(std::istream& in, const std::string& source);

// Uses a "# format: rot|flg|lsp" header when present, otherwise guesses from
// the layout.
Document parse_document(const std::string& text, const std::string& source);

// "-" reads standard input.
Document read_document(const std::string& path);
FlagSystem read_map(const std::string& path);
OperationPatch read_patch(const std::string& path);

std::string emit_rot(const RotationSystem& r);
std::string emit_flg(const FlagSystem& m);
// Emits the canonical form of the patch.
std::string emit_lsp(const RawPatch& p);
std::string emit_map(const FlagSystem& m, Format f);

// "-" writes standard output.
void write_text(const std::string& path, const std::string& text);

// Files shipped in the fixture directory (compile-time default, overridable
// with the MAPSYM_FIXTURES environment variable).
std::string fixture_dir();
std::string fixture_path(const std::string& file);
OperationPatch fixture_patch(const std::string& name);  // name without .lsp
FlagSystem fixture_map(const std::string& name);        // name without .rot

}  // namespace mapsym
