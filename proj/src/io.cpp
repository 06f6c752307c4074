#include "mapsym/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mapsym/error.hpp"

namespace mapsym {

namespace {

struct Line {
  int number = 0;
  std::string text;
};

struct Lines {
  std::vector<Line> data;
  std::vector<std::string> comments;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Lines split_lines(std::istream& in) {
  Lines out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string t = trim(raw);
    if (t.empty()) continue;
    if (t[0] == '#') {
      out.comments.push_back(trim(t.substr(1)));
    } else {
      out.data.push_back({number, t});
    }
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& token, const std::string& source, int line) {
  try {
    size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(source, line, "expected an integer, got '" + token + "'");
  }
}

class Cursor {
 public:
  Cursor(const Lines& lines, std::string source) : lines_(lines), source_(std::move(source)) {}

  const Line& next(const std::string& what) {
    if (pos_ >= lines_.data.size()) {
      const int last = lines_.data.empty() ? 1 : lines_.data.back().number;
      throw ParseError(source_, last, "unexpected end of input, expected " + what);
    }
    return lines_.data[pos_++];
  }
  bool done() const { return pos_ >= lines_.data.size(); }
  const Line& peek() const { return lines_.data[pos_]; }
  const std::string& source() const { return source_; }

 private:
  const Lines& lines_;
  std::string source_;
  size_t pos_ = 0;
};

// Rotation lines with 1-indexed neighbours, "v/k" naming the k-th occurrence
// of this vertex in v's list.
RotationSystem read_rotation_lines(Cursor& cur, int n) {
  std::vector<std::vector<std::pair<int, int>>> entries(n);
  std::vector<int> line_of(n);
  for (int v = 0; v < n; ++v) {
    const Line& line = cur.next("rotation list of vertex " + std::to_string(v + 1));
    line_of[v] = line.number;
    std::map<int, int> seen;
    for (const std::string& tok : tokens(line.text)) {
      const auto slash = tok.find('/');
      const int w = parse_int(tok.substr(0, slash), cur.source(), line.number) - 1;
      if (w < 0 || w >= n) {
        throw ParseError(cur.source(), line.number, "neighbour " + tok + " out of range 1.." + std::to_string(n));
      }
      const int occurrence = ++seen[w];
      const int k = slash == std::string::npos ? occurrence
                                               : parse_int(tok.substr(slash + 1), cur.source(), line.number);
      if (k < 1) throw ParseError(cur.source(), line.number, "dart index in '" + tok + "' must be >= 1");
      entries[v].emplace_back(w, k);
    }
    if (entries[v].empty()) throw ParseError(cur.source(), line.number, "vertex has no neighbours");
  }
  RotationSystem r;
  r.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    for (auto [w, k] : entries[v]) {
      int count = 0, slot = -1;
      for (int q = 0; q < static_cast<int>(entries[w].size()); ++q) {
        if (entries[w][q].first == v && ++count == k) {
          slot = q;
          break;
        }
      }
      if (slot < 0) {
        throw ParseError(cur.source(), line_of[v],
                         "vertex " + std::to_string(w + 1) + " lists vertex " + std::to_string(v + 1) +
                             " fewer than " + std::to_string(k) + " times");
      }
      r.rotation[v].push_back({w, slot});
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < r.degree(v); ++p) {
      const Dart d = r.rotation[v][p];
      const Dart back = r.rotation[d.vertex][d.slot];
      if (back.vertex != v || back.slot != p || (d.vertex == v && d.slot == p)) {
        throw ParseError(cur.source(), line_of[v],
                         "dart " + std::to_string(p + 1) + " to vertex " + std::to_string(d.vertex + 1) +
                             " has no matching partner");
      }
    }
  }
  return r;
}

int read_count(Cursor& cur, const std::string& what) {
  const Line& line = cur.next(what);
  const auto t = tokens(line.text);
  if (t.size() != 1) throw ParseError(cur.source(), line.number, "expected " + what);
  const int n = parse_int(t[0], cur.source(), line.number);
  if (n <= 0) throw ParseError(cur.source(), line.number, what + " must be positive");
  return n;
}

void expect_done(const Cursor& cur) {
  if (!cur.done()) throw ParseError(cur.source(), cur.peek().number, "unexpected trailing data");
}

RotationSystem parse_rot_lines(const Lines& lines, const std::string& source) {
  Cursor cur(lines, source);
  const int n = read_count(cur, "vertex count");
  RotationSystem r = read_rotation_lines(cur, n);
  expect_done(cur);
  return r;
}

FlagSystem parse_flg_lines(const Lines& lines, const std::string& source) {
  Cursor cur(lines, source);
  const int n = read_count(cur, "flag count");
  std::array<std::vector<int>, 3> s;
  int first_line = 0;
  for (int i = 0; i < 3; ++i) {
    const Line& line = cur.next("sigma" + std::to_string(i));
    if (i == 0) first_line = line.number;
    for (const auto& tok : tokens(line.text)) s[i].push_back(parse_int(tok, source, line.number));
    if (static_cast<int>(s[i].size()) != n) {
      throw ParseError(source, line.number,
                       "sigma" + std::to_string(i) + " has " + std::to_string(s[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
  }
  expect_done(cur);
  bool colored = false;
  for (const auto& c : lines.comments) colored = colored || c == "colored: true";
  try {
    return FlagSystem(std::move(s), colored);
  } catch (const MapError& e) {
    throw ParseError(source, first_line, e.what());
  }
}

RawPatch parse_lsp_lines(const Lines& lines, const std::string& source) {
  Cursor cur(lines, source);
  const int n = read_count(cur, "vertex count");
  RawPatch p;
  {
    const Line& line = cur.next("colour line");
    for (const auto& tok : tokens(line.text)) p.colour.push_back(parse_int(tok, source, line.number));
    if (static_cast<int>(p.colour.size()) != n) throw ParseError(source, line.number, "expected " + std::to_string(n) + " colours");
    for (int c : p.colour) {
      if (c < 0 || c > 2) throw ParseError(source, line.number, "colours must be 0, 1 or 2");
    }
  }
  p.embedding = read_rotation_lines(cur, n);
  auto keyed = [&](const std::string& key) {
    const Line& line = cur.next("'" + key + ":' line");
    if (line.text.rfind(key + ":", 0) != 0) throw ParseError(source, line.number, "expected '" + key + ":'");
    std::vector<int> values;
    for (const auto& tok : tokens(line.text.substr(key.size() + 1))) {
      const int v = parse_int(tok, source, line.number) - 1;
      if (v < 0 || v >= n) throw ParseError(source, line.number, "vertex " + tok + " out of range");
      values.push_back(v);
    }
    return std::make_pair(values, line.number);
  };
  p.outer = keyed("outer").first;
  auto [special, line] = keyed("special");
  if (special.size() != 3) throw ParseError(source, line, "expected three special vertices");
  p.special = {special[0], special[1], special[2]};
  expect_done(cur);
  return p;
}

std::string rotation_lines(const RotationSystem& r) {
  std::ostringstream out;
  for (int v = 0; v < r.vertex_count(); ++v) {
    for (int p = 0; p < r.degree(v); ++p) {
      const Dart d = r.rotation[v][p];
      int k = 0, total = 0;
      for (int q = 0; q < r.degree(d.vertex); ++q) {
        if (r.rotation[d.vertex][q].vertex == v) {
          ++total;
          if (q <= d.slot) ++k;
        }
      }
      out << (p ? " " : "") << d.vertex + 1;
      if (total > 1) out << '/' << k;
    }
    out << '\n';
  }
  return out.str();
}

std::string read_all(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    buf << in.rdbuf();
  }
  return buf.str();
}

}  // namespace

const char* to_string(Format f) {
  switch (f) {
    case Format::kRot: return "rot";
    case Format::kFlg: return "flg";
    case Format::kLsp: return "lsp";
  }
  return "?";
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "rot") return Format::kRot;
  if (name == "flg") return Format::kFlg;
  if (name == "lsp") return Format::kLsp;
  return std::nullopt;
}

RotationSystem parse_rot(std::istream& in, const std::string& source) { return parse_rot_lines(split_lines(in), source); }

FlagSystem parse_flg(std::istream& in, const std::string& source) { return parse_flg_lines(split_lines(in), source); }

RawPatch parse_lsp(std::istream& in, const std::string& source) { return parse_lsp_lines(split_lines(in), source); }

Document parse_document(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  const Lines lines = split_lines(in);
  std::optional<Format> format;
  for (const auto& c : lines.comments) {
    if (c.rfind("format:", 0) == 0) {
      format = parse_format(trim(c.substr(7)));
      if (!format) throw ParseError(source, 1, "unknown format header '" + c + "'");
      break;
    }
  }
  if (!format) {
    format = Format::kRot;
    for (const auto& l : lines.data) {
      if (l.text.rfind("outer:", 0) == 0) format = Format::kLsp;
    }
    if (*format == Format::kRot && lines.data.size() == 4) {
      const auto first = tokens(lines.data[0].text);
      if (first.size() == 1 && tokens(lines.data[1].text).size() == static_cast<size_t>(std::atoi(first[0].c_str()))) {
        format = Format::kFlg;
      }
    }
  }
  Document doc;
  doc.format = *format;
  switch (*format) {
    case Format::kRot: {
      const RotationSystem r = parse_rot_lines(lines, source);
      try {
        doc.map = from_rotation_system(r);
      } catch (const MapError& e) {
        throw ParseError(source, lines.data.empty() ? 1 : lines.data[0].number, e.what());
      }
      break;
    }
    case Format::kFlg: doc.map = parse_flg_lines(lines, source); break;
    case Format::kLsp: doc.patch = parse_lsp_lines(lines, source); break;
  }
  return doc;
}

Document read_document(const std::string& path) {
  return parse_document(read_all(path), path == "-" ? "<stdin>" : path);
}

FlagSystem read_map(const std::string& path) {
  Document doc = read_document(path);
  if (!doc.map) throw ParseError(path, 1, "expected a map (.rot or .flg), found a patch");
  return std::move(*doc.map);
}

OperationPatch read_patch(const std::string& path) {
  Document doc = read_document(path);
  if (!doc.patch) throw ParseError(path, 1, "expected a patch (.lsp), found a map");
  return make_patch(*doc.patch);
}

std::string emit_rot(const RotationSystem& r) {
  return "# format: rot\n" + std::to_string(r.vertex_count()) + "\n" + rotation_lines(r);
}

std::string emit_flg(const FlagSystem& m) {
  std::ostringstream out;
  out << "# format: flg\n";
  if (m.colored()) out << "# colored: true\n";
  out << m.size() << '\n';
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < m.size(); ++x) out << (x ? " " : "") << m.sigma(i, x);
    out << '\n';
  }
  return out.str();
}

std::string emit_lsp(const RawPatch& raw) {
  const RawPatch p = canonical_form(raw);
  std::ostringstream out;
  out << "# format: lsp\n" << p.colour.size() << '\n';
  for (size_t v = 0; v < p.colour.size(); ++v) out << (v ? " " : "") << p.colour[v];
  out << '\n' << rotation_lines(p.embedding) << "outer:";
  for (int v : p.outer) out << ' ' << v + 1;
  out << "\nspecial: " << p.special[0] + 1 << ' ' << p.special[1] + 1 << ' ' << p.special[2] + 1 << '\n';
  return out.str();
}

std::string emit_map(const FlagSystem& m, Format f) {
  switch (f) {
    case Format::kRot: return emit_rot(to_rotation_system(m));
    case Format::kFlg: return emit_flg(m);
    case Format::kLsp: break;
  }
  throw MapError("a map cannot be written as .lsp");
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw MapError("cannot write " + path);
  out << text;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("MAPSYM_FIXTURES"); env && *env) return env;
  return MAPSYM_FIXTURE_DIR;
}

std::string fixture_path(const std::string& file) { return fixture_dir() + "/" + file; }

OperationPatch fixture_patch(const std::string& name) { return read_patch(fixture_path(name + ".lsp")); }

FlagSystem fixture_map(const std::string& name) { return read_map(fixture_path(name + ".rot")); }

}  // namespace mapsym
