#include "mapsym/tables.hpp"

#include <sstream>

#include "mapsym/analysis.hpp"
#include "mapsym/error.hpp"
#include "mapsym/families.hpp"
#include "mapsym/io.hpp"

namespace mapsym {

const char* to_string(GenusSet s) {
  switch (s) {
    case GenusSet::kNone: return "{}";
    case GenusSet::kAll: return "N";
    case GenusSet::kPositive: return "N\\{0}";
    case GenusSet::kOnlyOne: return "{1}";
  }
  return "?";
}

bool contains(GenusSet s, int genus) {
  switch (s) {
    case GenusSet::kNone: return false;
    case GenusSet::kAll: return true;
    case GenusSet::kPositive: return genus > 0;
    case GenusSet::kOnlyOne: return genus == 1;
  }
  return false;
}

const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::kConfirmed: return "confirmed";
    case CellStatus::kCorpusGap: return "corpus gap";
    case CellStatus::kContradiction: return "CONTRADICTION";
    case CellStatus::kConsistent: return "consistent";
  }
  return "?";
}

std::vector<CorpusMap> table_corpus(int genus_cap) {
  if (genus_cap < 0 || genus_cap > 3) throw MapError("genus cap must be between 0 and 3");
  std::vector<CorpusMap> base;
  for (const auto& name : platonic_names()) base.push_back({name, 0, platonic(name)});
  if (genus_cap >= 1) {
    base.push_back({"square-torus(5)", 1, square_torus(5)});
    base.push_back({"hex-torus(3,3)", 1, hex_torus(3, 3)});
    base.push_back({"triangle-torus(3,3)", 1, triangle_torus(3, 3)});
  }
  for (int g = 2; g <= genus_cap; ++g) {
    base.push_back({"H" + std::to_string(g), g, h_family(g)});
    base.push_back({"selfdual(" + std::to_string(g) + ")", g, self_dual_map(g)});
  }
  std::vector<CorpusMap> out;
  for (const auto& entry : base) {
    out.push_back(entry);
    const FlagSystem d = dual(entry.map);
    bool present = false;
    for (const auto& other : base) present = present || are_isomorphic(d, other.map);
    if (!present) out.push_back({"dual(" + entry.name + ")", entry.genus, d});
  }
  return out;
}

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows{
      {"Identity", "identity", GenusSet::kNone}, {"Ambo", "ambo", GenusSet::kAll},
      {"Truncate", "truncate", GenusSet::kPositive}, {"Expand", "expand", GenusSet::kAll},
      {"Chamfer", "chamfer", GenusSet::kOnlyOne}, {"Loft", "loft", GenusSet::kNone},
      {"O_6a", "o6a", GenusSet::kNone}, {"O_6b", "o6b", GenusSet::kAll},
      {"Bevel", "bevel", GenusSet::kAll}, {"O_6d", "o6d", GenusSet::kNone},
      {"O_6e", "o6e", GenusSet::kPositive}, {"Quinto", "quinto", GenusSet::kNone},
  };
  return rows;
}

TableReport verify_tables(int genus_cap, int jobs) {
  const auto corpus = table_corpus(genus_cap);
  TableReport report;
  for (const TableRow& row : table_rows()) {
    const OperationPatch patch = fixture_patch(row.fixture);
    TableResult result{row, inflation_factor(patch), {}};
    for (int g = 0; g <= genus_cap; ++g) {
      TableCell cell;
      cell.genus = g;
      for (const auto& entry : corpus) {
        if (entry.genus != g) continue;
        const IncreaseReport r = increases_symmetry(patch, entry.map, jobs);
        if (r.increased) {
          cell.observed = true;
          cell.witness = entry.name;
          cell.ratio = r.ratio.str();
          cell.witness_polyhedral = r.map_polyhedral;
          break;
        }
      }
      const bool expected = contains(row.expected, g);
      if (expected) {
        cell.status = cell.observed ? CellStatus::kConfirmed : CellStatus::kCorpusGap;
      } else {
        cell.status = cell.observed ? CellStatus::kContradiction : CellStatus::kConsistent;
      }
      report.contradiction = report.contradiction || cell.status == CellStatus::kContradiction;
      result.cells.push_back(cell);
    }
    report.rows.push_back(std::move(result));
  }
  return report;
}

std::string format_table_report(const TableReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) {
    out << row.row.name << " (inflation " << row.inflation_factor << ", expected " << to_string(row.row.expected)
        << ")\n";
    for (const auto& cell : row.cells) {
      out << "  genus " << cell.genus << ": " << to_string(cell.status);
      if (cell.observed) {
        out << " [" << cell.witness << ", ratio " << cell.ratio;
        if (!cell.witness_polyhedral) out << ", fails face-intersection";
        out << "]";
      }
      out << '\n';
    }
  }
  out << (report.contradiction ? "result: contradiction with the tables\n" : "result: no contradiction\n");
  return out.str();
}

}  // namespace mapsym
