#pragma once

#include <string>
#include <vector>

#include "mapsym/flag_system.hpp"
#include "mapsym/patch.hpp"

namespace mapsym {

// Genera in which an operation can increase symmetry, as listed in the
// operation tables.
enum class GenusSet { kNone, kAll, kPositive, kOnlyOne };

const char* to_string(GenusSet s);
bool contains(GenusSet s, int genus);

struct CorpusMap {
  std::string name;
  int genus = 0;
  FlagSystem map;
};

// Witness maps per genus up to `genus_cap`, closed under duality: the five
// Platonic solids; square, hexagonal and triangular tori; H_g and its dual;
// the glued self-dual maps.
std::vector<CorpusMap> table_corpus(int genus_cap);

struct TableRow {
  std::string name;
  std::string fixture;  // patch file name without .lsp
  GenusSet expected = GenusSet::kNone;
};

const std::vector<TableRow>& table_rows();

enum class CellStatus { kConfirmed, kCorpusGap, kContradiction, kConsistent };

const char* to_string(CellStatus s);

struct TableCell {
  int genus = 0;
  bool observed = false;
  CellStatus status = CellStatus::kConsistent;
  std::string witness;  // map name of the first positive
  std::string ratio;    // ratio on the witness
  bool witness_polyhedral = true;
};

struct TableResult {
  TableRow row;
  int inflation_factor = 0;
  std::vector<TableCell> cells;
};

struct TableReport {
  std::vector<TableResult> rows;
  bool contradiction = false;
};

// Applies every table operation to every corpus map of genus <= genus_cap.
// Patches come from the fixture directory.
TableReport verify_tables(int genus_cap, int jobs = 1);

std::string format_table_report(const TableReport& report);

}  // namespace mapsym
