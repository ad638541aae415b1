#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rsurf/cone.hpp"

namespace rsurf {

struct TableRow {
  std::string face;
  std::string gamma_l;
  std::string n_omega;
  std::string pi1;  // empty for k = 5
  std::string area;
  bool operator==(const TableRow&) const = default;
};

struct Table {
  int k = 0;
  std::vector<TableRow> rows;
};

// Area conditions of a face, e.g. "λ<1; c_1=c_2>c_3=c_4=c_5" or "monotone".
std::string face_condition(const FaceLabel& face);

// One row per face of P_k (2 <= k <= 5), computed from a deterministic
// sample of each face.
Table regenerate_table(int k);

std::string render_markdown(const Table& t);
std::string render_plain(const Table& t);

// Reads the '|' rows of a markdown table; lines starting with '>' are notes.
Table parse_markdown_table(int k, std::string_view text);

// Checked-in reference tables (data/golden/table_k<k>.md).
std::string_view golden_markdown(int k);

struct TableMismatch {
  std::string face;
  std::string column;
  std::string expected;
  std::string actual;
  bool whitelisted = false;
};

// Cell-wise comparison against the golden table. The single whitelisted cell
// is the Γ_L entry of row MC for k = 5, accepted only when the computed
// type's positive-root count equals 20 - N.
std::vector<TableMismatch> compare_with_golden(const Table& t);
bool matches_golden(const Table& t);

}  // namespace rsurf
