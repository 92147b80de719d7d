#pragma once

#include <string>

#include "a2cells/kl.hpp"
#include "a2cells/stubs.hpp"
#include "a2cells/tables.hpp"

namespace a2cells {

// Machine-readable reports. JSON text is deterministic: fixed key order,
// member lists sorted by (length, canonical word).

// { system, stubs:[{word, side, simple_class, slide_class}],
//   right_cells:[{stub, members:[...]}], zero_cells:[{x, y, members}],
//   two_sided:[{class, size}], tables:{N:[[..]], n:[..], sizes:{...}} }
std::string full_report_json(const W2Map& map);

std::string stubs_report_json(const W2Map& map);
std::string stubs_report_table(const W2Map& map);

std::string cells_report_json(const W2Map& map);
std::string cells_report_table(const W2Map& map);

std::string zero_cell_report_json(const W2Map& map, int xi, int yi);
std::string zero_cell_report_table(const W2Map& map, int xi, int yi);

// Enumerated against closed-form sizes with a MATCH/MISMATCH verdict per row.
std::string sizes_report_json(const W2Map& map);
std::string sizes_report_table(const W2Map& map);

// Oracle dump: {elements:[word...], a:[int...], cells:{left:[[i...]...],
// right:..., two_sided:...}}.
std::string oracle_report_json(const KLOracle& oracle);

}  // namespace a2cells
