#include "a2cells/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace a2cells {

using json = nlohmann::ordered_json;

namespace {

std::string key_to_label_word(const CoxeterSystem& sys, const Key& k) {
  return word_to_string(sys, word_of_key(k));
}

json stub_json(const W2Map& map, int i) {
  const Stub& st = map.stubs()[i];
  json out;
  out["word"] = element_to_string(st.element);
  out["side"] = st.side == Side::left ? "left" : "right";
  out["cf"] = cf_to_string(map.system(), st.cf);
  out["simple_class"] = st.class_id_simple;
  out["slide_class"] = st.class_id_slide;
  return out;
}

json members_json(const W2Map& map, const std::vector<Key>& keys) {
  json out = json::array();
  for (const Key& k : keys) out.push_back(key_to_label_word(map.system(), k));
  return out;
}

json tables_json(const W2Map& map) {
  json t;
  auto classes = map.simple_classes();
  json nmat = json::array(), nvec = json::array();
  for (const auto& ci : classes) {
    json row = json::array();
    for (const auto& cj : classes) row.push_back(map.zero_cell(ci.front(), cj.front()).size());
    nmat.push_back(row);
    nvec.push_back(ci.size());
  }
  t["N"] = nmat;
  t["n"] = nvec;
  json sizes;
  json ones = json::array();
  for (const auto& cell : map.right_cells()) ones.push_back(cell.size());
  sizes["one_cells"] = ones;
  json twos = json::array();
  for (const auto& cell : map.two_sided_partition().cells) twos.push_back(cell.size());
  sizes["two_cells"] = twos;
  sizes["total"] = map.size();
  t["sizes"] = sizes;
  return t;
}

json full_report(const W2Map& map) {
  json out;
  out["system"] = map.system().name();
  json stubs = json::array();
  for (int i = 0; i < map.stub_count(); ++i) stubs.push_back(stub_json(map, i));
  out["stubs"] = stubs;
  json cells = json::array();
  for (int i = 0; i < map.stub_count(); ++i) {
    json c;
    c["stub"] = element_to_string(map.stubs()[i].element);
    c["members"] = members_json(map, map.right_cells()[i]);
    cells.push_back(c);
  }
  out["right_cells"] = cells;
  json zeros = json::array();
  for (int x = 0; x < map.stub_count(); ++x)
    for (int y = 0; y < map.stub_count(); ++y) {
      json z;
      z["x"] = element_to_string(map.stubs()[x].element);
      z["y"] = element_to_string(map.stubs()[y].element);
      z["members"] = members_json(map, map.zero_cell(x, y));
      zeros.push_back(z);
    }
  out["zero_cells"] = zeros;
  json twos = json::array();
  auto two = map.two_sided_partition();
  for (size_t c = 0; c < two.cells.size(); ++c) {
    json t;
    t["class"] = c;
    t["size"] = two.cells[c].size();
    twos.push_back(t);
  }
  out["two_sided"] = twos;
  out["tables"] = tables_json(map);
  return out;
}

}  // namespace

std::string full_report_json(const W2Map& map) { return full_report(map).dump(2) + "\n"; }

std::string stubs_report_json(const W2Map& map) {
  json out;
  out["system"] = map.system().name();
  out["w2_empty"] = map.stub_count() == 0;
  json stubs = json::array();
  for (int i = 0; i < map.stub_count(); ++i) stubs.push_back(stub_json(map, i));
  out["stubs"] = stubs;
  return out.dump(2) + "\n";
}

std::string stubs_report_table(const W2Map& map) {
  std::ostringstream out;
  out << "system: " << map.system().name() << "\n";
  if (map.stub_count() == 0) {
    out << "W_2 empty: 0 stubs\n";
    return out.str();
  }
  out << map.stub_count() << " left stubs (word | layers | simple-class | slide-class)\n";
  for (int i = 0; i < map.stub_count(); ++i) {
    const Stub& st = map.stubs()[i];
    out << "  " << element_to_string(st.element) << " | " << cf_to_string(map.system(), st.cf) << " | "
        << st.class_id_simple << " | " << st.class_id_slide << "\n";
  }
  return out.str();
}

std::string cells_report_json(const W2Map& map) {
  json out;
  out["system"] = map.system().name();
  out["w2_empty"] = map.stub_count() == 0;
  out["total"] = map.size();
  json cells = json::array();
  for (int i = 0; i < map.stub_count(); ++i) {
    json c;
    c["stub"] = element_to_string(map.stubs()[i].element);
    c["members"] = members_json(map, map.right_cells()[i]);
    cells.push_back(c);
  }
  out["right_cells"] = cells;
  json twos = json::array();
  auto two = map.two_sided_partition();
  for (size_t c = 0; c < two.cells.size(); ++c) {
    json t;
    t["class"] = c;
    t["size"] = two.cells[c].size();
    twos.push_back(t);
  }
  out["two_sided"] = twos;
  return out.dump(2) + "\n";
}

std::string cells_report_table(const W2Map& map) {
  std::ostringstream out;
  out << "system: " << map.system().name() << "\n";
  if (map.stub_count() == 0) {
    out << "W_2 empty\n";
    return out.str();
  }
  out << "|W_2| = " << map.size() << ", " << map.stub_count() << " right cells\n";
  for (int i = 0; i < map.stub_count(); ++i) {
    out << "R(" << element_to_string(map.stubs()[i].element) << ") [" << map.right_cells()[i].size() << "]:";
    for (const Key& k : map.right_cells()[i]) out << " " << key_to_label_word(map.system(), k);
    out << "\n";
  }
  auto two = map.two_sided_partition();
  out << two.cells.size() << " two-sided cell(s), sizes:";
  for (const auto& c : two.cells) out << " " << c.size();
  out << "\n";
  return out.str();
}

std::string zero_cell_report_json(const W2Map& map, int xi, int yi) {
  json out;
  out["system"] = map.system().name();
  out["x"] = element_to_string(map.stubs()[xi].element);
  out["y"] = element_to_string(map.stubs()[yi].element);
  out["members"] = members_json(map, map.zero_cell(xi, yi));
  return out.dump(2) + "\n";
}

std::string zero_cell_report_table(const W2Map& map, int xi, int yi) {
  std::ostringstream out;
  auto members = map.zero_cell(xi, yi);
  out << "I(" << element_to_string(map.stubs()[xi].element) << ", " << element_to_string(map.stubs()[yi].element)
      << ") [" << members.size() << "]:";
  for (const Key& k : members) out << " " << key_to_label_word(map.system(), k);
  out << "\n";
  return out.str();
}

namespace {

struct SizeRows {
  json rows = json::array();
  bool all_match = true;

  void add(const std::string& what, long long enumerated, long long expected) {
    json r;
    r["row"] = what;
    r["enumerated"] = enumerated;
    r["closed_form"] = expected;
    r["verdict"] = enumerated == expected ? "MATCH" : "MISMATCH";
    all_match = all_match && enumerated == expected;
    rows.push_back(r);
  }
};

SizeRows size_rows(const W2Map& map) {
  SizeRows out;
  ClosedForms forms = closed_forms(map.system());
  out.add("stub count", map.stub_count(), forms.stub_count);
  auto classes = map.simple_classes();
  for (size_t i = 0; i < forms.simple_classes.size(); ++i) {
    const auto& [word, size] = forms.simple_classes[i];
    int stub = map.stub_index(canonical_key(parse_element(map.system(), word)));
    if (stub < 0) {
      out.add("class of " + word, -1, size);
      continue;
    }
    int cls = map.stubs()[stub].class_id_simple;
    out.add("class size at " + word, static_cast<long long>(classes[cls].size()), size);
    out.add("1-cell size at " + word, static_cast<long long>(map.right_cells()[stub].size()),
            forms.one_cell_sizes[i]);
    for (size_t j = 0; j < forms.simple_classes.size(); ++j) {
      int stub_j = map.stub_index(canonical_key(parse_element(map.system(), forms.simple_classes[j].first)));
      out.add("N(" + word + "; " + forms.simple_classes[j].first + ")",
              static_cast<long long>(map.zero_cell(stub, stub_j).size()), forms.zero_cell_sizes[i][j]);
    }
  }
  std::vector<long long> two_sizes;
  for (const auto& cell : map.two_sided_partition().cells) two_sizes.push_back(cell.size());
  std::sort(two_sizes.begin(), two_sizes.end());
  auto expected_two = forms.two_sided_sizes;
  std::sort(expected_two.begin(), expected_two.end());
  out.add("2-cell count", static_cast<long long>(two_sizes.size()), static_cast<long long>(expected_two.size()));
  for (size_t i = 0; i < two_sizes.size() && i < expected_two.size(); ++i)
    out.add("2-cell size #" + std::to_string(i), two_sizes[i], expected_two[i]);
  out.add("|W_2|", static_cast<long long>(map.size()), forms.total());
  return out;
}

}  // namespace

std::string sizes_report_json(const W2Map& map) {
  json out;
  out["system"] = map.system().name();
  SizeRows rows = size_rows(map);
  out["rows"] = rows.rows;
  out["all_match"] = rows.all_match;
  return out.dump(2) + "\n";
}

std::string sizes_report_table(const W2Map& map) {
  std::ostringstream out;
  out << "system: " << map.system().name() << "\n";
  SizeRows rows = size_rows(map);
  for (const auto& r : rows.rows)
    out << "  " << std::string(r["row"]) << ": " << r["enumerated"].dump() << " vs " << r["closed_form"].dump()
        << " " << std::string(r["verdict"]) << "\n";
  out << (rows.all_match ? "all rows MATCH" : "MISMATCH present") << "\n";
  return out.str();
}

std::string oracle_report_json(const KLOracle& oracle) {
  json out;
  json elements = json::array();
  for (int i = 0; i < oracle.size(); ++i) elements.push_back(element_to_string(oracle.element(i)));
  out["elements"] = elements;
  json a = json::array();
  for (int i = 0; i < oracle.size(); ++i) a.push_back(oracle.a_value(i));
  out["a"] = a;
  OracleCells cells = oracle.cells_from_definition();
  json c;
  auto emit = [](const std::vector<std::vector<int>>& part) {
    json arr = json::array();
    for (const auto& cell : part) arr.push_back(cell);
    return arr;
  };
  c["left"] = emit(cells.left);
  c["right"] = emit(cells.right);
  c["two_sided"] = emit(cells.two_sided);
  out["cells"] = c;
  return out.dump(2) + "\n";
}

}  // namespace a2cells
