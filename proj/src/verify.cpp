#include "a2cells/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "a2cells/tables.hpp"

namespace a2cells {

namespace {

struct Checker {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({name, pass, pass ? "" : detail});
  }
};

std::set<Key> key_set(const std::vector<Stub>& stubs) {
  std::set<Key> out;
  for (const auto& s : stubs) out.insert(canonical_key(s.element));
  return out;
}

std::string show_keys(const CoxeterSystem& sys, const std::set<Key>& keys) {
  std::string out;
  for (const Key& k : keys) {
    if (!out.empty()) out += " ";
    out += word_to_string(sys, word_of_key(k));
  }
  return out;
}

// Representative 0-cells: the per-type identity I(x,y) = K with x, y, K given
// as label words.
struct RepZeroCell {
  std::string x, y;
  std::vector<std::string> members;
};

std::vector<RepZeroCell> representative_zero_cell_data(const CoxeterSystem& sys) {
  auto n = sys.rank();
  auto L = [](int i) { return std::to_string(i); };
  switch (sys.type()) {
    case CoxType::A:
      return {{"1,3", "1,3", {"1,3"}}};
    case CoxType::B:
      if (n == 3) return {{"1,3", "1,3", {"1,3"}}};
      return {{"2,4", "2,4", {"2,4", "2,1,2,4"}}};
    case CoxType::Ctilde: {
      // z = 4 5 ... (n-1) n (n-1) ... 5 4 over the n generators.
      std::string z;
      for (int i = 4; i <= n; ++i) z += (z.empty() ? "" : ",") + L(i);
      for (int i = n - 1; i >= 4; --i) z += "," + L(i);
      return {{"2,4", "2,4", {"2,4", "2,1,2,4", "2," + z, "2,1,2," + z}}};
    }
    case CoxType::E:
      return {{"-1,v", "-1,v", {"-1,v"}}, {"1,v", "1,v", {"1,v"}}, {"-1,1", "-1,1", {"-1,1"}}};
    case CoxType::F:
      if (n == 4) return {{"2,4", "2,4", {"2,4"}}};
      return {{"2,4", "2,4", {"2,4", "2,4,3,5,2,4"}}};
    case CoxType::H:
      if (n == 3) return {{"1,3", "1,3", {"1,3"}}};
      return {{"2,4", "2,4", {"2,4", "2,1,2,4"}}};
    default:
      return {};
  }
}

void verify_b4_goldens(Checker& out, const W2Map& map) {
  const CoxeterSystem& sys = map.system();
  // The six stubs.
  std::set<Key> expected_stubs;
  for (const char* w : {"1,3", "2,4", "1,4", "2,1,3", "3,2,4", "1,2,1,3"})
    expected_stubs.insert(canonical_key(parse_element(sys, w)));
  out.check("B4 six stubs", key_set(map.stubs()) == expected_stubs);

  // Stub order of the explicit tables.
  std::vector<std::string> order{"1,2,1,3", "2,1,3", "1,3", "1,4", "2,4", "3,2,4"};
  std::vector<int> ord;
  for (const auto& w : order) ord.push_back(map.stub_index(canonical_key(parse_element(sys, w))));

  // 0-cell size matrix of the example.
  int expected_sizes[6][6] = {{2, 2, 2, 2, 1, 1}, {2, 2, 2, 2, 1, 1}, {2, 2, 2, 2, 1, 1},
                              {2, 2, 2, 2, 1, 1}, {1, 1, 1, 1, 2, 2}, {1, 1, 1, 1, 2, 2}};
  bool sizes_ok = true;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (static_cast<int>(map.zero_cell(ord[i], ord[j]).size()) != expected_sizes[i][j]) sizes_ok = false;
  out.check("B4 0-cell size matrix", sizes_ok);

  // Explicit 0-cell member table, byte-exact after canonical sorting.
  const char* table[6][6] = {
      {"121321/1213241321", "12132/121324132", "1213/12132413", "12134/1213241", "121324", "1213243"},
      {"21321/213241321", "2132/21324132", "213/2132413", "2134/213241", "21324", "213243"},
      {"1321/13241321", "132/1324132", "13/132413", "134/13241", "1324", "13243"},
      {"41321/1241321", "4132/124132", "413/12413", "14/1241", "124", "1243"},
      {"241321", "24132", "2413", "214", "24/2124", "243/21243"},
      {"3241321", "324132", "32413", "3214", "324/32124", "3243/321243"}};
  bool members_ok = true;
  std::string first_diff;
  for (int i = 0; i < 6 && members_ok; ++i)
    for (int j = 0; j < 6 && members_ok; ++j) {
      std::vector<Key> expected;
      std::stringstream ss(table[i][j]);
      std::string digits;
      while (std::getline(ss, digits, '/')) {
        Word w;
        for (char c : digits) w.letters.push_back(sys.index_of(std::string(1, c)));
        expected.push_back(canonical_key(GroupElement::from_word(sys, w)));
      }
      std::sort(expected.begin(), expected.end(), key_less);
      auto got = map.zero_cell(ord[i], ord[j]);
      if (got != expected) {
        members_ok = false;
        first_diff = "entry (" + order[i] + ", " + order[j] + ")";
      }
    }
  out.check("B4 0-cell member table", members_ok, first_diff);

  // Right-cell sizes and the total.
  std::multiset<size_t> cell_sizes;
  for (const auto& c : map.right_cells()) cell_sizes.insert(c.size());
  out.check("B4 right-cell sizes", cell_sizes == std::multiset<size_t>{10, 10, 10, 10, 8, 8});
  out.check("B4 |W_2| = 56", map.size() == 56);
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> verify_system(const CoxeterSystem& sys) {
  Checker out;
  W2Map map(sys);
  ClosedForms forms = closed_forms(sys);

  // Stub set: generic enumeration against the closed-form lists.
  {
    auto closed = closed_form_stubs(sys);
    out.check("stub count formula", map.stub_count() == forms.stub_count,
              std::to_string(map.stub_count()) + " != " + std::to_string(forms.stub_count));
    out.check("generic vs closed-form stubs", key_set(map.stubs()) == key_set(closed),
              "generic {" + show_keys(sys, key_set(map.stubs())) + "} closed {" + show_keys(sys, key_set(closed)) +
                  "}");
  }
  if (map.stub_count() == 0) {
    out.check("W_2 empty", map.size() == 0);
    return out.results;
  }

  // Every member is an a(2)-element and the closures partition W_2 (the
  // builder aborts on overlap, so size agreement is the remaining piece).
  {
    bool members_ok = true;
    size_t total = 0;
    for (const auto& cell : map.right_cells()) {
      total += cell.size();
      for (const Key& k : cell)
        if (fc_a_classify(map.element(k)) != AClass::two) members_ok = false;
    }
    out.check("W_2 members have a-class two", members_ok);
    out.check("right cells partition W_2", total == map.size());
  }

  // Class sizes, in the fixed representative order.
  {
    auto classes = map.simple_classes();
    bool ok = static_cast<int>(forms.simple_classes.size()) == map.simple_class_count();
    std::set<int> seen;
    for (size_t i = 0; i < forms.simple_classes.size() && ok; ++i) {
      int stub = map.stub_index(canonical_key(parse_element(sys, forms.simple_classes[i].first)));
      if (stub < 0) {
        ok = false;
        break;
      }
      int cls = map.stubs()[stub].class_id_simple;
      ok = seen.insert(cls).second && static_cast<long long>(classes[cls].size()) == forms.simple_classes[i].second;
    }
    out.check("simple-slide class sizes", ok);
  }
  {
    auto classes = map.slide_classes();
    bool ok = static_cast<int>(forms.slide_classes.size()) == map.slide_class_count();
    std::set<int> seen;
    for (size_t i = 0; i < forms.slide_classes.size() && ok; ++i) {
      int stub = map.stub_index(canonical_key(parse_element(sys, forms.slide_classes[i].first)));
      if (stub < 0) {
        ok = false;
        break;
      }
      int cls = map.stubs()[stub].class_id_slide;
      ok = seen.insert(cls).second && static_cast<long long>(classes[cls].size()) == forms.slide_classes[i].second;
    }
    out.check("slide class sizes", ok);
  }

  // 0-cell sizes: representative matrix, symmetry, and invariance across
  // whole class pairs.
  {
    std::vector<int> reps;
    for (const auto& [word, size] : forms.simple_classes)
      reps.push_back(map.stub_index(canonical_key(parse_element(sys, word))));
    bool matrix_ok = true;
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = 0; j < reps.size(); ++j)
        if (static_cast<long long>(map.zero_cell(reps[i], reps[j]).size()) != forms.zero_cell_sizes[i][j])
          matrix_ok = false;
    out.check("0-cell size matrix", matrix_ok);

    bool invariance_ok = true, symmetric_ok = true;
    std::vector<std::vector<int>> n_by_class(map.simple_class_count(),
                                             std::vector<int>(map.simple_class_count(), -1));
    for (int x = 0; x < map.stub_count() && invariance_ok; ++x)
      for (int y = 0; y < map.stub_count(); ++y) {
        int nij = static_cast<int>(map.zero_cell(x, y).size());
        int& slot = n_by_class[map.stubs()[x].class_id_simple][map.stubs()[y].class_id_simple];
        if (slot < 0) slot = nij;
        if (slot != nij) {
          invariance_ok = false;
          break;
        }
        if (static_cast<int>(map.zero_cell(y, x).size()) != nij) symmetric_ok = false;
      }
    out.check("0-cell size invariance on class pairs", invariance_ok);
    out.check("0-cell size symmetry", symmetric_ok);
  }

  // 1-cell sizes per class; 2-cell count and sizes.
  {
    bool ok = true;
    for (int i = 0; i < map.stub_count(); ++i) {
      int cls = map.stubs()[i].class_id_simple;
      long long expected = -1;
      for (size_t c = 0; c < forms.simple_classes.size(); ++c) {
        int rep = map.stub_index(canonical_key(parse_element(sys, forms.simple_classes[c].first)));
        if (map.stubs()[rep].class_id_simple == cls) expected = forms.one_cell_sizes[c];
      }
      if (static_cast<long long>(map.right_cells()[i].size()) != expected) ok = false;
    }
    out.check("1-cell sizes", ok);

    std::multiset<long long> got, expected;
    for (const auto& cell : map.two_sided_partition().cells) got.insert(cell.size());
    for (long long s : forms.two_sided_sizes) expected.insert(s);
    out.check("2-cell count and sizes", got == expected);
    out.check("|W_2| total", static_cast<long long>(map.size()) == forms.total());
  }

  // Representative 0-cells.
  {
    bool ok = true;
    std::string detail;
    for (const auto& rep : representative_zero_cell_data(sys)) {
      int xi = map.stub_index(canonical_key(parse_element(sys, rep.x)));
      int yi = map.stub_index(canonical_key(parse_element(sys, rep.y)));
      std::vector<Key> expected;
      for (const auto& w : rep.members) expected.push_back(canonical_key(parse_element(sys, w)));
      std::sort(expected.begin(), expected.end(), key_less);
      if (xi < 0 || yi < 0 || map.zero_cell(xi, yi) != expected) {
        ok = false;
        detail = "I(" + rep.x + ", " + rep.y + ")";
      }
    }
    out.check("representative 0-cells", ok, detail);
  }

  // Triple bijection: decompose and re-glue every element of W_2; distinct
  // triples, valid sides, identity round trip.
  {
    bool ok = true;
    std::set<std::pair<Key, std::pair<Key, Key>>> triples;
    for (const auto& cell : map.right_cells())
      for (const Key& k : cell) {
        const GroupElement& w = map.element(k);
        A2Triple t = a2_triple_of(w);
        if (!(glue_triple(t) == w)) ok = false;
        if (!is_left_stub(t.x) || !is_right_stub(t.yprime)) ok = false;
        if (t.core.left_descents().size() != 2 || t.core.right_descents().size() != 2) ok = false;
        triples.insert({canonical_key(t.x), {canonical_key(t.core), canonical_key(t.yprime)}});
      }
    out.check("triple bijection", ok && triples.size() == map.size());
  }

  // Distinguished involutions: d = x * x^-1 is an involution in I(x, x).
  {
    bool ok = true;
    for (int i = 0; i < map.stub_count(); ++i) {
      GroupElement d = distinguished_involution(map.stubs()[i].element);
      if (!(d == d.inverse())) ok = false;
      auto iset = map.zero_cell(i, i);
      Key dk = canonical_key(d);
      if (!std::binary_search(iset.begin(), iset.end(), dk, key_less)) ok = false;
    }
    out.check("distinguished involutions", ok);
  }

  // Weak-order law: w lies in R_x iff x <= w on the right. Exhaustive up to a
  // work budget, deterministically strided beyond it.
  {
    bool ok = true;
    size_t checks = static_cast<size_t>(map.stub_count()) * map.size();
    size_t stride = checks > 200000 ? checks / 200000 + 1 : 1;
    size_t counter = 0;
    for (int x = 0; x < map.stub_count() && ok; ++x)
      for (const auto& cell : map.right_cells()) {
        for (const Key& k : cell) {
          if (counter++ % stride) continue;
          bool in_cell = map.cell_of(k) == x;
          if (weak_leq_right(map.stubs()[x].element, map.element(k)) != in_cell) {
            ok = false;
            break;
          }
        }
      }
    out.check("weak-order membership law", ok);
  }

  // Left descents are constant on right cells.
  {
    bool ok = true;
    for (int i = 0; i < map.stub_count() && ok; ++i) {
      auto expected = map.stubs()[i].element.left_descents();
      for (const Key& k : map.right_cells()[i])
        if (map.element(k).left_descents() != expected) {
          ok = false;
          break;
        }
    }
    out.check("descent constancy on right cells", ok);
  }

  if (sys.type() == CoxType::B && sys.rank() == 4) verify_b4_goldens(out, map);
  return out.results;
}

std::vector<CheckResult> oracle_verify(const CoxeterSystem& sys, size_t bound) {
  Checker out;
  KLOracle oracle(sys, bound);
  W2Map map(sys);

  // a-values: the oracle's W_2 equals the stub enumeration.
  {
    std::set<Key> oracle_w2, stub_w2;
    for (int i = 0; i < oracle.size(); ++i)
      if (oracle.a_value(i) == 2) oracle_w2.insert(canonical_key(oracle.element(i)));
    for (const auto& cell : map.right_cells()) stub_w2.insert(cell.begin(), cell.end());
    out.check("oracle W_2 set", oracle_w2 == stub_w2,
              std::to_string(oracle_w2.size()) + " vs " + std::to_string(stub_w2.size()) + " elements");
  }

  // Cell partitions restricted to a-value 2.
  OracleCells cells = oracle.cells_from_definition();
  auto restrict2 = [&](const std::vector<std::vector<int>>& part) {
    std::set<std::set<Key>> out_cells;
    for (const auto& cell : part) {
      std::set<Key> keys;
      for (int i : cell)
        if (oracle.a_value(i) == 2) keys.insert(canonical_key(oracle.element(i)));
      if (!keys.empty()) out_cells.insert(std::move(keys));
    }
    return out_cells;
  };
  auto as_sets = [](const CellPartition& p) {
    std::set<std::set<Key>> out_cells;
    for (const auto& cell : p.cells) out_cells.insert(std::set<Key>(cell.begin(), cell.end()));
    return out_cells;
  };
  out.check("oracle right cells", restrict2(cells.right) == as_sets(map.right_partition()));
  out.check("oracle left cells", restrict2(cells.left) == as_sets(map.left_partition()));
  out.check("oracle two-sided cells", restrict2(cells.two_sided) == as_sets(map.two_sided_partition()));

  // a-values are constant on oracle two-sided cells.
  {
    bool ok = true;
    for (const auto& cell : cells.two_sided)
      for (int i : cell)
        if (oracle.a_value(i) != oracle.a_value(cell.front())) ok = false;
    out.check("a-value constant on cells", ok);
  }

  // Width classification against oracle a-values on every FC element:
  // a = 0, 1, 2 exactly for widths 0, 1, 2.
  {
    bool ok = true;
    for (int i = 0; i < oracle.size(); ++i) {
      const GroupElement& w = oracle.element(i);
      if (!is_fc(w)) continue;
      int a = oracle.a_value(i);
      AClass c = fc_a_classify(w);
      bool match = (a == 0 && c == AClass::zero) || (a == 1 && c == AClass::one) || (a == 2 && c == AClass::two) ||
                   (a >= 3 && c == AClass::more);
      if (!match) ok = false;
    }
    out.check("width matches a-value on FC elements", ok);
  }

  // Right lower star operations stay inside oracle right cells.
  {
    bool ok = true;
    auto in_cell = [&](int a, int b, const std::vector<std::vector<int>>& part) {
      for (const auto& cell : part)
        if (std::binary_search(cell.begin(), cell.end(), a)) return std::binary_search(cell.begin(), cell.end(), b);
      return false;
    };
    for (const auto& cell : map.right_cells())
      for (const Key& k : cell) {
        const GroupElement& w = map.element(k);
        for (int s = 0; s < sys.rank() && ok; ++s)
          for (int t = s + 1; t < sys.rank(); ++t) {
            if (sys.bond(s, t) < 3) continue;
            auto low = right_lower_star(w, NoncommutingPair(sys, s, t));
            if (!low) continue;
            if (!in_cell(oracle.index_of(w), oracle.index_of(*low), cells.right)) ok = false;
          }
      }
    out.check("star operations stay in oracle right cells", ok);
  }
  return out.results;
}

std::vector<CheckResult> verify_star_ground_truth() {
  Checker out;
  static const CoxeterSystem sys =
      CoxeterSystem::custom({"a", "b", "c"}, {{1, 3, 2}, {3, 1, 4}, {2, 4, 1}});
  GroupElement w = parse_element(sys, "a,b,c,a,b");
  NoncommutingPair I(sys, sys.index_of("a"), sys.index_of("b"));
  NoncommutingPair J(sys, sys.index_of("b"), sys.index_of("c"));

  auto same = [&](const std::optional<GroupElement>& got, const char* expected) {
    return got && canonical_key(*got) == canonical_key(parse_element(sys, expected));
  };
  auto [outerI, innerI] = coset_decompose_left(w, I);
  out.check("coset decomposition w^I . w_I", canonical_key(outerI) == canonical_key(parse_element(sys, "a,b,c")) &&
                                                 canonical_key(innerI) == canonical_key(parse_element(sys, "a,b")));
  auto [outerJ, innerJ] = coset_decompose_left(w, J);
  out.check("coset decomposition w^J . w_J", canonical_key(outerJ) == canonical_key(parse_element(sys, "b,a")) &&
                                                 canonical_key(innerJ) == canonical_key(parse_element(sys, "b,c,b")));
  out.check("right lower star wrt {a,b}", same(right_lower_star(w, I), "a,b,c,a"));
  out.check("right upper star wrt {a,b} undefined", !right_upper_star(w, I).has_value());
  out.check("left stars wrt {a,b} undefined", !left_upper_star(w, I) && !left_lower_star(w, I));
  out.check("simple right star wrt {a,b}", same(simple_right_star(w, I), "a,b,c,a"));
  out.check("left upper star wrt {b,c}", same(left_upper_star(w, J), "c,b,a,b,c,b"));
  out.check("right lower star wrt {b,c}", same(right_lower_star(w, J), "b,a,b,c"));
  out.check("left lower star wrt {b,c} undefined", !left_lower_star(w, J).has_value());
  out.check("right upper star wrt {b,c} undefined", !right_upper_star(w, J).has_value());
  return out.results;
}

}  // namespace a2cells
