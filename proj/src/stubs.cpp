#include "a2cells/stubs.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace a2cells {

namespace {

std::vector<NoncommutingPair> noncommuting_pairs(const CoxeterSystem& sys) {
  std::vector<NoncommutingPair> out;
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = s + 1; t < sys.rank(); ++t)
      if (sys.bond(s, t) >= 3) out.emplace_back(sys, s, t);
  return out;
}

}  // namespace

bool is_left_stub(const GroupElement& w) {
  if (!is_fc(w)) fail(Errc::not_fc, "stub test needs a fully commutative element");
  for (const auto& I : noncommuting_pairs(w.system()))
    if (right_lower_star(w, I)) return false;
  return true;
}

bool is_right_stub(const GroupElement& w) {
  if (!is_fc(w)) fail(Errc::not_fc, "stub test needs a fully commutative element");
  for (const auto& I : noncommuting_pairs(w.system()))
    if (left_lower_star(w, I)) return false;
  return true;
}

bool is_left_stub_by_layers(const GroupElement& w) {
  CFForm cf = cartier_foata(w);
  if (cf.layers.size() < 2) return true;
  const CoxeterSystem& sys = w.system();
  for (int t : cf.layers[1]) {
    int hits = 0;
    for (int s : cf.layers[0])
      if (sys.bond(s, t) >= 3) ++hits;
    if (hits < 2) return false;
  }
  return true;
}

std::vector<Key> sorted_keys(const std::vector<GroupElement>& elems) {
  std::vector<Key> keys;
  keys.reserve(elems.size());
  for (const auto& e : elems) keys.push_back(canonical_key(e));
  std::sort(keys.begin(), keys.end(), key_less);
  return keys;
}

std::vector<Stub> enumerate_stubs(const CoxeterSystem& sys) {
  Classification cls = sys.classify();
  if (!cls.a2_finite) fail(Errc::not_a2_finite, sys.name() + " has infinitely many a(2)-elements");
  std::vector<Stub> out;
  if (!cls.nontrivially_a2_finite) return out;  // W_2 empty: no commuting pair

  auto pairs = noncommuting_pairs(sys);
  std::map<Key, GroupElement> found;
  std::deque<GroupElement> queue;
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = s + 1; t < sys.rank(); ++t) {
      if (!sys.commutes(s, t)) continue;
      GroupElement st = GroupElement::generator(sys, s).times_gen(t);
      found.emplace(canonical_key(st), st);
      queue.push_back(st);
    }
  // Medium and long stubs hang above their first layer by left upper star
  // operations, so closing the short stubs under those operations (keeping
  // only width-2 left stubs) reaches all of S(W).
  while (!queue.empty()) {
    GroupElement w = queue.front();
    queue.pop_front();
    for (const auto& I : pairs) {
      auto up = left_upper_star(w, I);
      if (!up) continue;
      Key k = canonical_key(*up);
      if (found.count(k)) continue;
      if (!is_fc(*up) || fc_a_classify(*up) != AClass::two || !is_left_stub(*up)) continue;
      found.emplace(k, *up);
      queue.push_back(*up);
    }
  }
  for (auto& [k, e] : found) out.push_back(Stub{e, Side::left, cartier_foata(e)});
  std::sort(out.begin(), out.end(), [](const Stub& a, const Stub& b) {
    return key_less(key_of_word(cf_word(a.cf)), key_of_word(cf_word(b.cf)));
  });
  return out;
}

namespace {

// Builds a stub from layer data given as label strings, last layer first
// (reading order of the reduced word).
Stub stub_from_layers(const CoxeterSystem& sys, const std::vector<std::vector<std::string>>& layers_in_word_order) {
  Word w;
  for (const auto& layer : layers_in_word_order)
    for (const auto& lab : layer) {
      int idx = sys.index_of(lab);
      assert(idx >= 0);
      w.letters.push_back(idx);
    }
  GroupElement e = GroupElement::from_word(sys, w);
  return Stub{e, Side::left, cartier_foata(e)};
}

std::string L(int i) { return std::to_string(i); }

}  // namespace

std::vector<Stub> closed_form_stubs(const CoxeterSystem& sys) {
  CoxType type = sys.type();
  if (type == CoxType::Custom) fail(Errc::not_builtin_type, "closed-form stubs exist only for built-in types");
  std::vector<Stub> out;
  Classification cls = sys.classify();
  if (!cls.nontrivially_a2_finite) {
    if (!cls.a2_finite) fail(Errc::not_a2_finite, sys.name() + " has infinitely many a(2)-elements");
    return out;
  }
  auto add = [&](const std::vector<std::vector<std::string>>& layers) { out.push_back(stub_from_layers(sys, layers)); };

  if (type == CoxType::A || type == CoxType::B || type == CoxType::Ctilde || type == CoxType::F ||
      type == CoxType::H) {
    int n = sys.rank();  // generators labeled 1..n along the path
    // Short stubs x_ij = ij, j > i+1.
    for (int i = 1; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j) add({{L(i), L(j)}});
    // Medium stubs y_i = i . (i-1)(i+1).
    for (int i = 2; i < n; ++i) add({{L(i)}, {L(i - 1), L(i + 1)}});
    switch (type) {
      case CoxType::B:
        add({{L(1)}, {L(2)}, {L(1), L(3)}});  // z_1
        break;
      case CoxType::Ctilde:
        add({{L(1)}, {L(2)}, {L(1), L(3)}});                  // z_1
        add({{L(n)}, {L(n - 1)}, {L(n - 2), L(n)}});          // z_n
        break;
      case CoxType::F: {
        add({{L(1)}, {L(2)}, {L(3)}, {L(2), L(4)}});          // z_1
        add({{L(2)}, {L(3)}, {L(2), L(4)}});                  // z_2
        for (int i = 3; i <= n; ++i) {                        // z_i = i.(i-1)...3.2.13
          std::vector<std::vector<std::string>> layers;
          for (int k = i; k >= 2; --k) layers.push_back({L(k)});
          layers.push_back({L(1), L(3)});
          add(layers);
        }
        break;
      }
      case CoxType::H: {
        add({{L(1)}, {L(2)}, {L(1), L(3)}});                  // z_1
        for (int i = 2; i <= n; ++i) {                        // z_i = i.(i-1)...1.2.13
          std::vector<std::vector<std::string>> layers;
          for (int k = i; k >= 1; --k) layers.push_back({L(k)});
          layers.push_back({L(2)});
          layers.push_back({L(1), L(3)});
          add(layers);
        }
        break;
      }
      default:
        break;  // A_n adds nothing further
    }
  } else if (type == CoxType::E) {
    int q = sys.param1(), r = sys.param2();
    // Short stubs: every commuting pair.
    for (int s = 0; s < sys.rank(); ++s)
      for (int t = s + 1; t < sys.rank(); ++t)
        if (sys.commutes(s, t)) add({{sys.label(s), sys.label(t)}});
    // Medium stubs y_i = i . (i-1)(i+1) for -q < i < r, plus the two with v.
    for (int i = -q + 1; i < r; ++i) add({{L(i)}, {L(i - 1), L(i + 1)}});
    add({{L(0)}, {L(-1), "v"}});
    add({{L(0)}, {L(1), "v"}});
    // Long stubs z_s, s != 0.
    for (int s = 1; s <= r; ++s) {
      std::vector<std::vector<std::string>> layers;
      for (int k = s; k >= 0; --k) layers.push_back({L(k)});
      layers.push_back({L(-1), "v"});
      add(layers);
    }
    for (int s = -q; s <= -1; ++s) {
      std::vector<std::vector<std::string>> layers;
      for (int k = s; k <= 0; ++k) layers.push_back({L(k)});
      layers.push_back({L(1), "v"});
      add(layers);
    }
    add({{"v"}, {L(0)}, {L(-1), L(1)}});  // z_v
  } else {
    fail(Errc::not_builtin_type, "no closed-form stub list for " + sys.name());
  }

  std::sort(out.begin(), out.end(), [](const Stub& a, const Stub& b) {
    return key_less(key_of_word(cf_word(a.cf)), key_of_word(cf_word(b.cf)));
  });
  return out;
}

std::vector<GroupElement> right_cell_closure(const GroupElement& stub) {
  const CoxeterSystem& sys = stub.system();
  auto pairs = noncommuting_pairs(sys);
  std::map<Key, GroupElement> found;
  std::deque<GroupElement> queue{stub};
  found.emplace(canonical_key(stub), stub);
  while (!queue.empty()) {
    GroupElement w = queue.front();
    queue.pop_front();
    for (const auto& I : pairs) {
      auto up = right_upper_star(w, I);
      if (!up) continue;
      Key k = canonical_key(*up);
      if (found.emplace(k, *up).second) queue.push_back(*up);
    }
  }
  std::vector<GroupElement> out;
  out.reserve(found.size());
  for (auto& [k, e] : found) out.push_back(e);
  return out;
}

W2Map::W2Map(const CoxeterSystem& sys) : sys_(&sys) {
  stubs_ = enumerate_stubs(sys);
  for (int i = 0; i < stub_count(); ++i) stub_ordinal_[canonical_key(stubs_[i].element)] = i;
  right_cells_.resize(stubs_.size());

  for (int i = 0; i < stub_count(); ++i) {
    auto members = right_cell_closure(stubs_[i].element);
    std::vector<Key> keys;
    for (auto& e : members) {
      Key k = canonical_key(e);
      auto [it, fresh] = elems_.emplace(k, e);
      assert(fresh && "right upper star closures of distinct stubs must be disjoint");
      cell_of_[k] = i;
      keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end(), key_less);
    right_cells_[i] = std::move(keys);
  }
  for (auto& [k, e] : elems_) inverse_key_[k] = canonical_key(e.inverse());

  // Slide classes: union-find over the short stubs (= commuting pairs of
  // generators), with each stub joining the class of its first layer.
  int n = sys.rank();
  auto pair_id = [n](int s, int t) { return s * n + t; };
  std::vector<int> uf_simple(n * n), uf_slide(n * n);
  for (int i = 0; i < n * n; ++i) uf_simple[i] = uf_slide[i] = i;
  auto find = [](std::vector<int>& uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto unite = [&](std::vector<int>& uf, int a, int b) { uf[find(uf, a)] = find(uf, b); };
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t || !sys.commutes(s, t)) continue;
      for (int u = 0; u < n; ++u) {
        if (u == s || u == t || !sys.adjacent(t, u) || !sys.commutes(s, u)) continue;
        // slide st -> su along the edge {t,u}
        unite(uf_slide, pair_id(std::min(s, t), std::max(s, t)), pair_id(std::min(s, u), std::max(s, u)));
        if (sys.bond(t, u) == 3)
          unite(uf_simple, pair_id(std::min(s, t), std::max(s, t)), pair_id(std::min(s, u), std::max(s, u)));
      }
    }
  std::map<int, int> simple_ids, slide_ids;
  for (auto& stub : stubs_) {
    auto fl = stub.first_layer();
    assert(fl.size() == 2);
    int p = pair_id(fl[0], fl[1]);
    int rs = find(uf_simple, p), rl = find(uf_slide, p);
    auto [its, fs] = simple_ids.emplace(rs, static_cast<int>(simple_ids.size()));
    auto [itl, fl2] = slide_ids.emplace(rl, static_cast<int>(slide_ids.size()));
    stub.class_id_simple = its->second;
    stub.class_id_slide = itl->second;
  }
  n_simple_ = static_cast<int>(simple_ids.size());
  n_slide_ = static_cast<int>(slide_ids.size());
}

const GroupElement& W2Map::element(const Key& k) const {
  auto it = elems_.find(k);
  if (it == elems_.end()) fail(Errc::bad_word, "element is not in W_2");
  return it->second;
}

int W2Map::cell_of(const Key& k) const {
  auto it = cell_of_.find(k);
  return it == cell_of_.end() ? -1 : it->second;
}

const Key& W2Map::inverse_key(const Key& k) const {
  auto it = inverse_key_.find(k);
  if (it == inverse_key_.end()) fail(Errc::bad_word, "element is not in W_2");
  return it->second;
}

int W2Map::stub_index(const Key& k) const {
  auto it = stub_ordinal_.find(k);
  return it == stub_ordinal_.end() ? -1 : it->second;
}

std::vector<Key> W2Map::zero_cell(int xi, int yi) const {
  std::vector<Key> out;
  for (const Key& k : right_cells_[xi])
    if (cell_of(inverse_key(k)) == yi) out.push_back(k);
  return out;  // right_cells_ members are sorted, and the filter keeps order
}

std::vector<std::vector<int>> W2Map::simple_classes() const {
  std::vector<std::vector<int>> out(n_simple_);
  for (int i = 0; i < stub_count(); ++i) out[stubs_[i].class_id_simple].push_back(i);
  return out;
}

std::vector<std::vector<int>> W2Map::slide_classes() const {
  std::vector<std::vector<int>> out(n_slide_);
  for (int i = 0; i < stub_count(); ++i) out[stubs_[i].class_id_slide].push_back(i);
  return out;
}

CellPartition W2Map::right_partition() const {
  CellPartition p;
  p.kind = CellKind::right;
  p.cells = right_cells_;
  for (size_t c = 0; c < p.cells.size(); ++c)
    for (const Key& k : p.cells[c]) p.index[k] = static_cast<int>(c);
  return p;
}

CellPartition W2Map::left_partition() const {
  CellPartition p;
  p.kind = CellKind::left;
  p.cells.resize(right_cells_.size());
  for (size_t c = 0; c < right_cells_.size(); ++c) {
    for (const Key& k : right_cells_[c]) p.cells[c].push_back(inverse_key(k));
    std::sort(p.cells[c].begin(), p.cells[c].end(), key_less);
  }
  for (size_t c = 0; c < p.cells.size(); ++c)
    for (const Key& k : p.cells[c]) p.index[k] = static_cast<int>(c);
  return p;
}

CellPartition W2Map::two_sided_partition() const {
  CellPartition p;
  p.kind = CellKind::two_sided;
  p.cells.resize(n_slide_);
  for (int i = 0; i < stub_count(); ++i) {
    auto& cell = p.cells[stubs_[i].class_id_slide];
    cell.insert(cell.end(), right_cells_[i].begin(), right_cells_[i].end());
  }
  for (auto& cell : p.cells) std::sort(cell.begin(), cell.end(), key_less);
  std::sort(p.cells.begin(), p.cells.end(),
            [](const auto& a, const auto& b) { return key_less(a.front(), b.front()); });
  for (size_t c = 0; c < p.cells.size(); ++c)
    for (const Key& k : p.cells[c]) p.index[k] = static_cast<int>(c);
  return p;
}

StubDecomposition stub_decomposition(const GroupElement& w) {
  if (fc_a_classify(w) != AClass::two) fail(Errc::not_a_value_2, "stub decomposition needs an a(2)-element");
  auto pairs = noncommuting_pairs(w.system());
  GroupElement x = w;
  // Right lower star operations stay in the right cell and shorten; the fixed
  // point is the cell's unique left stub.
  for (;;) {
    bool moved = false;
    for (const auto& I : pairs) {
      if (auto low = right_lower_star(x, I)) {
        x = *low;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  GroupElement rest = multiply(x.inverse(), w);
  assert(length(x) + length(rest) == length(w));
  return {x, rest};
}

GroupElement glued_product(const GroupElement& w, const GroupElement& w2) {
  check_same_system(w, w2);
  auto r = w.right_descents();
  auto l = w2.left_descents();
  if (r.size() != 2 || r != l)
    fail(Errc::not_descent_compatible, "glued product needs R(w) = L(w2) of size two");
  GroupElement p = GroupElement::generator(w.system(), r[0]).times_gen(r[1]);
  return multiply(multiply(w, p), w2);
}

GroupElement glue_triple(const A2Triple& t) { return glued_product(glued_product(t.x, t.core), t.yprime); }

A2Triple a2_triple_of(const GroupElement& w) {
  if (fc_a_classify(w) != AClass::two) fail(Errc::not_a_value_2, "triple decomposition needs an a(2)-element");
  const CoxeterSystem& sys = w.system();
  GroupElement x = stub_decomposition(w).stub;
  GroupElement yprime = stub_decomposition(w.inverse()).stub.inverse();

  auto rx = x.right_descents();
  GroupElement p = GroupElement::generator(sys, rx[0]).times_gen(rx[1]);
  auto ly = yprime.left_descents();
  GroupElement q = GroupElement::generator(sys, ly[0]).times_gen(ly[1]);
  // w = x * u and u = core * y', so core = p x^-1 w y'^-1 q.
  GroupElement core = multiply(multiply(multiply(multiply(p, x.inverse()), w), yprime.inverse()), q);
  if (core.left_descents().size() != 2 || core.right_descents().size() != 2)
    fail(Errc::not_a_value_2, "triple decomposition produced a non-core middle");
  return {x, core, yprime};
}

GroupElement distinguished_involution(const GroupElement& stub) {
  return glued_product(stub, stub.inverse());
}

GroupElement slide(const GroupElement& short_stub, const NoncommutingPair& edge) {
  const CoxeterSystem& sys = short_stub.system();
  Word w = canonical_word(short_stub);
  if (w.letters.size() != 2 || !sys.commutes(w.letters[0], w.letters[1]))
    fail(Errc::not_short_stub, "slides act on products of two commuting generators");
  int a = w.letters[0], b = w.letters[1];
  int from, keep;
  if (a == edge.s || a == edge.t) {
    from = a;
    keep = b;
  } else if (b == edge.s || b == edge.t) {
    from = b;
    keep = a;
  } else {
    fail(Errc::not_an_edge, "slide edge must contain a letter of the stub");
  }
  int to = edge.other(from);
  if (to == keep || !sys.commutes(keep, to))
    fail(Errc::result_not_stub, "slide image is not a short stub");
  return GroupElement::generator(sys, std::min(keep, to)).times_gen(std::max(keep, to));
}

std::vector<GroupElement> transport_zero_cell(const std::vector<GroupElement>& cell, const GroupElement& from_x,
                                              const GroupElement& to_x) {
  check_same_system(from_x, to_x);
  const CoxeterSystem& sys = from_x.system();
  auto fl_from = cartier_foata(from_x).layers.front();
  auto fl_to = cartier_foata(to_x).layers.front();
  if (fl_from == fl_to) {
    // Same first layer: the rows are related by left multiplication by
    // to_x from_x^-1.
    GroupElement m = multiply(to_x, from_x.inverse());
    std::vector<GroupElement> out;
    out.reserve(cell.size());
    for (const auto& e : cell) out.push_back(multiply(m, e));
    return out;
  }
  // One slide between two short stubs: apply every defined left star
  // operation with respect to the slide edge, setwise.
  if (length(from_x) == 2 && length(to_x) == 2) {
    std::vector<int> diff_from, diff_to;
    for (int g : fl_from)
      if (std::find(fl_to.begin(), fl_to.end(), g) == fl_to.end()) diff_from.push_back(g);
    for (int g : fl_to)
      if (std::find(fl_from.begin(), fl_from.end(), g) == fl_from.end()) diff_to.push_back(g);
    if (diff_from.size() == 1 && diff_to.size() == 1 && sys.bond(diff_from[0], diff_to[0]) >= 3) {
      NoncommutingPair edge(sys, diff_from[0], diff_to[0]);
      std::map<Key, GroupElement> out;
      for (const auto& e : cell) {
        if (auto up = left_upper_star(e, edge)) out.emplace(canonical_key(*up), *up);
        if (auto low = left_lower_star(e, edge)) out.emplace(canonical_key(*low), *low);
      }
      std::vector<GroupElement> res;
      res.reserve(out.size());
      for (auto& [k, e] : out) res.push_back(e);
      return res;
    }
  }
  fail(Errc::not_related, "stubs are related neither by left star operations nor by a single slide");
}

}  // namespace a2cells
