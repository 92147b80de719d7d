#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "a2cells/star.hpp"

namespace a2cells {

enum class Side { left, right };

// A stub of a-value 2: a left stub admits no right lower star operation (and
// mirrored for right stubs). Class ids are ordinals into the simple-slide
// (~) and slide (~~) partitions once those are computed.
struct Stub {
  GroupElement element;
  Side side = Side::left;
  CFForm cf;
  int class_id_simple = -1;
  int class_id_slide = -1;

  const std::vector<int>& first_layer() const { return cf.layers.front(); }
};

bool is_left_stub(const GroupElement& w);   // Errc::not_fc
bool is_right_stub(const GroupElement& w);  // Errc::not_fc
// Differential form of the left-stub test: every second-layer generator of
// the Cartier-Foata form fails to commute with at least two first-layer ones.
bool is_left_stub_by_layers(const GroupElement& w);

// The left stubs of a-value 2, found generically: seed with all products of
// two commuting generators, close under left upper star operations that stay
// width-2 left stubs. Errc::not_a2_finite when W_2 is infinite; empty when
// the system has no commuting pair.
std::vector<Stub> enumerate_stubs(const CoxeterSystem& sys);

// The same set from the per-family closed-form lists (Errc::not_builtin_type
// for custom systems).
std::vector<Stub> closed_form_stubs(const CoxeterSystem& sys);

// BFS closure of a left stub under right upper star operations = its right
// cell inside W_2.
std::vector<GroupElement> right_cell_closure(const GroupElement& stub);

enum class CellKind { left, right, two_sided };

struct CellPartition {
  CellKind kind = CellKind::right;
  std::vector<std::vector<Key>> cells;       // sorted members, cells in stable order
  std::unordered_map<Key, int> index;        // member -> cell ordinal
};

// Everything enumerable about W_2 in one place: stubs (with class ids),
// right-cell closures, the element store, and inverse keys. Built once per
// system and consulted by every downstream query.
class W2Map {
 public:
  explicit W2Map(const CoxeterSystem& sys);

  const CoxeterSystem& system() const { return *sys_; }
  const std::vector<Stub>& stubs() const { return stubs_; }
  int stub_count() const { return static_cast<int>(stubs_.size()); }
  size_t size() const { return elems_.size(); }

  const std::vector<std::vector<Key>>& right_cells() const { return right_cells_; }
  const GroupElement& element(const Key& k) const;
  bool contains(const Key& k) const { return elems_.count(k) > 0; }
  // Ordinal of the stub whose right cell contains k, or -1.
  int cell_of(const Key& k) const;
  const Key& inverse_key(const Key& k) const;
  // Ordinal of a stub by its element key, or -1.
  int stub_index(const Key& k) const;
  int stub_index(const GroupElement& w) const { return stub_index(canonical_key(w)); }

  // 0-cell I(x, y) = R_x intersect R_y^{-1}, by stub ordinals; sorted keys.
  std::vector<Key> zero_cell(int xi, int yi) const;

  int simple_class_count() const { return n_simple_; }
  int slide_class_count() const { return n_slide_; }
  std::vector<std::vector<int>> simple_classes() const;  // stub ordinals per class
  std::vector<std::vector<int>> slide_classes() const;

  CellPartition right_partition() const;
  CellPartition left_partition() const;
  CellPartition two_sided_partition() const;

 private:
  const CoxeterSystem* sys_;
  std::vector<Stub> stubs_;
  std::vector<std::vector<Key>> right_cells_;
  std::map<Key, GroupElement> elems_;
  std::unordered_map<Key, int> cell_of_;
  std::unordered_map<Key, Key> inverse_key_;
  std::unordered_map<Key, int> stub_ordinal_;
  int n_simple_ = 0, n_slide_ = 0;
};

// Spec-level operations (the W2Map methods power these).

// Unique left stub below w in the right weak order, with the complement:
// w = stub . z reduced. Errc::not_a_value_2 unless fc_a_classify(w) = 2.
struct StubDecomposition {
  GroupElement stub;
  GroupElement rest;
};
StubDecomposition stub_decomposition(const GroupElement& w);

// Glued product w * w2 = w p w2 for descent-compatible pairs, where p is the
// product of the two shared descent generators.
GroupElement glued_product(const GroupElement& w, const GroupElement& w2);

// Canonical (left stub, core, right stub) decomposition; inverse of the
// glued-product bijection g(x, w, y') = (x * w) * y'.
struct A2Triple {
  GroupElement x;      // left stub
  GroupElement core;   // two left and two right descents
  GroupElement yprime; // right stub
};
A2Triple a2_triple_of(const GroupElement& w);
GroupElement glue_triple(const A2Triple& t);

// Distinguished involution of the right cell of x: the glued product x * x^-1.
GroupElement distinguished_involution(const GroupElement& stub);

// Slide of a short stub along a diagram edge: st -> su for an edge {t,u}.
GroupElement slide(const GroupElement& short_stub, const NoncommutingPair& edge);

// Transport of a 0-cell between related rows: left multiplication when the
// stubs share a first layer, setwise left star operations when two short
// stubs differ by one slide. Errc::not_related otherwise.
std::vector<GroupElement> transport_zero_cell(const std::vector<GroupElement>& cell, const GroupElement& from_x,
                                              const GroupElement& to_x);

std::vector<Key> sorted_keys(const std::vector<GroupElement>& elems);

}  // namespace a2cells
