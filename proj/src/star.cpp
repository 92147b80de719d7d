#include "a2cells/star.hpp"

#include <algorithm>
#include <vector>

namespace a2cells {

namespace {

// Peels right descents lying in I off w. Afterwards outer = w^I and the
// peeled letters, reversed, spell the alternating word of w_I.
struct DihedralTail {
  GroupElement outer;
  std::vector<int> inner_word;  // reduced word of w_I, left to right
};

DihedralTail right_tail(const GroupElement& w, const NoncommutingPair& I) {
  DihedralTail tail{w, {}};
  for (;;) {
    int s = -1;
    if (tail.outer.right_descent(I.s)) s = I.s;
    if (s < 0 && tail.outer.right_descent(I.t)) s = I.t;
    if (s < 0) break;
    tail.inner_word.push_back(s);
    tail.outer = tail.outer.times_gen(s);
  }
  std::reverse(tail.inner_word.begin(), tail.inner_word.end());
  return tail;
}

}  // namespace

std::pair<GroupElement, GroupElement> coset_decompose_left(const GroupElement& w, const NoncommutingPair& I) {
  DihedralTail tail = right_tail(w, I);
  GroupElement inner = GroupElement::identity(w.system());
  for (int s : tail.inner_word) inner = inner.times_gen(s);
  return {tail.outer, inner};
}

std::optional<GroupElement> right_upper_star(const GroupElement& w, const NoncommutingPair& I) {
  int m = w.system().bond(I.s, I.t);
  DihedralTail tail = right_tail(w, I);
  int len = static_cast<int>(tail.inner_word.size());
  if (len == 0) return std::nullopt;
  if (m != kBondInfinity && len >= m - 1) return std::nullopt;
  // Strings alternate from the fixed first letter; position len+1 is the
  // first letter again iff len is even.
  int first = tail.inner_word.front();
  int next = len % 2 == 0 ? first : I.other(first);
  return w.times_gen(next);
}

std::optional<GroupElement> right_lower_star(const GroupElement& w, const NoncommutingPair& I) {
  int m = w.system().bond(I.s, I.t);
  DihedralTail tail = right_tail(w, I);
  int len = static_cast<int>(tail.inner_word.size());
  if (len < 2) return std::nullopt;
  if (m != kBondInfinity && len >= m) return std::nullopt;  // longest dihedral element
  return w.times_gen(tail.inner_word.back());
}

std::optional<GroupElement> left_upper_star(const GroupElement& w, const NoncommutingPair& I) {
  auto r = right_upper_star(w.inverse(), I);
  if (!r) return std::nullopt;
  return r->inverse();
}

std::optional<GroupElement> left_lower_star(const GroupElement& w, const NoncommutingPair& I) {
  auto r = right_lower_star(w.inverse(), I);
  if (!r) return std::nullopt;
  return r->inverse();
}

namespace {

void require_simple(const GroupElement& w, const NoncommutingPair& I) {
  if (w.system().bond(I.s, I.t) != 3) fail(Errc::bond_not_three, "simple star operations need m(s,t) = 3");
}

}  // namespace

std::optional<GroupElement> simple_right_star(const GroupElement& w, const NoncommutingPair& I) {
  require_simple(w, I);
  if (auto up = right_upper_star(w, I)) return up;
  return right_lower_star(w, I);
}

std::optional<GroupElement> simple_left_star(const GroupElement& w, const NoncommutingPair& I) {
  require_simple(w, I);
  if (auto up = left_upper_star(w, I)) return up;
  return left_lower_star(w, I);
}

bool right_lower_star_available_by_heap(const GroupElement& w, const NoncommutingPair& I) {
  Heap h(w.system(), canonical_word(w));
  for (int i : h.maxima()) {
    int a = h.label(i);
    if (a != I.s && a != I.t) continue;
    int b = I.other(a);
    for (auto [x, y] : h.covers()) {
      if (y != i || h.label(x) != b) continue;
      // x must become maximal once i is removed, i.e. i is its only cover.
      bool unique = true;
      for (auto [x2, y2] : h.covers())
        if (x2 == x && y2 != i) unique = false;
      if (unique) return true;
    }
  }
  return false;
}

}  // namespace a2cells
