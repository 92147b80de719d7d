#pragma once

#include <optional>
#include <utility>

#include "a2cells/element.hpp"
#include "a2cells/heap.hpp"

namespace a2cells {

struct NoncommutingPair {
  int s = -1, t = -1;

  NoncommutingPair(const CoxeterSystem& sys, int s_, int t_) : s(s_), t(t_) {
    if (s == t || sys.bond(s, t) < 3) fail(Errc::not_an_edge, "generators must be distinct and noncommuting");
  }
  int other(int g) const { return g == s ? t : s; }
};

// Coset decomposition w = w^I . w_I with R(w^I) disjoint from I and w_I in
// the dihedral subgroup on I. Returns (outer, inner).
std::pair<GroupElement, GroupElement> coset_decompose_left(const GroupElement& w, const NoncommutingPair& I);

// The four generalized star operations. Empty optional = not defined.
std::optional<GroupElement> right_upper_star(const GroupElement& w, const NoncommutingPair& I);
std::optional<GroupElement> right_lower_star(const GroupElement& w, const NoncommutingPair& I);
std::optional<GroupElement> left_upper_star(const GroupElement& w, const NoncommutingPair& I);
std::optional<GroupElement> left_lower_star(const GroupElement& w, const NoncommutingPair& I);

// Simple star operations for m(s,t) = 3 (Errc::bond_not_three otherwise):
// the unique defined one of upper/lower, involutive where defined.
std::optional<GroupElement> simple_right_star(const GroupElement& w, const NoncommutingPair& I);
std::optional<GroupElement> simple_left_star(const GroupElement& w, const NoncommutingPair& I);

// Heap-side availability test for the right lower star on an FC element:
// a maximal element labeled s covering a j labeled t that it alone covers.
bool right_lower_star_available_by_heap(const GroupElement& w, const NoncommutingPair& I);

}  // namespace a2cells
