#pragma once

#include <string>
#include <vector>

#include "a2cells/coxeter.hpp"

namespace a2cells {

struct Word {
  std::vector<int> letters;  // generator indices

  friend bool operator==(const Word&, const Word&) = default;
};

// Canonical-word bytes, used as hash/map key for elements.
using Key = std::string;

// Group element in the geometric representation: the exact matrix of the
// action on the simple-root basis, plus the matrix of the inverse so that
// left and right descents are both column sign tests. Immutable; inverse is
// a swap. Works uniformly in finite, affine and indefinite systems.
class GroupElement {
 public:
  static GroupElement identity(const CoxeterSystem& sys);
  static GroupElement generator(const CoxeterSystem& sys, int s);
  static GroupElement from_word(const CoxeterSystem& sys, const Word& word);

  const CoxeterSystem& system() const { return *sys_; }

  GroupElement times_gen(int s) const;      // w * sigma_s
  GroupElement gen_times(int s) const;      // sigma_s * w
  GroupElement inverse() const;

  bool is_identity() const;
  bool right_descent(int s) const;  // w(alpha_s) negative
  bool left_descent(int s) const;   // w^-1(alpha_s) negative
  std::vector<int> right_descents() const;
  std::vector<int> left_descents() const;

  friend GroupElement multiply(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement& x, const GroupElement& y);

 private:
  GroupElement(const CoxeterSystem* sys) : sys_(sys) {}
  const RingScalar& fwd(int i, int j) const { return fwd_[static_cast<size_t>(i) * sys_->rank() + j]; }
  const CoxeterSystem* sys_;
  std::vector<RingScalar> fwd_, inv_;  // rank x rank each, row major

  friend class ElementOps;
};

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);

// Reduced word obtained by repeatedly stripping the smallest-index left
// descent; deterministic, used as the canonical key of an element.
Word canonical_word(const GroupElement& w);
int length(const GroupElement& w);
Key canonical_key(const GroupElement& w);
Key key_of_word(const Word& w);
Word word_of_key(const Key& k);

// Right (left) weak Bruhat order: x <=_R w iff l(x) + l(x^-1 w) = l(w).
bool weak_leq_right(const GroupElement& x, const GroupElement& w);
bool weak_leq_left(const GroupElement& x, const GroupElement& w);

// Serialization: canonical word as comma-joined generator labels.
std::string element_to_string(const GroupElement& w);
std::string word_to_string(const CoxeterSystem& sys, const Word& w);
// Parse a comma-joined label word; Errc::bad_word on unknown labels.
Word parse_word(const CoxeterSystem& sys, const std::string& text);
GroupElement parse_element(const CoxeterSystem& sys, const std::string& text);

// (length, lexicographic) order on canonical keys; the deterministic order of
// every member list in reports.
inline bool key_less(const Key& a, const Key& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void check_same_system(const GroupElement& x, const GroupElement& y);

}  // namespace a2cells
