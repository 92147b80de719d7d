#pragma once

#include <string>
#include <vector>

#include "a2cells/element.hpp"

namespace a2cells {

// Heap of a word: labeled poset on letter positions, with i < j comparable
// whenever the labels do not commute. Stores the Hasse covers and the full
// reachability relation. Immutable.
class Heap {
 public:
  Heap(const CoxeterSystem& sys, const Word& word);

  const CoxeterSystem& system() const { return *sys_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int label(int i) const { return labels_[i]; }
  // i <= j in the poset (reflexive).
  bool le(int i, int j) const { return reach_[static_cast<size_t>(i) * size() + j]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<int> minima() const;
  std::vector<int> maxima() const;
  // Level of each position in the lattice embedding (vertices drop to the
  // lowest level above everything they must cover).
  std::vector<int> levels() const;

 private:
  const CoxeterSystem* sys_;
  std::vector<int> labels_;
  std::vector<char> reach_;
  std::vector<std::pair<int, int>> covers_;
};

Heap heap_of_word(const CoxeterSystem& sys, const Word& word);

// Heap criterion for full commutativity: no cover with equal labels and no
// convex alternating cover chain of length m(s,t) >= 3.
bool heap_is_fc(const Heap& h);
// Requires the word to be reduced (Errc::not_reduced otherwise).
bool is_fc_reduced_word(const CoxeterSystem& sys, const Word& word);
bool is_fc(const GroupElement& w);
// Word criterion alternative: some word in the commutation class of a reduced
// word contains a long braid iff the element is not FC. Used for differential
// testing against the heap criterion.
bool is_fc_word_criterion(const CoxeterSystem& sys, const Word& reduced_word);

// Cartier-Foata canonical form of an FC element; layers listed first layer
// first, each layer sorted by generator index.
struct CFForm {
  std::vector<std::vector<int>> layers;

  friend bool operator==(const CFForm&, const CFForm&) = default;
};

CFForm cartier_foata(const GroupElement& w);  // Errc::not_fc
// The canonical reduced word of the CF form: layers multiplied last to first.
Word cf_word(const CFForm& cf);
std::string cf_to_string(const CoxeterSystem& sys, const CFForm& cf);

// Maximum antichain size, via Dilworth (minimum chain cover by bipartite
// matching on the reachability relation).
int width(const Heap& h);

enum class AClass { zero, one, two, more };

// FC a-value classifier: 0 for the identity, 1 for chain heaps, 2 for width
// two (requires an a(2)-finite system), MORE for width >= 3.
AClass fc_a_classify(const GroupElement& w);

// DOT rendering of the Hasse diagram, ranked by lattice level.
std::string heap_dot(const Heap& h);
// TikZ rendering of the same embedding (secondary format).
std::string heap_tikz(const Heap& h);

}  // namespace a2cells
