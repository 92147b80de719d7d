#include "a2cells/heap.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace a2cells {

Heap::Heap(const CoxeterSystem& sys, const Word& word) : sys_(&sys), labels_(word.letters) {
  int q = size();
  reach_.assign(static_cast<size_t>(q) * q, 0);
  // Reflexive-transitive closure of { i < j : m(label_i, label_j) != 2 }.
  for (int j = 0; j < q; ++j) {
    reach_[static_cast<size_t>(j) * q + j] = 1;
    for (int k = 0; k < j; ++k) {
      if (sys.bond(labels_[k], labels_[j]) == 2) continue;
      for (int i = 0; i <= k; ++i)
        if (reach_[static_cast<size_t>(i) * q + k]) reach_[static_cast<size_t>(i) * q + j] = 1;
    }
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      if (!le(i, j)) continue;
      bool covered = false;
      for (int k = i + 1; k < j && !covered; ++k)
        if (le(i, k) && le(k, j)) covered = true;
      if (!covered) covers_.emplace_back(i, j);
    }
}

Heap heap_of_word(const CoxeterSystem& sys, const Word& word) { return Heap(sys, word); }

std::vector<int> Heap::minima() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    bool minimal = true;
    for (int i = 0; i < j && minimal; ++i)
      if (le(i, j)) minimal = false;
    if (minimal) out.push_back(j);
  }
  return out;
}

std::vector<int> Heap::maxima() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = i + 1; j < size() && maximal; ++j)
      if (le(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<int> Heap::levels() const {
  std::vector<int> lvl(size(), 0);
  for (int j = 0; j < size(); ++j)
    for (int i = 0; i < j; ++i)
      if (sys_->bond(labels_[i], labels_[j]) != 2) lvl[j] = std::max(lvl[j], lvl[i] + 1);
  return lvl;
}

bool heap_is_fc(const Heap& h) {
  const CoxeterSystem& sys = h.system();
  for (auto [i, j] : h.covers())
    if (h.label(i) == h.label(j)) return false;

  // Cover chains with labels alternating in {s,t}; a chain of length m(s,t)
  // that is convex (its interval contains nothing else) is a long braid.
  int q = h.size();
  std::vector<std::vector<int>> succ(q);
  for (auto [i, j] : h.covers()) succ[i].push_back(j);

  std::vector<int> chain;
  auto convex = [&](int a, int b, int len) {
    int count = 0;
    for (int k = a; k <= b; ++k)
      if (h.le(a, k) && h.le(k, b)) ++count;
    return count == len;
  };
  // DFS extension of an alternating chain; labels alternate automatically by
  // filtering successors on the expected label.
  auto dfs = [&](auto&& self, int m, int s, int t) -> bool {
    int last = chain.back();
    if (static_cast<int>(chain.size()) == m) return convex(chain.front(), last, m);
    int want = h.label(last) == s ? t : s;
    for (int nxt : succ[last]) {
      if (h.label(nxt) != want) continue;
      chain.push_back(nxt);
      if (self(self, m, s, t)) return true;
      chain.pop_back();
    }
    return false;
  };
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = 0; t < sys.rank(); ++t) {
      if (s == t) continue;
      int m = sys.bond(s, t);
      if (m < 3 || m == kBondInfinity) continue;
      for (int i = 0; i < q; ++i) {
        if (h.label(i) != s) continue;
        chain.assign(1, i);
        if (dfs(dfs, m, s, t)) return false;
      }
    }
  return true;
}

bool is_fc_reduced_word(const CoxeterSystem& sys, const Word& word) {
  GroupElement w = GroupElement::from_word(sys, word);
  if (length(w) != static_cast<int>(word.letters.size())) fail(Errc::not_reduced, "word is not reduced");
  return heap_is_fc(Heap(sys, word));
}

bool is_fc(const GroupElement& w) { return heap_is_fc(Heap(w.system(), canonical_word(w))); }

bool is_fc_word_criterion(const CoxeterSystem& sys, const Word& reduced_word) {
  // BFS over the commutation class; a long braid subword anywhere in the
  // class means the element is not FC.
  auto has_long_braid = [&](const std::vector<int>& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      int s = w[i], t = w[i + 1];
      if (s == t) return true;  // not reduced; cannot occur on reduced input
      int m = sys.bond(s, t);
      if (m == 2 || m == kBondInfinity) continue;
      size_t k = i + 2;
      int run = 2;
      while (k < w.size() && w[k] == (run % 2 == 0 ? s : t)) {
        ++run;
        ++k;
        if (run == m) return true;
      }
    }
    return false;
  };
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{reduced_word.letters};
  seen.insert(reduced_word.letters);
  while (!queue.empty()) {
    std::vector<int> w = std::move(queue.back());
    queue.pop_back();
    if (has_long_braid(w)) return false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (sys.bond(w[i], w[i + 1]) != 2) continue;
      std::swap(w[i], w[i + 1]);
      if (seen.insert(w).second) queue.push_back(w);
      std::swap(w[i], w[i + 1]);
    }
  }
  return true;
}

CFForm cartier_foata(const GroupElement& w) {
  if (!is_fc(w)) fail(Errc::not_fc, "element is not fully commutative");
  CFForm cf;
  GroupElement x = w;
  while (!x.is_identity()) {
    std::vector<int> layer = x.right_descents();  // sorted by index already
    for (int s : layer) x = x.times_gen(s);
    cf.layers.push_back(std::move(layer));
  }
  return cf;
}

Word cf_word(const CFForm& cf) {
  Word w;
  for (auto it = cf.layers.rbegin(); it != cf.layers.rend(); ++it)
    for (int s : *it) w.letters.push_back(s);
  return w;
}

std::string cf_to_string(const CoxeterSystem& sys, const CFForm& cf) {
  std::string out;
  for (auto it = cf.layers.rbegin(); it != cf.layers.rend(); ++it) {
    if (!out.empty()) out += '.';
    for (size_t i = 0; i < it->size(); ++i) {
      if (i) out += ',';
      out += sys.label((*it)[i]);
    }
  }
  return out;
}

int width(const Heap& h) {
  // Dilworth: width = q - maximum matching of the strict comparability
  // bipartite graph.
  int q = h.size();
  std::vector<int> match_right(q, -1);
  std::vector<char> used;
  auto augment = [&](auto&& self, int i) -> bool {
    for (int j = 0; j < q; ++j) {
      if (i == j || !h.le(i, j) || used[j]) continue;
      used[j] = 1;
      if (match_right[j] < 0 || self(self, match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int i = 0; i < q; ++i) {
    used.assign(q, 0);
    if (augment(augment, i)) ++matched;
  }
  return q - matched;
}

AClass fc_a_classify(const GroupElement& w) {
  if (!is_fc(w)) fail(Errc::not_fc, "element is not fully commutative");
  if (w.is_identity()) return AClass::zero;
  Heap h(w.system(), canonical_word(w));
  int n = width(h);
  if (n == 1) return AClass::one;
  if (n >= 3) return AClass::more;
  // Width 2 equals a-value 2 only in a(2)-finite systems; refuse to guess
  // elsewhere.
  if (!w.system().classify().a2_finite)
    fail(Errc::not_a2_finite, "width-2 classification needs an a(2)-finite system");
  return AClass::two;
}

std::string heap_dot(const Heap& h) {
  std::ostringstream out;
  out << "digraph heap {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < h.size(); ++i)
    out << "  p" << i << " [label=\"" << h.system().label(h.label(i)) << "\"];\n";
  std::vector<int> lvl = h.levels();
  int max_lvl = lvl.empty() ? -1 : *std::max_element(lvl.begin(), lvl.end());
  for (int l = 0; l <= max_lvl; ++l) {
    out << "  { rank=same;";
    for (int i = 0; i < h.size(); ++i)
      if (lvl[i] == l) out << " p" << i << ";";
    out << " }\n";
  }
  for (auto [i, j] : h.covers()) out << "  p" << i << " -> p" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string heap_tikz(const Heap& h) {
  std::ostringstream out;
  std::vector<int> lvl = h.levels();
  out << "\\begin{tikzpicture}\n";
  for (int i = 0; i < h.size(); ++i)
    out << "  \\node[circle,draw,inner sep=1.5pt] (p" << i << ") at (" << h.label(i) << "," << lvl[i] << ") {"
        << h.system().label(h.label(i)) << "};\n";
  for (auto [i, j] : h.covers()) out << "  \\draw (p" << i << ") -- (p" << j << ");\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace a2cells
