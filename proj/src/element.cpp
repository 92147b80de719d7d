#include "a2cells/element.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace a2cells {

namespace {

void require_arithmetic(const CoxeterSystem& sys) {
  if (!sys.arithmetic_ok())
    fail(Errc::bad_bond, "system has bonds outside {2,3,4,5,inf}; exact element arithmetic unavailable");
}

}  // namespace

// Rank-one update helpers: sigma_s = I + e_s r^T with r_s = -2 and
// r_t = 2cos(pi/m(s,t)) for t != s.
class ElementOps {
 public:
  static GroupElement make_identity(const CoxeterSystem& sys) {
    require_arithmetic(sys);
    GroupElement w(&sys);
    int n = sys.rank();
    w.fwd_.assign(static_cast<size_t>(n) * n, RingScalar{});
    for (int i = 0; i < n; ++i) w.fwd_[static_cast<size_t>(i) * n + i] = {1, 0};
    w.inv_ = w.fwd_;
    return w;
  }

  // In place: M <- M * sigma_s, i.e. col_j += r_j * col_s for all j.
  static void mul_right(const CoxeterSystem& sys, std::vector<RingScalar>& m, int s) {
    int n = sys.rank();
    std::vector<RingScalar> col_s(n);
    for (int i = 0; i < n; ++i) col_s[i] = m[static_cast<size_t>(i) * n + s];
    for (int j = 0; j < n; ++j) {
      RingScalar r = j == s ? RingScalar{-2, 0} : sys.bond_scalar(sys.bond(s, j));
      if (is_zero(r)) continue;
      for (int i = 0; i < n; ++i) {
        auto& e = m[static_cast<size_t>(i) * n + j];
        e = radd(e, rmul(sys.ring(), r, col_s[i]));
      }
    }
  }

  // In place: M <- sigma_s * M, i.e. row_s += sum_k r_k row_k.
  static void mul_left(const CoxeterSystem& sys, std::vector<RingScalar>& m, int s) {
    int n = sys.rank();
    std::vector<RingScalar> acc(n, RingScalar{});
    for (int k = 0; k < n; ++k) {
      RingScalar r = k == s ? RingScalar{-2, 0} : sys.bond_scalar(sys.bond(s, k));
      if (is_zero(r)) continue;
      for (int j = 0; j < n; ++j)
        acc[j] = radd(acc[j], rmul(sys.ring(), r, m[static_cast<size_t>(k) * n + j]));
    }
    for (int j = 0; j < n; ++j) {
      auto& e = m[static_cast<size_t>(s) * n + j];
      e = radd(e, acc[j]);
    }
  }

  static std::vector<RingScalar> matmul(const CoxeterSystem& sys, const std::vector<RingScalar>& a,
                                        const std::vector<RingScalar>& b) {
    int n = sys.rank();
    std::vector<RingScalar> out(static_cast<size_t>(n) * n, RingScalar{});
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        RingScalar aik = a[static_cast<size_t>(i) * n + k];
        if (is_zero(aik)) continue;
        for (int j = 0; j < n; ++j) {
          auto& o = out[static_cast<size_t>(i) * n + j];
          o = radd(o, rmul(sys.ring(), aik, b[static_cast<size_t>(k) * n + j]));
        }
      }
    return out;
  }

  static GroupElement make(const CoxeterSystem* sys, std::vector<RingScalar> fwd, std::vector<RingScalar> inv) {
    GroupElement w(sys);
    w.fwd_ = std::move(fwd);
    w.inv_ = std::move(inv);
    return w;
  }

  static const std::vector<RingScalar>& fwd(const GroupElement& w) { return w.fwd_; }
  static const std::vector<RingScalar>& inv(const GroupElement& w) { return w.inv_; }
};

GroupElement GroupElement::identity(const CoxeterSystem& sys) { return ElementOps::make_identity(sys); }

GroupElement GroupElement::generator(const CoxeterSystem& sys, int s) {
  if (s < 0 || s >= sys.rank()) fail(Errc::bad_word, "generator index out of range");
  return identity(sys).times_gen(s);
}

GroupElement GroupElement::from_word(const CoxeterSystem& sys, const Word& word) {
  GroupElement w = identity(sys);
  for (int s : word.letters) {
    if (s < 0 || s >= sys.rank()) fail(Errc::bad_word, "generator index out of range");
    w = w.times_gen(s);
  }
  return w;
}

GroupElement GroupElement::times_gen(int s) const {
  GroupElement out = *this;
  ElementOps::mul_right(*sys_, out.fwd_, s);
  ElementOps::mul_left(*sys_, out.inv_, s);
  return out;
}

GroupElement GroupElement::gen_times(int s) const {
  GroupElement out = *this;
  ElementOps::mul_left(*sys_, out.fwd_, s);
  ElementOps::mul_right(*sys_, out.inv_, s);
  return out;
}

GroupElement GroupElement::inverse() const {
  GroupElement out(sys_);
  out.fwd_ = inv_;
  out.inv_ = fwd_;
  return out;
}

GroupElement inverse(const GroupElement& x) { return x.inverse(); }

bool GroupElement::is_identity() const {
  int n = sys_->rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& e = fwd_[static_cast<size_t>(i) * n + j];
      if (i == j ? (e != RingScalar{1, 0}) : !is_zero(e)) return false;
    }
  return true;
}

namespace {

// Sign dichotomy: a column of an element matrix, read as a root, is either
// all >= 0 or all <= 0 and never mixed.
bool column_negative(const CoxeterSystem& sys, const std::vector<RingScalar>& m, int s) {
  int n = sys.rank();
  int seen = 0;
  for (int i = 0; i < n; ++i) {
    int sg = ring_sign(sys.ring(), m[static_cast<size_t>(i) * n + s]);
    if (sg > 0) {
      assert(seen <= 0 && "root-sign dichotomy violated");
      return false;
    }
    if (sg < 0) seen = -1;
  }
  assert(seen < 0 && "zero column cannot occur in a reflection image");
  return true;
}

}  // namespace

bool GroupElement::right_descent(int s) const { return column_negative(*sys_, fwd_, s); }
bool GroupElement::left_descent(int s) const { return column_negative(*sys_, inv_, s); }

std::vector<int> GroupElement::right_descents() const {
  std::vector<int> out;
  for (int s = 0; s < sys_->rank(); ++s)
    if (right_descent(s)) out.push_back(s);
  return out;
}

std::vector<int> GroupElement::left_descents() const {
  std::vector<int> out;
  for (int s = 0; s < sys_->rank(); ++s)
    if (left_descent(s)) out.push_back(s);
  return out;
}

void check_same_system(const GroupElement& x, const GroupElement& y) {
  if (!x.system().same_as(y.system())) fail(Errc::system_mismatch, "elements belong to different systems");
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  check_same_system(x, y);
  const CoxeterSystem& sys = x.system();
  return ElementOps::make(&sys, ElementOps::matmul(sys, ElementOps::fwd(x), ElementOps::fwd(y)),
                          ElementOps::matmul(sys, ElementOps::inv(y), ElementOps::inv(x)));
}

bool operator==(const GroupElement& x, const GroupElement& y) {
  check_same_system(x, y);
  return ElementOps::fwd(x) == ElementOps::fwd(y);
}

Word canonical_word(const GroupElement& w) {
  Word out;
  GroupElement cur = w;
  while (!cur.is_identity()) {
    int s = 0;
    int n = cur.system().rank();
    for (; s < n; ++s)
      if (cur.left_descent(s)) break;
    assert(s < n);
    out.letters.push_back(s);
    cur = cur.gen_times(s);
  }
  return out;
}

int length(const GroupElement& w) { return static_cast<int>(canonical_word(w).letters.size()); }

Key key_of_word(const Word& w) {
  Key k;
  k.reserve(w.letters.size());
  for (int s : w.letters) k.push_back(static_cast<char>(s));
  return k;
}

Word word_of_key(const Key& k) {
  Word w;
  for (char c : k) w.letters.push_back(static_cast<unsigned char>(c));
  return w;
}

Key canonical_key(const GroupElement& w) { return key_of_word(canonical_word(w)); }

bool weak_leq_right(const GroupElement& x, const GroupElement& w) {
  check_same_system(x, w);
  GroupElement z = multiply(x.inverse(), w);
  return length(x) + length(z) == length(w);
}

bool weak_leq_left(const GroupElement& x, const GroupElement& w) {
  check_same_system(x, w);
  GroupElement z = multiply(w, x.inverse());
  return length(x) + length(z) == length(w);
}

std::string word_to_string(const CoxeterSystem& sys, const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += sys.label(w.letters[i]);
  }
  return out;
}

std::string element_to_string(const GroupElement& w) { return word_to_string(w.system(), canonical_word(w)); }

Word parse_word(const CoxeterSystem& sys, const std::string& text) {
  Word w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int idx = sys.index_of(tok);
    if (idx < 0) fail(Errc::bad_word, "unknown generator label \"" + tok + "\"");
    w.letters.push_back(idx);
  }
  return w;
}

GroupElement parse_element(const CoxeterSystem& sys, const std::string& text) {
  return GroupElement::from_word(sys, parse_word(sys, text));
}

}  // namespace a2cells
