#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "a2cells/element.hpp"

namespace a2cells {

// Sparse integer Laurent polynomial in v, stored as a dense coefficient
// window. Zero is the empty window.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long long coeff, int exp);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;     // max exponent; requires nonzero
  int valuation() const;  // min exponent; requires nonzero
  long long coeff(int exp) const;

  void add_term(long long coeff, int exp);
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  // this += c * v^e * other
  void add_scaled(const LaurentPoly& other, long long c, int e = 0);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string to_string() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<long long> coeffs_;  // coeffs_[k] = coefficient of v^(lo_+k)
};

// Hecke algebra element in T-basis coordinates: element index -> coefficient.
using HeckeElement = std::map<int, LaurentPoly>;

struct OracleCells {
  std::vector<std::vector<int>> left, right, two_sided;  // element indices per cell
};

// From-definitions Kazhdan-Lusztig machinery for a small finite group:
// T-basis multiplication with T_s^2 = 1 + (v - v^-1) T_s, KL basis elements
// C_s = T_s + v^-1 built by the mu-corrected recursion, structure constants,
// a-function and cells from the preorder closures.
class KLOracle {
 public:
  // Enumerates the group (Errc::group_too_large past the bound,
  // Errc::group_infinite for types known to be infinite) and fills the KL
  // table.
  KLOracle(const CoxeterSystem& sys, size_t bound = 500);

  const CoxeterSystem& system() const { return *sys_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const GroupElement& element(int i) const { return elems_[i]; }
  int element_length(int i) const { return len_[i]; }
  int index_of(const GroupElement& w) const;
  int index_of_key(const Key& k) const;

  // sigma_s * x and x * sigma_s as indices.
  int left_mult(int x, int s) const { return lmul_[x][s]; }
  int right_mult(int x, int s) const { return rmul_[x][s]; }

  // KL basis element C_w in T-basis coordinates.
  HeckeElement kl_basis_element(int w) const;
  // KL polynomial p_{y,w} (coefficient of T_y in C_w).
  LaurentPoly kl_p(int y, int w) const;
  long long mu(int y, int w) const;

  // T-basis product extended bilinearly.
  HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) const;
  // Expansion of C_x C_y in the C basis: z -> h_{x,y,z}.
  std::map<int, LaurentPoly> structure_constants(int x, int y) const;

  // a(z) = max over x,y of deg_v h_{x,y,z}, for every z. Cached after the
  // first call; this is the expensive full-pair scan.
  const std::vector<int>& a_values() const;
  int a_value(int z) const { return a_values()[z]; }

  // Cells as strongly connected components of the preorder graphs.
  OracleCells cells_from_definition() const;

 private:
  void enumerate_group(size_t bound);
  void fill_kl_table();
  // C_s * X and X * C_s in C-basis coordinates (dense vector over W).
  void apply_cs_left(int s, const std::vector<LaurentPoly>& in, std::vector<LaurentPoly>& out) const;

  const CoxeterSystem* sys_;
  std::vector<GroupElement> elems_;
  std::unordered_map<Key, int> index_;
  std::vector<int> len_;
  std::vector<std::vector<int>> lmul_, rmul_;
  std::vector<std::vector<std::pair<int, LaurentPoly>>> cw_;  // T-expansion of C_w, sorted by index
  std::vector<std::vector<std::pair<int, long long>>> mu_;    // nonzero mu(y,w) per w
  mutable std::vector<int> a_;                                // lazy a-values
};

}  // namespace a2cells
