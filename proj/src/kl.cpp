#include "a2cells/kl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace a2cells {

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
  LaurentPoly p;
  p.add_term(coeff, exp);
  return p;
}

int LaurentPoly::degree() const {
  assert(!is_zero());
  return lo_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::valuation() const {
  assert(!is_zero());
  return lo_;
}

long long LaurentPoly::coeff(int exp) const {
  int k = exp - lo_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

void LaurentPoly::trim() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  size_t tail = coeffs_.size();
  while (coeffs_[tail - 1] == 0) --tail;
  if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
  coeffs_.resize(tail - lead);
  lo_ += static_cast<int>(lead);
}

void LaurentPoly::add_term(long long coeff, int exp) {
  if (coeff == 0) return;
  if (coeffs_.empty()) {
    lo_ = exp;
    coeffs_.assign(1, coeff);
    return;
  }
  if (exp < lo_) {
    coeffs_.insert(coeffs_.begin(), lo_ - exp, 0);
    lo_ = exp;
  } else if (exp > lo_ + static_cast<int>(coeffs_.size()) - 1) {
    coeffs_.resize(exp - lo_ + 1, 0);
  }
  coeffs_[exp - lo_] += coeff;
  trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, long long c, int e) {
  if (other.is_zero() || c == 0) return;
  int olo = other.lo_ + e;
  int ohi = olo + static_cast<int>(other.coeffs_.size()) - 1;
  if (coeffs_.empty()) {
    lo_ = olo;
    coeffs_.assign(other.coeffs_.size(), 0);
  } else {
    if (olo < lo_) {
      coeffs_.insert(coeffs_.begin(), lo_ - olo, 0);
      lo_ = olo;
    }
    int hi = lo_ + static_cast<int>(coeffs_.size()) - 1;
    if (ohi > hi) coeffs_.resize(ohi - lo_ + 1, 0);
  }
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[olo - lo_ + k] += c * other.coeffs_[k];
  trim();
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (size_t k = 0; k < a.coeffs_.size(); ++k)
    if (a.coeffs_[k] != 0) out.add_scaled(b, a.coeffs_[k], a.lo_ + static_cast<int>(k));
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    long long c = coeffs_[k];
    if (c == 0) continue;
    int e = lo_ + k;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    long long ac = c < 0 ? -c : c;
    first = false;
    if (ac != 1 || e == 0) out << ac;
    if (e != 0) {
      out << "v";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

KLOracle::KLOracle(const CoxeterSystem& sys, size_t bound) : sys_(&sys) {
  if (sys.type() == CoxType::Ctilde || (sys.type() == CoxType::I2 && sys.param1() == kBondInfinity))
    fail(Errc::group_infinite, sys.name() + " is infinite; the oracle handles finite groups only");
  enumerate_group(bound);
  fill_kl_table();
}

void KLOracle::enumerate_group(size_t bound) {
  const CoxeterSystem& sys = *sys_;
  GroupElement e = GroupElement::identity(sys);
  elems_.push_back(e);
  index_[canonical_key(e)] = 0;
  len_.push_back(0);
  for (size_t at = 0; at < elems_.size(); ++at) {
    GroupElement w = elems_[at];  // copy: elems_ may reallocate
    for (int s = 0; s < sys.rank(); ++s) {
      if (w.right_descent(s)) continue;
      GroupElement ws = w.times_gen(s);
      Key k = canonical_key(ws);
      if (index_.count(k)) continue;
      if (elems_.size() >= bound)
        fail(Errc::group_too_large,
             sys.name() + " exceeds the oracle bound of " + std::to_string(bound) + " elements (it may be infinite)");
      index_[k] = static_cast<int>(elems_.size());
      elems_.push_back(ws);
      len_.push_back(len_[at] + 1);
    }
  }
  // BFS by right multiplication visits elements in length order.
  int n = size();
  lmul_.assign(n, std::vector<int>(sys.rank(), -1));
  rmul_.assign(n, std::vector<int>(sys.rank(), -1));
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < sys.rank(); ++s) {
      lmul_[x][s] = index_.at(canonical_key(elems_[x].gen_times(s)));
      rmul_[x][s] = index_.at(canonical_key(elems_[x].times_gen(s)));
    }
}

int KLOracle::index_of(const GroupElement& w) const { return index_of_key(canonical_key(w)); }

int KLOracle::index_of_key(const Key& k) const {
  auto it = index_.find(k);
  return it == index_.end() ? -1 : it->second;
}

void KLOracle::fill_kl_table() {
  int n = size();
  cw_.resize(n);
  mu_.resize(n);
  cw_[0] = {{0, LaurentPoly::monomial(1, 0)}};  // C_e = T_e
  std::vector<LaurentPoly> dense(n);
  for (int w = 1; w < n; ++w) {
    int s = -1;
    for (int g = 0; g < sys_->rank(); ++g)
      if (len_[lmul_[w][g]] < len_[w]) {
        s = g;
        break;
      }
    int w1 = lmul_[w][s];  // s w < w
    // C_s C_{w1} in T coordinates: T_y -> T_{sy} + v^{+-1} T_y.
    std::vector<int> touched;
    auto bump = [&](int y, const LaurentPoly& f, long long c, int e) {
      if (dense[y].is_zero()) touched.push_back(y);
      dense[y].add_scaled(f, c, e);
    };
    for (const auto& [y, f] : cw_[w1]) {
      int sy = lmul_[y][s];
      bump(sy, f, 1, 0);
      bump(y, f, 1, len_[sy] > len_[y] ? -1 : 1);
    }
    // Subtract mu(y, w1) C_y over y with sy < y.
    for (const auto& [y, m] : mu_[w1]) {
      if (len_[lmul_[y][s]] > len_[y]) continue;
      for (const auto& [z, f] : cw_[y]) bump(z, f, -m, 0);
    }
    std::sort(touched.begin(), touched.end());
    auto& row = cw_[w];
    for (int y : touched) {
      if (!dense[y].is_zero()) {
        // Normalization invariants: p_{w,w} = 1 and negative exponents only
        // below the top.
        assert(y != w || (dense[y].degree() == 0 && dense[y].coeff(0) == 1));
        assert(y == w || dense[y].degree() <= -1);
        row.emplace_back(y, dense[y]);
        long long m = dense[y].coeff(-1);
        if (y != w && m != 0) mu_[w].emplace_back(y, m);
      }
      dense[y] = LaurentPoly();
    }
  }
}

HeckeElement KLOracle::kl_basis_element(int w) const {
  HeckeElement out;
  for (const auto& [y, f] : cw_[w]) out[y] = f;
  return out;
}

LaurentPoly KLOracle::kl_p(int y, int w) const {
  for (const auto& [z, f] : cw_[w])
    if (z == y) return f;
  return {};
}

long long KLOracle::mu(int y, int w) const {
  for (const auto& [z, m] : mu_[w])
    if (z == y) return m;
  return 0;
}

HeckeElement KLOracle::hecke_multiply(const HeckeElement& a, const HeckeElement& b) const {
  // T_x T_s = T_{xs} when the length goes up, T_{xs} + (v - v^-1) T_x when it
  // goes down; each right factor T_y is expanded letter by letter along a
  // reduced word of y.
  HeckeElement out;
  for (const auto& [x, f] : a)
    for (const auto& [y, g] : b) {
      Word word = canonical_word(elems_[y]);
      std::map<int, LaurentPoly> cur{{x, f * g}};
      for (int s : word.letters) {
        std::map<int, LaurentPoly> next;
        for (const auto& [z, h] : cur) {
          int zs = rmul_[z][s];
          next[zs] += h;
          if (len_[zs] < len_[z]) {
            auto& c = next[z];
            c.add_scaled(h, 1, 1);
            c.add_scaled(h, -1, -1);
          }
        }
        cur = std::move(next);
      }
      for (const auto& [z, h] : cur) out[z] += h;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

void KLOracle::apply_cs_left(int s, const std::vector<LaurentPoly>& in, std::vector<LaurentPoly>& out) const {
  // C-basis action: C_s C_z = C_{sz} + sum mu(u,z) C_u over u with su < u
  // when sz > z, and (v + v^-1) C_z when sz < z.
  int n = size();
  for (auto& p : out) p = LaurentPoly();
  for (int z = 0; z < n; ++z) {
    const LaurentPoly& g = in[z];
    if (g.is_zero()) continue;
    int sz = lmul_[z][s];
    if (len_[sz] < len_[z]) {
      out[z].add_scaled(g, 1, 1);
      out[z].add_scaled(g, 1, -1);
    } else {
      out[sz] += g;
      for (const auto& [u, m] : mu_[z])
        if (len_[lmul_[u][s]] < len_[u]) out[u].add_scaled(g, m, 0);
    }
  }
}

std::map<int, LaurentPoly> KLOracle::structure_constants(int x, int y) const {
  int n = size();
  // f[u] = expansion of C_u C_y in the C basis, filled along the length order.
  std::vector<std::vector<LaurentPoly>> f(n);
  f[0].assign(n, LaurentPoly());
  f[0][y] = LaurentPoly::monomial(1, 0);
  std::vector<LaurentPoly> tmp(n);
  for (int u = 1; u <= x; ++u) {
    int s = -1;
    for (int g = 0; g < sys_->rank(); ++g)
      if (len_[lmul_[u][g]] < len_[u]) {
        s = g;
        break;
      }
    int u1 = lmul_[u][s];
    apply_cs_left(s, f[u1], tmp);
    for (const auto& [z, m] : mu_[u1])
      if (len_[lmul_[z][s]] < len_[z])
        for (int t = 0; t < n; ++t) tmp[t].add_scaled(f[z][t], -m, 0);
    f[u] = tmp;
  }
  std::map<int, LaurentPoly> out;
  for (int z = 0; z < n; ++z)
    if (!f[x][z].is_zero()) out[z] = f[x][z];
  return out;
}

const std::vector<int>& KLOracle::a_values() const {
  if (!a_.empty()) return a_;
  int n = size();
  a_.assign(n, 0);
  // For each y, expand C_x C_y for every x by walking up the length order.
  std::vector<std::vector<LaurentPoly>> f(n);
  std::vector<LaurentPoly> tmp(n);
  for (int y = 0; y < n; ++y) {
    f[0].assign(n, LaurentPoly());
    f[0][y] = LaurentPoly::monomial(1, 0);
    for (int x = 1; x < n; ++x) {
      int s = -1;
      for (int g = 0; g < sys_->rank(); ++g)
        if (len_[lmul_[x][g]] < len_[x]) {
          s = g;
          break;
        }
      int x1 = lmul_[x][s];
      apply_cs_left(s, f[x1], tmp);
      for (const auto& [z, m] : mu_[x1])
        if (len_[lmul_[z][s]] < len_[z])
          for (int t = 0; t < n; ++t) tmp[t].add_scaled(f[z][t], -m, 0);
      f[x] = tmp;
      for (int z = 0; z < n; ++z)
        if (!f[x][z].is_zero()) a_[z] = std::max(a_[z], f[x][z].degree());
    }
    // x = 0 contributes h_{e,y,y} = 1 of degree 0; already covered by init.
  }
  return a_;
}

namespace {

// Iterative Tarjan SCC.
std::vector<std::vector<int>> scc(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> idx(n, -1), low(n, 0), on(n, 0), stk;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (idx[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    idx[root] = low[root] = counter++;
    stk.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e < adj[v].size()) {
        int u = adj[v][e++];
        if (idx[u] < 0) {
          idx[u] = low[u] = counter++;
          stk.push_back(u);
          on[u] = 1;
          call.push_back({u, 0});
        } else if (on[u]) {
          low[v] = std::min(low[v], idx[u]);
        }
      } else {
        if (low[v] == idx[v]) {
          std::vector<int> comp;
          for (;;) {
            int u = stk.back();
            stk.pop_back();
            on[u] = 0;
            comp.push_back(u);
            if (u == v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        int v0 = v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v0]);
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

OracleCells KLOracle::cells_from_definition() const {
  int n = size();
  int rank = sys_->rank();
  std::vector<std::vector<int>> left_adj(n), right_adj(n), both_adj(n);
  // Arcs y -> x whenever x appears in C_s C_y (left) or C_y C_s (right):
  // the length-increasing product plus the mu-correction terms.
  for (int y = 0; y < n; ++y) {
    for (int s = 0; s < rank; ++s) {
      if (len_[lmul_[y][s]] > len_[y]) left_adj[y].push_back(lmul_[y][s]);
      if (len_[rmul_[y][s]] > len_[y]) right_adj[y].push_back(rmul_[y][s]);
    }
    for (const auto& [u, m] : mu_[y]) {
      bool l = false, r = false;
      for (int s = 0; s < rank && !(l && r); ++s) {
        bool y_up_l = len_[lmul_[y][s]] > len_[y], u_down_l = len_[lmul_[u][s]] < len_[u];
        bool y_up_r = len_[rmul_[y][s]] > len_[y], u_down_r = len_[rmul_[u][s]] < len_[u];
        l = l || (y_up_l && u_down_l);
        r = r || (y_up_r && u_down_r);
      }
      if (l) left_adj[y].push_back(u);
      if (r) right_adj[y].push_back(u);
    }
  }
  for (int y = 0; y < n; ++y) {
    both_adj[y] = left_adj[y];
    both_adj[y].insert(both_adj[y].end(), right_adj[y].begin(), right_adj[y].end());
  }
  return {scc(left_adj), scc(right_adj), scc(both_adj)};
}

}  // namespace a2cells
