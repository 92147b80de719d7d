#include "a2cells/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include <json.hpp>

namespace a2cells {

namespace {

std::vector<std::vector<int>> path_matrix(int n, const std::vector<std::pair<std::pair<int, int>, int>>& heavy) {
  // Path 1--2--...--n with all simple edges, then the given heavy overrides
  // (vertex pairs are 1-based).
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  for (auto& [e, w] : heavy) {
    m[e.first - 1][e.second - 1] = m[e.second - 1][e.first - 1] = w;
  }
  return m;
}

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

long long parse_int(const std::string& s, bool* ok) {
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  *ok = end && *end == '\0' && !s.empty();
  return v;
}

}  // namespace

std::string bond_to_string(int m) { return m == kBondInfinity ? "inf" : std::to_string(m); }

RingScalar CoxeterSystem::bond_scalar(int m) const {
  switch (m) {
    case 2: return {0, 0};
    case 3: return {1, 0};
    case 4: return {0, 1};  // sqrt2
    case 5: return {0, 1};  // phi
    default: return {2, 0};  // infinity
  }
}

int CoxeterSystem::index_of(const std::string& label) const {
  for (int i = 0; i < rank_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

std::string CoxeterSystem::name() const {
  switch (type_) {
    case CoxType::A: return "A" + std::to_string(p1_);
    case CoxType::B: return "B" + std::to_string(p1_);
    case CoxType::Ctilde: return "Ctilde" + std::to_string(p1_);
    case CoxType::E: return "E(" + std::to_string(p1_) + "," + std::to_string(p2_) + ")";
    case CoxType::F: return "F" + std::to_string(p1_);
    case CoxType::H: return "H" + std::to_string(p1_);
    case CoxType::I2: return "I2(" + bond_to_string(p1_) + ")";
    case CoxType::Custom: return "Custom(rank " + std::to_string(rank_) + ")";
  }
  return "?";
}

void CoxeterSystem::validate_and_finish(std::vector<std::vector<int>> matrix) {
  rank_ = static_cast<int>(matrix.size());
  if (rank_ == 0) fail(Errc::invalid_rank, "system must have at least one generator");
  if (static_cast<int>(labels_.size()) != rank_) fail(Errc::bad_descriptor, "label count does not match matrix size");
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != rank_) fail(Errc::bad_descriptor, "generator labels must be unique");
  }
  bool has4 = false, has5 = false, big_bond = false;
  matrix_.assign(static_cast<size_t>(rank_) * rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(matrix[i].size()) != rank_) fail(Errc::asymmetric_matrix, "matrix is not square");
    for (int j = 0; j < rank_; ++j) {
      int m = matrix[i][j];
      if (m < 1) fail(Errc::bad_bond, "bond m(s,t) < 1");
      if (i == j && m != 1) fail(Errc::bad_bond, "diagonal bonds must be 1");
      if (i != j && m == 1) fail(Errc::bad_bond, "off-diagonal bonds must be >= 2");
      if (matrix[j][i] != m) fail(Errc::asymmetric_matrix, "bond matrix is not symmetric");
      if (i != j && m != kBondInfinity && m > 5) big_bond = true;
      if (m == 4) has4 = true;
      if (m == 5) has5 = true;
      matrix_[static_cast<size_t>(i) * rank_ + j] = m;
    }
  }
  // Bonds outside {2,3,4,5,inf}, or 4 and 5 together, have no home in the
  // three supported scalar rings. Such systems can still be classified, but
  // element arithmetic on them is refused.
  arithmetic_ok_ = !big_bond && !(has4 && has5);
  ring_ = has4 ? RingTag::sqrt2 : has5 ? RingTag::golden : RingTag::integer;

  // Classification is cached at construction; reducible systems get nullopt.
  std::vector<int> seen(rank_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < rank_; ++u)
      if (!seen[u] && adjacent(v, u)) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    classification_ = std::nullopt;
    return;
  }

  Classification c;
  bool complete = true;
  for (int i = 0; i < rank_ && complete; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (!adjacent(i, j)) {
        complete = false;
        break;
      }
  if (complete) {
    c.a2_finite = true;
    classification_ = c;
    return;
  }

  // Not complete, so rank >= 3 here. Acyclic diagrams are matched against the
  // families with paths or a single trivalent vertex; anything else (a cycle
  // in a non-complete diagram, higher-degree vertices, misplaced heavy edges)
  // is not a(2)-finite.
  int edges = 0;
  std::vector<int> degree(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (adjacent(i, j)) {
        ++edges;
        ++degree[i];
        ++degree[j];
      }
  bool acyclic = edges == rank_ - 1;  // connected, so tree iff n-1 edges
  if (!acyclic) {
    classification_ = c;  // all false
    return;
  }

  int branches = 0, max_degree = 0;
  for (int d : degree) {
    if (d >= 3) ++branches;
    max_degree = std::max(max_degree, d);
  }

  if (max_degree <= 2) {
    // Path: walk from one end and collect bond weights.
    int start = 0;
    while (degree[start] != 1) ++start;
    std::vector<int> weights;
    int prev = -1, cur = start;
    for (int steps = 0; steps + 1 < rank_; ++steps) {
      int next = -1;
      for (int u = 0; u < rank_; ++u)
        if (u != prev && adjacent(cur, u)) next = u;
      weights.push_back(bond(cur, next));
      prev = cur;
      cur = next;
    }
    auto rev = weights;
    std::reverse(rev.begin(), rev.end());
    if (std::lexicographical_compare(rev.begin(), rev.end(), weights.begin(), weights.end())) weights = rev;
    int n = rank_;
    int heavies = 0;
    for (int w : weights)
      if (w != 3) ++heavies;
    auto all3_between = [&](int lo, int hi) {
      for (int k = lo; k < hi; ++k)
        if (weights[k] != 3) return false;
      return true;
    };
    if (heavies == 0) {
      c.a2_finite = true;  // A_n
      c.nontrivially_a2_finite = n >= 3;
    } else if (heavies == 1 && weights.front() == 4 && all3_between(1, n - 1)) {
      c.a2_finite = true;  // B_n
      c.nontrivially_a2_finite = n >= 3;
    } else if (heavies == 1 && weights.front() == 5 && all3_between(1, n - 1)) {
      c.a2_finite = true;  // H_n
      c.nontrivially_a2_finite = n >= 3;
    } else if (heavies == 1 && n >= 4 && weights[1] == 4 && weights[0] == 3 && all3_between(2, n - 1)) {
      c.a2_finite = true;  // F_n
      c.nontrivially_a2_finite = true;
    } else if (heavies == 2 && weights.front() == 4 && weights.back() == 4 && all3_between(1, n - 2) && n >= 5) {
      c.a2_finite = true;  // Ctilde_{n-1}, n >= 5 generators
      c.nontrivially_a2_finite = true;
    }
    classification_ = c;
    return;
  }

  if (branches == 1 && max_degree == 3) {
    // Spider with three legs; E_{q,r} iff all edges simple and one leg has
    // length exactly 1.
    for (int i = 0; i < rank_; ++i)
      for (int j = i + 1; j < rank_; ++j)
        if (adjacent(i, j) && bond(i, j) != 3) {
          classification_ = c;
          return;
        }
    int center = 0;
    while (degree[center] != 3) ++center;
    std::vector<int> legs;
    for (int u = 0; u < rank_; ++u) {
      if (!adjacent(center, u)) continue;
      int len = 1, prev = center, cur = u;
      while (degree[cur] == 2) {
        int next = -1;
        for (int t = 0; t < rank_; ++t)
          if (t != prev && adjacent(cur, t)) next = t;
        prev = cur;
        cur = next;
        ++len;
      }
      legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1) {
      c.a2_finite = true;  // E_{q,r} with {q,r} = {legs[1], legs[2]}
      c.nontrivially_a2_finite = true;
    }
  }
  classification_ = c;
}

Classification CoxeterSystem::classify() const {
  if (!classification_) fail(Errc::reducible_system, "Coxeter diagram is disconnected");
  return *classification_;
}

Classification classify(const CoxeterSystem& sys) { return sys.classify(); }

CoxeterSystem CoxeterSystem::make(CoxType type, int p1, int p2, std::vector<std::string> labels,
                                  std::vector<std::vector<int>> matrix) {
  CoxeterSystem sys;
  sys.type_ = type;
  sys.p1_ = p1;
  sys.p2_ = p2;
  sys.labels_ = std::move(labels);
  sys.validate_and_finish(std::move(matrix));
  return sys;
}

CoxeterSystem CoxeterSystem::custom(std::vector<std::string> labels, std::vector<std::vector<int>> matrix) {
  CoxeterSystem sys;
  sys.type_ = CoxType::Custom;
  sys.labels_ = std::move(labels);
  sys.validate_and_finish(std::move(matrix));
  return sys;
}

CoxeterSystem CoxeterSystem::from_custom_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_descriptor, std::string("invalid custom system JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels") || !j.contains("matrix"))
    fail(Errc::bad_descriptor, "custom system JSON needs \"labels\" and \"matrix\"");
  std::vector<std::string> labels;
  for (auto& l : j["labels"]) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  std::vector<std::vector<int>> matrix;
  for (auto& row : j["matrix"]) {
    std::vector<int> r;
    for (auto& v : row) {
      int m = v.get<int>();
      r.push_back(m == 0 ? kBondInfinity : m);  // 0 encodes infinity
    }
    matrix.push_back(std::move(r));
  }
  return custom(std::move(labels), std::move(matrix));
}

CoxeterSystem CoxeterSystem::from_descriptor(const std::string& d) {
  if (!d.empty() && d.front() == '{') return from_custom_json(d);
  auto colon = d.find(':');
  if (colon == std::string::npos) fail(Errc::bad_descriptor, "descriptor must look like TYPE:PARAMS, got \"" + d + "\"");
  std::string type = d.substr(0, colon);
  std::string params = d.substr(colon + 1);
  bool ok = false;

  if (type == "A" || type == "B" || type == "F" || type == "H") {
    int n = static_cast<int>(parse_int(params, &ok));
    if (!ok) fail(Errc::bad_descriptor, "bad rank in \"" + d + "\"");
    int lo = type == "A" ? 1 : type == "B" ? 2 : type == "F" ? 4 : 2;
    if (n < lo) fail(Errc::invalid_rank, type + ":" + params + " needs n >= " + std::to_string(lo));
    if (type == "A") return make(CoxType::A, n, 0, numeric_labels(n), path_matrix(n, {}));
    if (type == "B") return make(CoxType::B, n, 0, numeric_labels(n), path_matrix(n, {{{1, 2}, 4}}));
    if (type == "F") return make(CoxType::F, n, 0, numeric_labels(n), path_matrix(n, {{{2, 3}, 4}}));
    return make(CoxType::H, n, 0, numeric_labels(n), path_matrix(n, {{{1, 2}, 5}}));
  }
  if (type == "Ctilde") {
    int m = static_cast<int>(parse_int(params, &ok));
    if (!ok) fail(Errc::bad_descriptor, "bad rank in \"" + d + "\"");
    if (m < 2) fail(Errc::invalid_rank, "Ctilde:" + params + " needs m >= 2");
    int n = m + 1;  // generators 1..m+1, heavy edges at both ends
    return make(CoxType::Ctilde, m, 0, numeric_labels(n), path_matrix(n, {{{1, 2}, 4}, {{n - 1, n}, 4}}));
  }
  if (type == "E") {
    auto comma = params.find(',');
    if (comma == std::string::npos) fail(Errc::bad_descriptor, "E descriptor needs E:<q>,<r>");
    bool ok2 = false;
    int q = static_cast<int>(parse_int(params.substr(0, comma), &ok));
    int r = static_cast<int>(parse_int(params.substr(comma + 1), &ok2));
    if (!ok || !ok2) fail(Errc::bad_descriptor, "bad parameters in \"" + d + "\"");
    if (q < 1 || r < q) fail(Errc::invalid_rank, "E:" + params + " needs r >= q >= 1");
    int n = q + r + 2;  // -q..r plus v
    std::vector<std::string> labels;
    for (int i = -q; i <= r; ++i) labels.push_back(std::to_string(i));
    labels.push_back("v");
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < q + r + 1; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    m[q][n - 1] = m[n - 1][q] = 3;  // v attached to 0
    return make(CoxType::E, q, r, std::move(labels), std::move(m));
  }
  if (type == "I2") {
    int m;
    if (params == "inf") {
      m = kBondInfinity;
    } else {
      m = static_cast<int>(parse_int(params, &ok));
      if (!ok) fail(Errc::bad_descriptor, "bad bond in \"" + d + "\"");
    }
    if (m != kBondInfinity && m < 5) fail(Errc::invalid_rank, "I2:" + params + " needs 5 <= m <= inf");
    return make(CoxType::I2, m, 0, {"1", "2"}, {{1, m}, {m, 1}});
  }
  fail(Errc::bad_descriptor, "unknown type \"" + type + "\" in descriptor");
}

}  // namespace a2cells
