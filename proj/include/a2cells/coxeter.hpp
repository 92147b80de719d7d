#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "a2cells/error.hpp"
#include "a2cells/ring.hpp"

namespace a2cells {

// Bond value marking m(s,t) = infinity.
inline constexpr int kBondInfinity = std::numeric_limits<int>::max();

enum class CoxType { A, B, Ctilde, E, F, H, I2, Custom };

struct GeneratorId {
  int index = -1;
  std::string label;
};

struct Classification {
  bool a2_finite = false;
  bool nontrivially_a2_finite = false;
};

// A Coxeter system: generators with display labels, symmetric bond matrix,
// a type tag for the built-in families and the scalar ring of the geometric
// representation. Immutable after construction.
class CoxeterSystem {
 public:
  // Type descriptor grammar: A:<n>, B:<n>, Ctilde:<m> (m+1 generators),
  // E:<q>,<r>, F:<n>, H:<n>, I2:<m|inf>. Anything starting with '{' is parsed
  // as a custom JSON system {"labels":[...],"matrix":[[...]]} with 0 = infinity.
  static CoxeterSystem from_descriptor(const std::string& descriptor);
  static CoxeterSystem custom(std::vector<std::string> labels, std::vector<std::vector<int>> matrix);
  static CoxeterSystem from_custom_json(const std::string& json_text);

  int rank() const { return rank_; }
  int bond(int i, int j) const { return matrix_[static_cast<size_t>(i) * rank_ + j]; }
  bool commutes(int i, int j) const { return bond(i, j) == 2; }
  bool adjacent(int i, int j) const { return i != j && bond(i, j) >= 3; }

  const std::string& label(int i) const { return labels_[i]; }
  GeneratorId generator(int i) const { return {i, labels_[i]}; }
  // Index of a generator label, or -1.
  int index_of(const std::string& label) const;

  RingTag ring() const { return ring_; }
  // False when some bond cosine falls outside Z, Z[sqrt2], Z[phi] (bond > 5,
  // or bonds 4 and 5 mixed); such systems support classification only.
  bool arithmetic_ok() const { return arithmetic_ok_; }
  CoxType type() const { return type_; }
  // Family parameters: A/B/F/H -> {n}; Ctilde -> {m}; E -> {q,r}; I2 -> {m}.
  int param1() const { return p1_; }
  int param2() const { return p2_; }
  std::string name() const;

  // Classification of the system; throws Errc::reducible_system when the
  // diagram is disconnected.
  Classification classify() const;

  // Bond cosine 2*cos(pi/m) as a ring scalar: 0, 1, sqrt2, phi, 2.
  RingScalar bond_scalar(int m) const;

  bool same_as(const CoxeterSystem& other) const { return this == &other; }

 private:
  CoxeterSystem() = default;
  static CoxeterSystem make(CoxType type, int p1, int p2, std::vector<std::string> labels,
                            std::vector<std::vector<int>> matrix);
  void validate_and_finish(std::vector<std::vector<int>> matrix);

  int rank_ = 0;
  std::vector<int> matrix_;  // rank x rank, row major
  std::vector<std::string> labels_;
  RingTag ring_ = RingTag::integer;
  bool arithmetic_ok_ = true;
  CoxType type_ = CoxType::Custom;
  int p1_ = 0, p2_ = 0;
  std::optional<Classification> classification_;  // nullopt when reducible
};

Classification classify(const CoxeterSystem& sys);

std::string bond_to_string(int m);

}  // namespace a2cells
