#pragma once

#include <string>
#include <vector>

#include "a2cells/kl.hpp"
#include "a2cells/stubs.hpp"

namespace a2cells {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure (or informational)
};

// Golden suite for one system: closed-form stub sets and counts, class
// sizes, 0-cell size matrix and invariance, cell sizes, representative
// 0-cells, triple bijection, distinguished involutions, weak-order law,
// descent constancy. For B:4, the explicit stub/0-cell tables as well.
std::vector<CheckResult> verify_system(const CoxeterSystem& sys);

// Oracle comparison: a-values vs stub enumeration and both cell partitions
// restricted to a-value 2, plus the width-2 equivalence over all FC elements.
std::vector<CheckResult> oracle_verify(const CoxeterSystem& sys, size_t bound = 500);

// The fixed defined/undefined star-operation outcomes on w = abcab in the
// custom system with m(a,b)=3, m(b,c)=4, m(a,c)=2.
std::vector<CheckResult> verify_star_ground_truth();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace a2cells
