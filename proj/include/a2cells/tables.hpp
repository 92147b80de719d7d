#pragma once

#include <string>
#include <vector>

#include "a2cells/coxeter.hpp"

namespace a2cells {

// Rank-parameterized closed forms for stub counts, slide-class sizes, 0-cell
// size matrices and cell sizes of the built-in families. Words are given as
// comma-joined label strings. Degenerate a(2)-finite types (empty W_2) get
// all-empty data with stub_count 0.
struct ClosedForms {
  long long stub_count = 0;
  // Simple-slide (~) classes in the fixed representative order of the family.
  std::vector<std::pair<std::string, long long>> simple_classes;
  // N matrix over those representatives.
  std::vector<std::vector<long long>> zero_cell_sizes;
  // Right-cell size per ~ class.
  std::vector<long long> one_cell_sizes;
  // Slide (~~) classes, same format.
  std::vector<std::pair<std::string, long long>> slide_classes;
  // Two-sided cell sizes aligned with slide_classes.
  std::vector<long long> two_sided_sizes;

  long long total() const {
    long long t = 0;
    for (size_t i = 0; i < slide_classes.size(); ++i) t += two_sided_sizes[i];
    return t;
  }
};

// Errc::not_builtin_type for custom systems; Errc::not_a2_finite when W_2 is
// infinite.
ClosedForms closed_forms(const CoxeterSystem& sys);

inline long long beta(long long n) { return n * (n - 1) / 2; }

}  // namespace a2cells
