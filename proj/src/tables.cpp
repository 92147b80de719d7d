#include "a2cells/tables.hpp"

#include "a2cells/error.hpp"

namespace a2cells {

namespace {

std::string pair_word(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

}  // namespace

ClosedForms closed_forms(const CoxeterSystem& sys) {
  if (sys.type() == CoxType::Custom) fail(Errc::not_builtin_type, "closed forms exist only for built-in types");
  Classification cls = sys.classify();
  if (!cls.a2_finite) fail(Errc::not_a2_finite, sys.name() + " has infinitely many a(2)-elements");
  ClosedForms f;
  if (!cls.nontrivially_a2_finite) return f;

  long long n = sys.rank();
  switch (sys.type()) {
    case CoxType::A: {
      f.stub_count = beta(n) - 1;
      f.simple_classes = {{"1,3", beta(n) - 1}};
      f.zero_cell_sizes = {{1}};
      f.one_cell_sizes = {beta(n) - 1};
      f.slide_classes = f.simple_classes;
      f.two_sided_sizes = {(beta(n) - 1) * (beta(n) - 1)};
      break;
    }
    case CoxType::B: {
      f.stub_count = beta(n);
      if (n == 3) {
        f.simple_classes = {{"1,3", 3}};
        f.zero_cell_sizes = {{1}};
        f.one_cell_sizes = {3};
        f.slide_classes = {{"1,3", 3}};
        f.two_sided_sizes = {9};
      } else {
        f.simple_classes = {{"1,3", n}, {"2,4", beta(n - 1) - 1}};
        f.zero_cell_sizes = {{2, 1}, {1, 2}};
        f.one_cell_sizes = {beta(n + 1), n * n - 2 * n};
        f.slide_classes = {{"1,3", beta(n)}};
        f.two_sided_sizes = {(n * n * n * n - 4 * n * n * n + 7 * n * n) / 2};
      }
      break;
    }
    case CoxType::Ctilde: {
      // n generators 1..n on the heavy-ended path.
      f.stub_count = beta(n) + 1;
      f.simple_classes = {{"1,3", n - 1},
                          {"2,4", beta(n - 2) - 1},
                          {pair_word(static_cast<int>(n) - 2, static_cast<int>(n)), n - 1},
                          {pair_word(1, static_cast<int>(n)), 1}};
      f.zero_cell_sizes = {{4, 2, 1, 2}, {2, 4, 2, 1}, {1, 2, 4, 2}, {2, 1, 2, 4}};
      f.one_cell_sizes = {n * n + 1, 2 * n * n - 6 * n + 5, n * n + 1, (n * n + 3 * n + 4) / 2};
      f.slide_classes = {{"1,3", beta(n) + 1}};
      f.two_sided_sizes = {n * n * n * n - 6 * n * n * n + 20 * n * n - 21 * n + 10};
      break;
    }
    case CoxType::E: {
      long long q = sys.param1(), r = sys.param2();
      f.stub_count = beta(n + 1) - 1;
      if (q == 1 && r == 1) {
        f.simple_classes = {{"-1,v", 3}, {"1,v", 3}, {"-1,1", 3}};
        f.zero_cell_sizes = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        f.one_cell_sizes = {3, 3, 3};
        f.slide_classes = f.simple_classes;
        f.two_sided_sizes = {9, 9, 9};
      } else if (q == 1) {
        f.simple_classes = {{"-1,v", n - 1}, {"1,v", beta(n)}};
        f.zero_cell_sizes = {{1, 0}, {0, 1}};
        f.one_cell_sizes = {n - 1, beta(n)};
        f.slide_classes = f.simple_classes;
        f.two_sided_sizes = {(n - 1) * (n - 1), beta(n) * beta(n)};
      } else {
        f.simple_classes = {{"-1,1", beta(n + 1) - 1}};
        f.zero_cell_sizes = {{1}};
        f.one_cell_sizes = {beta(n + 1) - 1};
        f.slide_classes = f.simple_classes;
        f.two_sided_sizes = {(beta(n + 1) - 1) * (beta(n + 1) - 1)};
      }
      break;
    }
    case CoxType::F: {
      f.stub_count = beta(n + 1) - 1;
      if (n == 4) {
        f.simple_classes = {{"1,3", 9}};
        f.zero_cell_sizes = {{1}};
        f.one_cell_sizes = {9};
      } else {
        f.simple_classes = {{"1,3", 3 * n - 3}, {"3,5", beta(n - 2) - 1}};
        f.zero_cell_sizes = {{2, 1}, {1, 2}};
        f.one_cell_sizes = {(n * n + 7 * n - 8) / 2, (n - 1) * (n - 1)};
      }
      f.slide_classes = {{"1,3", beta(n + 1) - 1}};
      f.two_sided_sizes = {n == 4 ? 81 : (n * n * n * n - 4 * n * n * n + 33 * n * n - 58 * n + 28) / 2};
      break;
    }
    case CoxType::H: {
      f.stub_count = beta(n + 1) - 1;
      if (n == 3) {
        f.simple_classes = {{"1,3", 5}};
        f.zero_cell_sizes = {{1}};
        f.one_cell_sizes = {5};
      } else {
        f.simple_classes = {{"1,3", 2 * n - 1}, {"2,4", beta(n - 1) - 1}};
        f.zero_cell_sizes = {{2, 2}, {2, 2}};
        f.one_cell_sizes = {2 * (beta(n + 1) - 1), 2 * (beta(n + 1) - 1)};
      }
      f.slide_classes = {{"1,3", beta(n + 1) - 1}};
      f.two_sided_sizes = {n == 3 ? 25 : 2 * (beta(n + 1) - 1) * (beta(n + 1) - 1)};
      break;
    }
    default:
      fail(Errc::not_builtin_type, "no closed forms for " + sys.name());
  }
  return f;
}

}  // namespace a2cells
