#pragma once

#include <stdexcept>
#include <string>

namespace a2cells {

// Domain error kinds. Library functions throw Error with one of these codes;
// the CLI maps selected codes to exit statuses.
enum class Errc {
  invalid_rank,
  asymmetric_matrix,
  bad_bond,
  reducible_system,
  system_mismatch,
  not_reduced,
  not_fc,
  not_a2_finite,
  not_builtin_type,
  not_a_value_2,
  not_descent_compatible,
  not_short_stub,
  not_an_edge,
  result_not_stub,
  not_related,
  bond_not_three,
  group_too_large,
  group_infinite,
  unknown_stub_word,
  bad_word,
  bad_descriptor,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace a2cells
