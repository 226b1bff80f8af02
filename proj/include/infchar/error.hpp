#pragma once

#include <stdexcept>
#include <string>

namespace infchar {

// Every failure the library can raise, split into two classes:
//  - validation errors: the input violates a structural invariant,
//  - computation errors: the input is well formed but the requested value
//    is not computable or not defined for it.
// The CLI maps the first class to exit code 2 and the second to exit code 3.
enum class errc {
  // validation
  parse_error,
  schema_violation,
  pairing_violation,
  not_closed_under_reflection,
  not_reduced,
  not_based,
  unsupported_family,
  rank_cap_exceeded,
  not_pinned,
  automorphism_order_cap_exceeded,
  group_table_invalid,
  ring_mismatch,
  reducible_min_poly,
  degree_cap_exceeded,
  bad_scalar,
  division_by_zero,
  not_invertible,
  mixed_representation_kind,
  wrong_dimension,
  unknown_label,
  gamma_incompatible_sen_data,
  missing_cyclotomic_constraint,
  invalid_twisting,
  twisting_not_gamma_invariant,
  not_in_group,
  not_dominant,
  not_invariant,
  unbound_variable,
  // computation
  weyl_cap_exceeded,
  char_poly_does_not_split,
  not_hodge_tate,
  not_regular,
  twisting_required,
  tau_independence_violated,
  family_order_undefined,
  not_integral,
  capacity_exceeded,
  internal_error,
};

const char* errc_name(errc c);
bool is_validation_error(errc c);

class error : public std::runtime_error {
public:
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool ok, errc c, const std::string& what) {
  if (!ok) fail(c, what);
}

}  // namespace infchar
