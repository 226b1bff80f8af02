#include "infchar/error.hpp"

namespace infchar {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::schema_violation: return "SchemaViolation";
    case errc::pairing_violation: return "PairingViolation";
    case errc::not_closed_under_reflection: return "NotClosedUnderReflection";
    case errc::not_reduced: return "NotReduced";
    case errc::not_based: return "NotBased";
    case errc::unsupported_family: return "UnsupportedFamily";
    case errc::rank_cap_exceeded: return "RankCapExceeded";
    case errc::not_pinned: return "NotPinned";
    case errc::automorphism_order_cap_exceeded: return "AutomorphismOrderCapExceeded";
    case errc::group_table_invalid: return "GroupTableInvalid";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::reducible_min_poly: return "ReducibleMinPoly";
    case errc::degree_cap_exceeded: return "DegreeCapExceeded";
    case errc::bad_scalar: return "BadScalar";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_invertible: return "NotInvertible";
    case errc::mixed_representation_kind: return "MixedRepresentationKind";
    case errc::wrong_dimension: return "WrongDimension";
    case errc::unknown_label: return "UnknownLabel";
    case errc::gamma_incompatible_sen_data: return "GammaIncompatibleSenData";
    case errc::missing_cyclotomic_constraint: return "MissingCyclotomicConstraint";
    case errc::invalid_twisting: return "InvalidTwisting";
    case errc::twisting_not_gamma_invariant: return "TwistingNotGammaInvariant";
    case errc::not_in_group: return "NotInGroup";
    case errc::not_dominant: return "NotDominant";
    case errc::not_invariant: return "NotInvariant";
    case errc::unbound_variable: return "UnboundVariable";
    case errc::weyl_cap_exceeded: return "WeylCapExceeded";
    case errc::char_poly_does_not_split: return "CharPolyDoesNotSplit";
    case errc::not_hodge_tate: return "NotHodgeTate";
    case errc::not_regular: return "NotRegular";
    case errc::twisting_required: return "TwistingRequired";
    case errc::tau_independence_violated: return "TauIndependenceViolated";
    case errc::family_order_undefined: return "FamilyOrderUndefined";
    case errc::not_integral: return "NotIntegral";
    case errc::capacity_exceeded: return "CapacityExceeded";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

bool is_validation_error(errc c) {
  switch (c) {
    case errc::weyl_cap_exceeded:
    case errc::char_poly_does_not_split:
    case errc::not_hodge_tate:
    case errc::not_regular:
    case errc::twisting_required:
    case errc::tau_independence_violated:
    case errc::family_order_undefined:
    case errc::not_integral:
    case errc::capacity_exceeded:
    case errc::internal_error:
      return false;
    default:
      return true;
  }
}

}  // namespace infchar
