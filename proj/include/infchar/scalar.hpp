#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infchar/matrix.hpp"
#include "infchar/rational.hpp"
#include "infchar/ring.hpp"

namespace infchar {

// An element of a CoefficientRing: a polynomial in the family variables whose
// coefficients are number-field elements in power-basis coordinates.  All
// arithmetic is exact.
class Scalar {
public:
  Scalar();  // zero over the rationals
  explicit Scalar(Rat v);
  explicit Scalar(const Int& v);
  Scalar(CoefficientRing ring, const Rat& v);

  static Scalar generator(const CoefficientRing& ring);
  static Scalar variable(const CoefficientRing& ring, const std::string& name);
  static Scalar from_field_coords(const CoefficientRing& ring, std::vector<Rat> coords);
  // Text form: rationals "p/q", ring variables, the field generator, and
  // + - * ^ with parentheses.
  static Scalar parse(const CoefficientRing& ring, const std::string& text);

  const CoefficientRing& ring() const { return ring_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // no family variables present
  bool is_rational() const;
  bool is_integer() const;
  Rat as_rational() const;
  Int as_integer() const;
  // Power-basis coordinates of a constant scalar (length = field degree).
  std::vector<Rat> constant_coords() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Deterministic order for containers; not a numeric comparison.
  bool sort_key_less(const Scalar& o) const;

  bool is_unit() const;      // nonzero constant (field element)
  Scalar inverse() const;    // errors: not_invertible, division_by_zero
  Scalar pow(long long k) const;

  // Substitutes base-field values for every family variable; result lives in
  // the base field.  Non-family scalars specialize to themselves.
  Scalar specialize(const std::map<std::string, Scalar>& values) const;

  // Embeds into `target`: rationals embed anywhere, a base field embeds into
  // family rings over it.  errors: ring_mismatch.
  Scalar promoted(const CoefficientRing& target) const;

  std::string str() const;  // canonical, parseable by Scalar::parse

private:
  using Exponents = std::vector<std::uint32_t>;
  using Coeff = std::vector<Rat>;  // power-basis coordinates, length = field degree

  void insert_term(const Exponents& e, Coeff c);
  static void check_same_ring(const Scalar& a, const Scalar& b);

  CoefficientRing ring_;
  std::map<Exponents, Coeff> terms_;  // zero coefficients never stored

  friend struct ScalarInternals;
};

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;

// Coerces both operands into a common ring when one embeds into the other.
std::pair<Scalar, Scalar> coerce(const Scalar& a, const Scalar& b);

ScalarVec to_scalars(const RatVec& v, const CoefficientRing& ring = CoefficientRing());
ScalarVec promote_vec(const ScalarVec& v, const CoefficientRing& target);
ScalarVec apply_int_matrix(const IntMat& m, const ScalarVec& v);
ScalarVec scalar_vec_add(const ScalarVec& a, const ScalarVec& b);
ScalarVec scalar_vec_sub(const ScalarVec& a, const ScalarVec& b);
bool scalar_vec_eq(const ScalarVec& a, const ScalarVec& b);

// Exact square root of a constant scalar inside its own field: handles
// rational squares and degree-2 number fields.  nullopt when no square root
// exists in the field (or the field is too big to decide by radicals).
std::optional<Scalar> sqrt_in_field(const Scalar& s);

}  // namespace infchar
