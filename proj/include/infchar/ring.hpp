#pragma once

#include <memory>
#include <string>
#include <vector>

#include "infchar/rational.hpp"

namespace infchar {

// The coefficient rings the library computes over: the rationals, a number
// field QQ[a]/(min_poly) of degree at most 6, or a polynomial ring over one
// of those in finitely many named family variables.
class CoefficientRing {
public:
  CoefficientRing();  // rationals

  static CoefficientRing rationals();
  // min_poly: monic, coefficients low degree first, irreducible over QQ
  // (verified: rational-root test plus a Kronecker factor search for degrees
  // 4 to 6).  Degree-1 polynomials normalize to the rationals.
  static CoefficientRing number_field(RatPoly min_poly, std::string generator = "a");
  static CoefficientRing family(const CoefficientRing& base_field,
                                std::vector<std::string> variables);

  bool is_rationals() const;
  bool is_number_field() const;
  bool is_family() const;
  CoefficientRing base_field() const;  // the field under a family ring; fields return themselves

  std::size_t field_degree() const;      // 1 for the rationals
  const RatPoly& min_poly() const;       // empty for the rationals
  const std::string& generator_name() const;
  const std::vector<std::string>& variables() const;  // empty unless family
  bool has_variable(const std::string& name) const;

  bool operator==(const CoefficientRing& o) const;
  bool operator!=(const CoefficientRing& o) const { return !(*this == o); }

  std::string describe() const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// True when f (monic, rational coefficients, degree >= 1) is irreducible
// over QQ.  Exact; throws capacity_exceeded if the Kronecker divisor search
// would exceed its step budget.
bool is_irreducible_over_q(const RatPoly& f);

}  // namespace infchar
