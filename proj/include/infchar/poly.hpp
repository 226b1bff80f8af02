#pragma once

#include <utility>
#include <vector>

#include "infchar/scalar.hpp"

namespace infchar {

// Univariate polynomials over a CoefficientRing, used for characteristic
// polynomials, minimal-polynomial tests, and Newton power sums.
class UPoly {
public:
  explicit UPoly(CoefficientRing ring);
  UPoly(CoefficientRing ring, std::vector<Scalar> coeffs);  // low degree first

  static UPoly from_roots(const CoefficientRing& ring, const ScalarVec& roots);

  const CoefficientRing& ring() const { return ring_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(std::size_t i) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_monic() const;

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  bool operator==(const UPoly& o) const;
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  UPoly derivative() const;
  Scalar eval(const Scalar& x) const;
  ScalarMat eval_matrix(const ScalarMat& m) const;

  // Division with remainder; the divisor's leading coefficient must be a
  // unit.  errors: not_invertible, division_by_zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& o) const;
  UPoly monic() const;
  static UPoly gcd_monic(UPoly a, UPoly b);

  // Power sums p_1..p_k of the roots of a monic polynomial, by Newton's
  // identities; no root extraction happens.
  std::vector<Scalar> power_sums(std::size_t k) const;

  std::string str(const std::string& var = "t") const;

private:
  void normalize();
  CoefficientRing ring_;
  std::vector<Scalar> coeffs_;
};

// --- square matrices over a coefficient ring --------------------------------

ScalarMat smat_identity(const CoefficientRing& ring, std::size_t n);
ScalarMat smat_mul(const ScalarMat& a, const ScalarMat& b);
ScalarMat smat_add(const ScalarMat& a, const ScalarMat& b);
ScalarMat smat_scale(const ScalarMat& a, const Scalar& c);
Scalar smat_trace(const ScalarMat& a);
bool smat_is_zero(const ScalarMat& a);
void smat_check_square(const ScalarMat& a);
CoefficientRing smat_ring(const ScalarMat& a);

// Characteristic polynomial det(t I - A) by the Faddeev-LeVerrier recursion;
// exact over any coefficient ring here (they all contain the rationals).
UPoly char_poly(const ScalarMat& a);

enum class Triangularity { lower, upper, none };
Triangularity triangularity(const ScalarMat& a);

}  // namespace infchar
