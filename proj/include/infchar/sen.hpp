#pragma once

#include <map>
#include <string>
#include <vector>

#include "infchar/error.hpp"
#include "infchar/poly.hpp"
#include "infchar/rootdata.hpp"

namespace infchar {

// A Sen operator given either by its semisimple conjugacy class (an unordered
// eigenvalue list, stored sorted) or by an explicit square matrix for the
// standard representation of a general linear group.
struct SenOperator {
  enum class Kind { semisimple_class, matrix };
  Kind kind = Kind::semisimple_class;
  CoefficientRing ring;
  ScalarVec eigenvalues;  // kind == semisimple_class, canonically sorted
  ScalarMat entries;      // kind == matrix

  bool is_class() const { return kind == Kind::semisimple_class; }
  std::size_t size() const {
    return is_class() ? eigenvalues.size() : entries.size();
  }
  bool operator==(const SenOperator& other) const;
  std::string str() const;
};

// Thrown when a characteristic polynomial has no full root list in the
// coefficient ring; carries the monic coefficients (low to high) so callers
// can still report Newton power sums.
class split_failure : public error {
 public:
  split_failure(std::string message, std::vector<Scalar> monic);
  const std::vector<Scalar>& char_poly() const { return monic_; }

 private:
  std::vector<Scalar> monic_;
};

SenOperator sen_class(ScalarVec eigenvalues);
SenOperator sen_matrix(ScalarMat entries);
SenOperator sen_from_ht_weights(const std::vector<Int>& weights);

// Tannakian rules: eigenvalue multiset union / block-diagonal matrix, and
// pairwise eigenvalue sums / Kronecker sum.  Mixing a class with a matrix
// raises MixedRepresentationKind.
SenOperator sen_direct_sum(const SenOperator& a, const SenOperator& b);
SenOperator sen_tensor(const SenOperator& a, const SenOperator& b);

// Full root list of a monic polynomial within its own coefficient ring, with
// multiplicity, sorted.  Ladder: rational-root deflation while coefficients
// stay rational, then degree <= 2 by explicit square roots.  Returns nothing
// if the polynomial cannot be fully split this way.
std::optional<ScalarVec> split_roots(const UPoly& p);

// Eigenvalue multiset of the semisimple part of a matrix operator; the size
// must match the rank of the ambient datum.  errors: split_failure
// (CharPolyDoesNotSplit), WrongDimension.
SenOperator semisimple_class_of_matrix(const SenOperator& m,
                                       const BasedRootDatum& d);

struct HodgeTateResult {
  bool value = false;
  std::string diagnostic;  // empty when value is true
};

// Classes: every eigenvalue an integer.  Matrices: diagonalizable (squarefree
// minimal polynomial) with integer eigenvalues.
HodgeTateResult is_hodge_tate(const SenOperator& m);

// Evaluate family-ring entries at the given variable assignment.  errors:
// UnboundVariable.
SenOperator specialize(const SenOperator& m,
                       const std::map<std::string, Scalar>& values);

}  // namespace infchar
