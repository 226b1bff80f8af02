#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "infchar/poly.hpp"
#include "infchar/rootdata.hpp"

namespace infchar {

// Multivariate polynomial with rational coefficients in variables x_1..x_n
// (indexed 0..n-1 internally).  Terms map exponent vectors to coefficients;
// zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rat& c);
  static MultiPoly coordinate(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(std::size_t nvars, std::vector<std::uint32_t> exps,
                            const Rat& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<std::uint32_t>, Rat>& terms() const {
    return terms_;
  }

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a += b;
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a -= b;
    return a;
  }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) {
    a *= b;
    return a;
  }
  bool operator==(const MultiPoly& other) const = default;

  MultiPoly scaled(const Rat& c) const;
  // Substitution x |-> m*x, i.e. the i-th variable is replaced by the linear
  // form given by row i of m.  Used to pull a polynomial back along a Weyl
  // group element.
  MultiPoly compose_linear(const IntMat& m) const;
  Rat eval(const RatVec& point) const;
  Scalar eval(const ScalarVec& point) const;

  void add_term(const std::vector<std::uint32_t>& exps, const Rat& c);

 private:
  std::size_t nvars_ = 0;
  std::map<std::vector<std::uint32_t>, Rat> terms_;
};

// A polynomial certified to be invariant under the Weyl group action
// p |-> p(w x).  Obtain one via symmetrize() or certified_invariant().
struct InvariantPolynomial {
  MultiPoly poly;
};

// Orbit average (1/|W|) * sum_w p(w x).  Always invariant.
InvariantPolynomial symmetrize(const MultiPoly& p, const WeylGroup& w);

// Checks invariance against every generator; throws NotInvariant otherwise.
InvariantPolynomial certified_invariant(MultiPoly p, const WeylGroup& w);

Scalar evaluate(const InvariantPolynomial& p, const ScalarVec& point);

// A W-orbit of a point in X* tensor K, stored by a representative.
struct InfinitesimalCharacter {
  CoefficientRing ring;
  ScalarVec point;
};

InfinitesimalCharacter make_character(ScalarVec point);
InfinitesimalCharacter make_character(const RatVec& point);

// Does the W-orbit of `orbit_of` contain `candidate`?  Coordinates are
// coerced into a common ring first.
bool orbit_contains(const WeylGroup& w, const ScalarVec& orbit_of,
                    const ScalarVec& candidate);

// chi(lambda) = orbit of lambda + delta.  Requires lambda integral and
// dominant.
InfinitesimalCharacter inf_char_of_highest_weight(const RatVec& lambda,
                                                  const BasedRootDatum& d);

bool characters_equal(const InfinitesimalCharacter& a,
                      const InfinitesimalCharacter& b, const WeylGroup& w);

// If chi = chi(lambda) for an integral dominant lambda, return lambda;
// otherwise nothing.  Family rings have no decidable ordering of
// specializations, so they are rejected.
std::optional<RatVec> match_algebraic(const InfinitesimalCharacter& chi,
                                      const BasedRootDatum& d);

// First k_max power sums of the roots of a monic polynomial given by its
// coefficient list (low to high degree), via Newton's identities.  No root
// extraction is performed.
std::vector<Scalar> charpoly_to_power_sums(const std::vector<Scalar>& monic,
                                           std::size_t k_max);

}  // namespace infchar
