#include "infchar/invariants.hpp"

#include <algorithm>

#include "infchar/error.hpp"

namespace infchar {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(std::vector<std::uint32_t>(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::coordinate(std::size_t nvars, std::size_t i) {
  require(i < nvars, errc::wrong_dimension, "coordinate index out of range");
  std::vector<std::uint32_t> exps(nvars, 0);
  exps[i] = 1;
  MultiPoly p(nvars);
  p.add_term(exps, Rat(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::size_t nvars,
                              std::vector<std::uint32_t> exps, const Rat& c) {
  require(exps.size() == nvars, errc::wrong_dimension,
          "monomial exponent vector has wrong length");
  MultiPoly p(nvars);
  p.add_term(exps, c);
  return p;
}

void MultiPoly::add_term(const std::vector<std::uint32_t>& exps,
                         const Rat& c) {
  require(exps.size() == nvars_, errc::wrong_dimension,
          "exponent vector has wrong length");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require(nvars_ == other.nvars_, errc::wrong_dimension,
          "adding polynomials in different numbers of variables");
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require(nvars_ == other.nvars_, errc::wrong_dimension,
          "subtracting polynomials in different numbers of variables");
  for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  require(nvars_ == other.nvars_, errc::wrong_dimension,
          "multiplying polynomials in different numbers of variables");
  MultiPoly out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      std::vector<std::uint32_t> exps(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff * c);
  return out;
}

MultiPoly MultiPoly::compose_linear(const IntMat& m) const {
  require(m.size() == nvars_, errc::wrong_dimension,
          "substitution matrix has wrong size");
  for (const auto& row : m)
    require(row.size() == nvars_, errc::wrong_dimension,
            "substitution matrix has wrong size");
  // Linear forms replacing each variable.
  std::vector<MultiPoly> forms;
  forms.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    MultiPoly f(nvars_);
    std::vector<std::uint32_t> exps(nvars_, 0);
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (m[i][j] == 0) continue;
      exps[j] = 1;
      f.add_term(exps, Rat(m[i][j]));
      exps[j] = 0;
    }
    forms.push_back(std::move(f));
  }
  MultiPoly out(nvars_);
  for (const auto& [exps, c] : terms_) {
    MultiPoly term = MultiPoly::constant(nvars_, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < exps[i]; ++k) term *= forms[i];
    out += term;
  }
  return out;
}

Rat MultiPoly::eval(const RatVec& point) const {
  require(point.size() == nvars_, errc::wrong_dimension,
          "evaluation point has wrong length");
  Rat out(0);
  for (const auto& [exps, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < exps[i]; ++k) term *= point[i];
    out += term;
  }
  return out;
}

Scalar MultiPoly::eval(const ScalarVec& point) const {
  require(point.size() == nvars_, errc::wrong_dimension,
          "evaluation point has wrong length");
  CoefficientRing ring =
      point.empty() ? CoefficientRing::rationals() : point[0].ring();
  Scalar out(ring, Rat(0));
  for (const auto& [exps, c] : terms_) {
    Scalar term(ring, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < exps[i]; ++k) term *= point[i];
    out += term;
  }
  return out;
}

InvariantPolynomial symmetrize(const MultiPoly& p, const WeylGroup& w) {
  MultiPoly sum(p.nvars());
  for (const auto& elt : w.elements) sum += p.compose_linear(elt);
  return InvariantPolynomial{sum.scaled(Rat(1) / Rat(w.order()))};
}

InvariantPolynomial certified_invariant(MultiPoly p, const WeylGroup& w) {
  for (const auto& gen : w.generators) {
    require(p.compose_linear(gen) == p, errc::not_invariant,
            "polynomial is not invariant under the Weyl group");
  }
  return InvariantPolynomial{std::move(p)};
}

Scalar evaluate(const InvariantPolynomial& p, const ScalarVec& point) {
  return p.poly.eval(point);
}

InfinitesimalCharacter make_character(ScalarVec point) {
  CoefficientRing ring =
      point.empty() ? CoefficientRing::rationals() : point[0].ring();
  for (auto& x : point) x = x.promoted(ring);
  return InfinitesimalCharacter{ring, std::move(point)};
}

InfinitesimalCharacter make_character(const RatVec& point) {
  return make_character(to_scalars(point));
}

bool orbit_contains(const WeylGroup& w, const ScalarVec& orbit_of,
                    const ScalarVec& candidate) {
  if (orbit_of.size() != candidate.size()) return false;
  ScalarVec base = orbit_of;
  ScalarVec target = candidate;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto [x, y] = coerce(base[i], target[i]);
    base[i] = x;
    target[i] = y;
  }
  for (const auto& elt : w.elements) {
    if (scalar_vec_eq(apply_int_matrix(elt, base), target)) return true;
  }
  return false;
}

InfinitesimalCharacter inf_char_of_highest_weight(const RatVec& lambda,
                                                  const BasedRootDatum& d) {
  require(lambda.size() == d.rank(), errc::wrong_dimension,
          "weight has wrong length");
  for (const auto& x : lambda)
    require(rat_is_integer(x), errc::not_integral,
            "highest weight must be integral");
  require(is_dominant(lambda, d), errc::not_dominant,
          "highest weight must be dominant");
  RatVec point = vec_add(lambda, half_sum_positive_roots(d));
  return make_character(point);
}

bool characters_equal(const InfinitesimalCharacter& a,
                      const InfinitesimalCharacter& b, const WeylGroup& w) {
  return orbit_contains(w, a.point, b.point);
}

std::optional<RatVec> match_algebraic(const InfinitesimalCharacter& chi,
                                      const BasedRootDatum& d) {
  require(!chi.ring.is_family(), errc::family_order_undefined,
          "cannot order specializations of a family point");
  require(chi.point.size() == d.rank(), errc::wrong_dimension,
          "character point has wrong length");
  RatVec point;
  point.reserve(chi.point.size());
  for (const auto& x : chi.point) {
    if (!x.is_rational()) return std::nullopt;
    point.push_back(x.as_rational());
  }
  DominantRep rep = dominant_representative(point, d);
  RatVec lambda = vec_sub(rep.weight, half_sum_positive_roots(d));
  for (const auto& x : lambda)
    if (!rat_is_integer(x)) return std::nullopt;
  if (!is_dominant(lambda, d)) return std::nullopt;
  return lambda;
}

std::vector<Scalar> charpoly_to_power_sums(const std::vector<Scalar>& monic,
                                           std::size_t k_max) {
  require(!monic.empty(), errc::bad_scalar,
          "polynomial must have at least one coefficient");
  CoefficientRing ring = monic.back().ring();
  UPoly p(ring, monic);
  require(p.degree() + 1 == monic.size() && p.is_monic(), errc::bad_scalar,
          "polynomial must be monic");
  return p.power_sums(k_max);
}

}  // namespace infchar
