#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infchar/sen.hpp"

namespace infchar {

// A finite group of pinned automorphisms given by a multiplication table.
// table[i][j] is the index of elements[i] * elements[j], where composition of
// automorphisms multiplies the underlying matrices.
struct GammaGroup {
  std::vector<PinnedAutomorphism> elements;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;

  std::size_t size() const { return elements.size(); }
  std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
  std::size_t inv(std::size_t i) const;
  bool is_trivial() const { return elements.size() == 1; }
};

GammaGroup trivial_gamma(const BasedRootDatum& d);

// Validates pinnedness of each matrix, the Latin-square and identity
// properties of the table, and that the table matches matrix multiplication.
// errors: GroupTableInvalid, NotPinned.
GammaGroup make_gamma_group(const BasedRootDatum& d,
                            const std::vector<IntMat>& matrices,
                            const std::vector<std::vector<std::size_t>>& table);

// One embedding sigma together with the labels tau lying above it and the
// recorded left Gamma-action on those labels: action[g][k] is the position of
// g . taus[k].
struct EmbeddingBlock {
  std::string sigma;
  std::vector<std::string> taus;
  std::vector<std::vector<std::size_t>> action;
};

enum class Mode { L, C };

struct GaloisParameterSpec {
  BasedRootDatum group;
  CoefficientRing ring;
  GammaGroup gamma;
  std::vector<EmbeddingBlock> embeddings;
  std::map<std::string, SenOperator> sen_data;  // keyed by tau label
  Mode mode = Mode::L;
  Rat d_weight = Rat(1);
  std::optional<RatVec> twisting;
  std::string name;
  std::string description;
};

// The additive shift applied to a raw semisimple class when it is evaluated
// as a character point: zero in L mode, delta - twisting for a twisted
// C-parameter, delta for direct C data.
RatVec class_shift(const GaloisParameterSpec& spec);

// Raw semisimple class at a tau label, extracting matrix data if necessary.
// errors: UnknownLabel, split_failure (CharPolyDoesNotSplit).
ScalarVec class_at(const GaloisParameterSpec& spec, const std::string& tau);

// Validates every structural invariant: embedding actions are simply
// transitive left actions, d_weight = 1 in C mode, the twisting element
// solves its defining system and is Gamma-invariant, and the Sen classes are
// Gamma-compatible across each tau-orbit (raw classes compared up to W).
// Returns the spec unchanged on success.
// errors: GammaIncompatibleSenData, MissingCyclotomicConstraint,
// InvalidTwisting, GroupTableInvalid, UnknownLabel, WrongDimension.
GaloisParameterSpec build_parameter_spec(GaloisParameterSpec raw);

// L-to-C twist: records the twisting element and switches the mode; Sen data
// is untouched (the shift happens at evaluation time).  errors:
// InvalidTwisting, TwistingNotGammaInvariant.
GaloisParameterSpec twist_to_C(const GaloisParameterSpec& spec,
                               const RatVec& twisting);

// --- cocycles valued in the torus-normalizer -------------------------------

// A map gamma -> (t, w) in T(K) x| W.  Multiplication is
// (t, w) (t', w') = (t . w>t', w w') with the multiplicative matrix action
// (m>t)_i = prod_j t_j^(m_ij); gamma acts on t the same way through its
// automorphism matrix and on w by conjugation.
struct TorusWeylCocycle {
  BasedRootDatum group;
  GammaGroup gamma;
  std::vector<ScalarVec> t_values;  // per gamma index; unit entries
  std::vector<IntMat> w_values;     // per gamma index; elements of W
};

struct CocycleCheck {
  bool ok = true;
  std::size_t first = 0, second = 0;  // violating pair when !ok
  std::string detail;
};

// Well-formedness (unit entries, Weyl membership) raises; the cocycle
// condition itself is reported, with the first violating pair as witness.
CocycleCheck validate_cocycle(const TorusWeylCocycle& c);

// Is c2 the twist of c1 by n = (t_n, w_n), i.e. c2_g = n . c1_g . (g . n^-1)?
bool cohomologous(const TorusWeylCocycle& c1, const TorusWeylCocycle& c2,
                  const ScalarVec& t_n, const IntMat& w_n);

// The coboundary of n: gamma -> n . (gamma . n^-1).
TorusWeylCocycle coboundary(const BasedRootDatum& d, const GammaGroup& gamma,
                            const ScalarVec& t_n, const IntMat& w_n);

}  // namespace infchar
