#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infchar/matrix.hpp"
#include "infchar/scalar.hpp"

namespace infchar {

inline constexpr std::size_t kDefaultWeylCap = 10000;
inline constexpr std::size_t kRankCap = 8;
inline constexpr unsigned kDefaultOrderCap = 64;

// Root datum on X = Z^r with the standard dot pairing; roots and coroots are
// paired by index.
struct RootDatum {
  std::size_t rank = 0;
  std::vector<IntVec> roots;
  std::vector<IntVec> coroots;
};

struct BasedRootDatum {
  RootDatum datum;
  std::vector<std::size_t> simple;  // indices into roots selecting Delta

  std::size_t rank() const { return datum.rank; }
  std::size_t n_simple() const { return simple.size(); }
  const IntVec& simple_root(std::size_t k) const { return datum.roots[simple[k]]; }
  const IntVec& simple_coroot(std::size_t k) const { return datum.coroots[simple[k]]; }
};

// Validates every structural invariant: pairing 2 on the diagonal, reflection
// closure on both sides compatible with the root/coroot pairing, reducedness,
// Delta independent with all-nonnegative or all-nonpositive integer root
// expansions.  errors: PairingViolation, NotClosedUnderReflection, NotReduced,
// NotBased, SchemaViolation.
BasedRootDatum validate_based_root_datum(std::size_t rank, std::vector<IntVec> roots,
                                         std::vector<IntVec> coroots,
                                         std::vector<std::size_t> simple);

// Standard datum for GL, SL, PGL, Sp (rank n, i.e. Sp_2n), SO (SO_n).
// errors: UnsupportedFamily, RankCapExceeded.
BasedRootDatum builtin_datum(const std::string& family, long long n);

bool datum_equal(const BasedRootDatum& a, const BasedRootDatum& b);
// Equality of the underlying data with roots matched up to order (the
// root/coroot pairing and Delta must still correspond).
bool datum_equal_up_to_order(const BasedRootDatum& a, const BasedRootDatum& b);

BasedRootDatum dualize(const BasedRootDatum& d);

// +1/-1 per root, by the sign of its Delta-expansion.
std::vector<int> root_signs(const BasedRootDatum& d);

// Reflection attached to the root/coroot pair at `root_index`, as a matrix on X.
IntMat reflection_matrix(const BasedRootDatum& d, std::size_t root_index);

struct WeylGroup {
  std::vector<IntMat> elements;    // breadth-first order from the identity
  std::vector<IntMat> generators;  // simple reflections, in Delta order
  std::size_t order() const { return elements.size(); }
  bool contains(const IntMat& w) const;
};

// Breadth-first closure of the simple reflections.  errors: WeylCapExceeded.
WeylGroup weyl_group(const BasedRootDatum& d, std::size_t cap = kDefaultWeylCap);

RatVec half_sum_positive_roots(const BasedRootDatum& d);

// Integral weight with pairing 1 against every simple coroot, canonicalized
// by Hermite reduction of the solution lattice (first coordinate 0 where
// possible); absent when the integer system has no solution.
std::optional<IntVec> find_twisting_element(const BasedRootDatum& d);

bool is_dominant(const RatVec& weight, const BasedRootDatum& d);

struct DominantRep {
  RatVec weight;
  std::vector<std::size_t> word;  // simple indices, applied left to right
};
// Chamber descent; the result is dominant and W-conjugate to the input via
// the recorded word.
DominantRep dominant_representative(RatVec weight, const BasedRootDatum& d);

RatVec apply_word(const BasedRootDatum& d, const std::vector<std::size_t>& word, RatVec v);

struct PinnedAutomorphism {
  IntMat matrix;
  IntMat inverse;
  unsigned order = 1;
  std::vector<std::size_t> simple_perm;  // image position of each simple root
};

// Validates that `matrix` is unimodular, permutes Delta and the full root
// set, acts compatibly on coroots through the inverse-transpose, and has
// finite order within `order_cap`.  errors: NotPinned,
// AutomorphismOrderCapExceeded.
PinnedAutomorphism make_pinned_automorphism(const BasedRootDatum& d, IntMat matrix,
                                            unsigned order_cap = kDefaultOrderCap);

RatVec apply_automorphism(const PinnedAutomorphism& g, const RatVec& v);
ScalarVec apply_automorphism(const PinnedAutomorphism& g, const ScalarVec& v);

}  // namespace infchar
