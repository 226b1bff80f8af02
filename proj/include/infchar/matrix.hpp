#pragma once

#include <optional>
#include <vector>

#include "infchar/rational.hpp"

namespace infchar {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

IntMat identity_mat(std::size_t n);
bool is_identity(const IntMat& m);
bool is_square(const IntMat& m);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_transpose(const IntMat& m);
IntVec mat_apply(const IntMat& m, const IntVec& v);
RatVec mat_apply(const IntMat& m, const RatVec& v);
IntMat mat_pow(const IntMat& m, unsigned long long k);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec to_rat(const IntVec& v);
// Engaged only when every entry is an integer.
std::optional<IntVec> to_int(const RatVec& v);

Int mat_det(IntMat m);  // Bareiss fraction-free elimination
// Integer inverse; engaged only when det = +-1.
std::optional<IntMat> mat_inverse_unimodular(const IntMat& m);

// Unique rational solution of A x = b when the columns of A are linearly
// independent; nullopt when b is outside the column span.  A need not be
// square.  Column independence is the caller's responsibility.
std::optional<RatVec> solve_rational_injective(const RatMat& a, const RatVec& b);

// General integer solutions of A x = b: a particular solution plus a lattice
// basis of the kernel, via column-style Hermite reduction.  nullopt when no
// integer solution exists.
struct IntSolution {
  IntVec particular;
  std::vector<IntVec> kernel;
};
std::optional<IntSolution> solve_integer(const IntMat& a, const IntVec& b);

// Reduces `x` modulo the lattice spanned by `basis` into a canonical coset
// representative (entries at Hermite pivot columns lie in [0, pivot)).
IntVec reduce_mod_lattice(IntVec x, std::vector<IntVec> basis);

}  // namespace infchar
