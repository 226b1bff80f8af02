#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace infchar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with optional sign; q must be nonzero.
Rat parse_rat(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0
// and gcd(p, q) = 1 (cpp_rational keeps values reduced).
std::string show_rat(const Rat& r);

bool rat_is_integer(const Rat& r);
Int rat_floor(const Rat& r);

// Exact integer square root: engaged only for perfect squares, n >= 0.
std::optional<Int> isqrt_exact(const Int& n);

// Exact rational square root: engaged only when r is the square of a rational.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

// All positive divisors of |n| (n != 0) by trial division.  Throws
// capacity_exceeded when factoring needs more than `step_cap` trial steps.
std::vector<Int> positive_divisors(Int n, std::size_t step_cap = 2000000);

// --- dense univariate polynomials over the rationals ---------------------
// Coefficients low degree first; normalized form has no trailing zeros, and
// the zero polynomial is the empty vector.
using RatPoly = std::vector<Rat>;

RatPoly ratpoly_trim(RatPoly p);
int ratpoly_degree(const RatPoly& p);  // -1 for the zero polynomial
RatPoly ratpoly_add(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_sub(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_mul(const RatPoly& a, const RatPoly& b);
RatPoly ratpoly_scale(const RatPoly& a, const Rat& c);
Rat ratpoly_eval(const RatPoly& p, const Rat& x);
// Division with remainder; the divisor must be nonzero.
std::pair<RatPoly, RatPoly> ratpoly_divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd (1 for coprime inputs, 0 only when both inputs are 0).
RatPoly ratpoly_gcd(RatPoly a, RatPoly b);
RatPoly ratpoly_derivative(const RatPoly& p);

// All rational roots of a nonzero polynomial, with multiplicity, found by the
// rational root theorem plus deflation.
std::vector<Rat> ratpoly_rational_roots(RatPoly p);

}  // namespace infchar
