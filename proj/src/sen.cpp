#include "infchar/sen.hpp"

#include <algorithm>
#include <sstream>

#include "infchar/error.hpp"
#include "infchar/rational.hpp"

namespace infchar {

namespace {

void sort_eigenvalues(ScalarVec& v) {
  std::sort(v.begin(), v.end(),
            [](const Scalar& a, const Scalar& b) { return a.sort_key_less(b); });
}

CoefficientRing ring_of(const ScalarVec& v) {
  return v.empty() ? CoefficientRing::rationals() : v[0].ring();
}

// Promote every entry of both operators into a common ring.
std::pair<SenOperator, SenOperator> align(SenOperator a, SenOperator b) {
  require(a.kind == b.kind, errc::mixed_representation_kind,
          "cannot combine a semisimple class with a matrix operator");
  Scalar zl(a.ring, Rat(0));
  Scalar zr(b.ring, Rat(0));
  auto [cl, cr] = coerce(zl, zr);
  CoefficientRing ring = cl.ring();
  for (auto& x : a.eigenvalues) x = x.promoted(ring);
  for (auto& x : b.eigenvalues) x = x.promoted(ring);
  for (auto& row : a.entries)
    for (auto& x : row) x = x.promoted(ring);
  for (auto& row : b.entries)
    for (auto& x : row) x = x.promoted(ring);
  a.ring = ring;
  b.ring = ring;
  return {std::move(a), std::move(b)};
}

}  // namespace

bool SenOperator::operator==(const SenOperator& other) const {
  if (kind != other.kind) return false;
  if (is_class()) return scalar_vec_eq(eigenvalues, other.eigenvalues);
  if (entries.size() != other.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!scalar_vec_eq(entries[i], other.entries[i])) return false;
  return true;
}

std::string SenOperator::str() const {
  std::ostringstream out;
  if (is_class()) {
    out << "{";
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
      if (i) out << ", ";
      out << eigenvalues[i].str();
    }
    out << "}";
  } else {
    out << "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out << "; ";
      for (std::size_t j = 0; j < entries[i].size(); ++j) {
        if (j) out << ", ";
        out << entries[i][j].str();
      }
    }
    out << "]";
  }
  return out.str();
}

split_failure::split_failure(std::string message, std::vector<Scalar> monic)
    : error(errc::char_poly_does_not_split, std::move(message)),
      monic_(std::move(monic)) {}

SenOperator sen_class(ScalarVec eigenvalues) {
  SenOperator op;
  op.kind = SenOperator::Kind::semisimple_class;
  op.ring = ring_of(eigenvalues);
  for (auto& x : eigenvalues) x = x.promoted(op.ring);
  sort_eigenvalues(eigenvalues);
  op.eigenvalues = std::move(eigenvalues);
  return op;
}

SenOperator sen_matrix(ScalarMat entries) {
  smat_check_square(entries);
  SenOperator op;
  op.kind = SenOperator::Kind::matrix;
  op.ring = entries.empty() ? CoefficientRing::rationals()
                            : smat_ring(entries);
  for (auto& row : entries)
    for (auto& x : row) x = x.promoted(op.ring);
  op.entries = std::move(entries);
  return op;
}

SenOperator sen_from_ht_weights(const std::vector<Int>& weights) {
  ScalarVec eigenvalues;
  eigenvalues.reserve(weights.size());
  for (const auto& w : weights) eigenvalues.emplace_back(Rat(w));
  return sen_class(std::move(eigenvalues));
}

SenOperator sen_direct_sum(const SenOperator& a, const SenOperator& b) {
  auto [x, y] = align(a, b);
  if (x.is_class()) {
    ScalarVec all = x.eigenvalues;
    all.insert(all.end(), y.eigenvalues.begin(), y.eigenvalues.end());
    return sen_class(std::move(all));
  }
  std::size_t n = x.entries.size(), m = y.entries.size();
  Scalar zero(x.ring, Rat(0));
  ScalarMat block(n + m, ScalarVec(n + m, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) block[i][j] = x.entries[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) block[n + i][n + j] = y.entries[i][j];
  return sen_matrix(std::move(block));
}

SenOperator sen_tensor(const SenOperator& a, const SenOperator& b) {
  auto [x, y] = align(a, b);
  if (x.is_class()) {
    ScalarVec sums;
    sums.reserve(x.eigenvalues.size() * y.eigenvalues.size());
    for (const auto& u : x.eigenvalues)
      for (const auto& v : y.eigenvalues) sums.push_back(u + v);
    return sen_class(std::move(sums));
  }
  // Kronecker sum A (x) I + I (x) B on K^n (x) K^m.
  std::size_t n = x.entries.size(), m = y.entries.size();
  Scalar zero(x.ring, Rat(0));
  ScalarMat out(n * m, ScalarVec(n * m, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        out[i * m + k][j * m + k] += x.entries[i][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l)
        out[i * m + k][i * m + l] += y.entries[k][l];
  return sen_matrix(std::move(out));
}

std::optional<ScalarVec> split_roots(const UPoly& p) {
  require(!p.is_zero() && p.is_monic(), errc::bad_scalar,
          "root extraction needs a monic polynomial");
  const CoefficientRing& ring = p.ring();
  ScalarVec roots;
  UPoly cur = p;
  // Peel off rational roots while every coefficient is rational.
  while (cur.degree() > 0) {
    bool rational = true;
    for (const auto& c : cur.coeffs())
      if (!c.is_rational()) {
        rational = false;
        break;
      }
    if (!rational) break;
    if (cur.degree() <= 2) break;  // handled below, possibly with radicals
    RatPoly rp;
    for (const auto& c : cur.coeffs()) rp.push_back(c.as_rational());
    auto found = ratpoly_rational_roots(rp);
    if (found.empty()) return std::nullopt;
    for (const auto& r : found) {
      Scalar root(ring, r);
      UPoly lin(ring, {-root, Scalar(ring, Rat(1))});
      auto [q, rem] = cur.divmod(lin);
      require(rem.is_zero(), errc::internal_error,
              "claimed rational root does not divide");
      cur = q;
      roots.push_back(root);
    }
  }
  if (cur.degree() == 0) {
    sort_eigenvalues(roots);
    return roots;
  }
  if (cur.degree() == 1) {
    roots.push_back(-cur.coeff(0));
    sort_eigenvalues(roots);
    return roots;
  }
  if (cur.degree() == 2) {
    // x^2 + bx + c: roots (-b +- sqrt(b^2 - 4c)) / 2.
    Scalar b = cur.coeff(1);
    Scalar c = cur.coeff(0);
    Scalar disc = b * b - Scalar(ring, Rat(4)) * c;
    auto s = sqrt_in_field(disc);
    if (!s) return std::nullopt;
    Scalar half(ring, Rat(1, 2));
    roots.push_back((-b + *s) * half);
    roots.push_back((-b - *s) * half);
    sort_eigenvalues(roots);
    return roots;
  }
  return std::nullopt;
}

SenOperator semisimple_class_of_matrix(const SenOperator& m,
                                       const BasedRootDatum& d) {
  require(!m.is_class(), errc::mixed_representation_kind,
          "operator is already a semisimple class");
  require(m.entries.size() == d.rank(), errc::wrong_dimension,
          "matrix size must equal the rank of the datum");
  if (triangularity(m.entries) != Triangularity::none) {
    ScalarVec diag;
    for (std::size_t i = 0; i < m.entries.size(); ++i)
      diag.push_back(m.entries[i][i]);
    return sen_class(std::move(diag));
  }
  UPoly p = char_poly(m.entries);
  auto roots = split_roots(p);
  if (!roots)
    throw split_failure(
        "characteristic polynomial " + p.str() +
            " does not split over the coefficient ring",
        p.coeffs());
  return sen_class(std::move(*roots));
}

HodgeTateResult is_hodge_tate(const SenOperator& m) {
  if (m.is_class()) {
    for (const auto& x : m.eigenvalues)
      if (!x.is_integer())
        return {false, "non-integer eigenvalue " + x.str()};
    return {true, ""};
  }
  UPoly p = char_poly(m.entries);
  // Integer eigenvalues force rational coefficients; checking this first also
  // keeps the gcd below inside polynomials with unit leading coefficients.
  for (const auto& c : p.coeffs())
    if (!c.is_rational())
      return {false,
              "non-integer eigenvalue (characteristic polynomial has "
              "non-rational coefficients)"};
  // Squarefree part q = p / gcd(p, p'); the operator is diagonalizable
  // exactly when q annihilates it.
  UPoly g = UPoly::gcd_monic(p, p.derivative());
  auto [q, rem] = p.divmod(g);
  require(rem.is_zero(), errc::internal_error, "gcd does not divide");
  if (!smat_is_zero(q.eval_matrix(m.entries)))
    return {false, "minimal polynomial is not squarefree"};
  RatPoly rp;
  for (const auto& c : p.coeffs()) rp.push_back(c.as_rational());
  auto found = ratpoly_rational_roots(rp);
  for (const auto& r : found) {
    if (!rat_is_integer(r))
      return {false, "non-integer eigenvalue " + show_rat(r)};
  }
  if (found.size() != m.entries.size())
    return {false, "non-integer eigenvalue (characteristic polynomial has an "
                   "irrational root)"};
  return {true, ""};
}

SenOperator specialize(const SenOperator& m,
                       const std::map<std::string, Scalar>& values) {
  SenOperator out = m;
  if (!m.ring.is_family()) return out;
  out.ring = m.ring.base_field();
  for (auto& x : out.eigenvalues) x = x.specialize(values);
  for (auto& row : out.entries)
    for (auto& x : row) x = x.specialize(values);
  if (out.is_class()) sort_eigenvalues(out.eigenvalues);
  return out;
}

}  // namespace infchar
