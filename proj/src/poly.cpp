#include "infchar/poly.hpp"

#include <algorithm>

#include "infchar/error.hpp"

namespace infchar {

UPoly::UPoly(CoefficientRing ring) : ring_(std::move(ring)) {}

UPoly::UPoly(CoefficientRing ring, std::vector<Scalar> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_)
    if (c.ring() != ring_) c = c.promoted(ring_);
  normalize();
}

void UPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::from_roots(const CoefficientRing& ring, const ScalarVec& roots) {
  UPoly p(ring, {Scalar(ring, Rat(1))});
  for (auto& r : roots) {
    UPoly lin(ring, {-r.promoted(ring), Scalar(ring, Rat(1))});
    p = p * lin;
  }
  return p;
}

Scalar UPoly::coeff(std::size_t i) const {
  if (i >= coeffs_.size()) return Scalar(ring_, Rat(0));
  return coeffs_[i];
}

bool UPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == Scalar(ring_, Rat(1));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r(ring_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Scalar(ring_, Rat(0)));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  r.normalize();
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  UPoly r(ring_);
  if (coeffs_.empty() || o.coeffs_.empty()) return r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Scalar(ring_, Rat(0)));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  r.normalize();
  return r;
}

bool UPoly::operator==(const UPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

UPoly UPoly::derivative() const {
  UPoly r(ring_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1, Scalar(ring_, Rat(0)));
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_[i - 1] = coeffs_[i] * Scalar(ring_, Rat(Int(i)));
  r.normalize();
  return r;
}

Scalar UPoly::eval(const Scalar& x) const {
  Scalar acc(ring_, Rat(0));
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

ScalarMat UPoly::eval_matrix(const ScalarMat& m) const {
  smat_check_square(m);
  std::size_t n = m.size();
  ScalarMat acc(n, ScalarVec(n, Scalar(ring_, Rat(0))));
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = smat_mul(acc, m);
    for (std::size_t d = 0; d < n; ++d) acc[d][d] += coeffs_[i];
  }
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& o) const {
  require(!o.is_zero(), errc::division_by_zero, "polynomial division by zero");
  Scalar lead_inv = o.coeffs_.back().inverse();
  UPoly rem = *this;
  UPoly quot(ring_);
  int dd = o.degree();
  if (degree() >= dd) quot.coeffs_.assign(coeffs_.size() - o.coeffs_.size() + 1, Scalar(ring_, Rat(0)));
  while (rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Scalar c = rem.coeffs_.back() * lead_inv;
    quot.coeffs_[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= dd; ++i)
      rem.coeffs_[static_cast<std::size_t>(k + i)] -= c * o.coeffs_[static_cast<std::size_t>(i)];
    rem.normalize();
  }
  quot.normalize();
  return {quot, rem};
}

UPoly UPoly::monic() const {
  require(!is_zero(), errc::division_by_zero, "cannot normalize the zero polynomial");
  Scalar inv = coeffs_.back().inverse();
  UPoly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UPoly UPoly::gcd_monic(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

std::vector<Scalar> UPoly::power_sums(std::size_t k) const {
  require(is_monic(), errc::internal_error, "power sums need a monic polynomial");
  std::size_t n = static_cast<std::size_t>(degree());
  // e_j = (-1)^j c_{n-j}
  std::vector<Scalar> e(k + 1, Scalar(ring_, Rat(0)));
  for (std::size_t j = 1; j <= k && j <= n; ++j) {
    Scalar c = coeffs_[n - j];
    e[j] = (j % 2 == 0) ? c : -c;
  }
  std::vector<Scalar> p(k + 1, Scalar(ring_, Rat(0)));
  for (std::size_t m = 1; m <= k; ++m) {
    Scalar acc(ring_, Rat(0));
    for (std::size_t i = 1; i < m; ++i) {
      Scalar t = e[i] * p[m - i];
      acc += (i % 2 == 1) ? t : -t;
    }
    Scalar tail = e[m] * Scalar(ring_, Rat(Int(m)));
    acc += (m % 2 == 1) ? tail : -tail;
    p[m] = acc;
  }
  return std::vector<Scalar>(p.begin() + 1, p.end());
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    std::string piece;
    std::string cs = coeffs_[i].str();
    bool is_one = (cs == "1"), is_minus_one = (cs == "-1");
    bool composite = cs.find(' ') != std::string::npos;
    if (i == 0) {
      piece = composite ? "(" + cs + ")" : cs;
    } else {
      std::string vp = var + (i > 1 ? "^" + std::to_string(i) : "");
      if (is_one)
        piece = vp;
      else if (is_minus_one)
        piece = "-" + vp;
      else
        piece = (composite ? "(" + cs + ")" : cs) + "*" + vp;
    }
    if (out.empty())
      out = piece;
    else if (!piece.empty() && piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

// --- matrices ----------------------------------------------------------------

void smat_check_square(const ScalarMat& a) {
  for (auto& row : a)
    require(row.size() == a.size(), errc::wrong_dimension, "matrix is not square");
}

CoefficientRing smat_ring(const ScalarMat& a) {
  for (auto& row : a)
    for (auto& x : row)
      if (!x.ring().is_rationals()) return x.ring();
  return CoefficientRing::rationals();
}

ScalarMat smat_identity(const CoefficientRing& ring, std::size_t n) {
  ScalarMat m(n, ScalarVec(n, Scalar(ring, Rat(0))));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(ring, Rat(1));
  return m;
}

ScalarMat smat_mul(const ScalarMat& a, const ScalarMat& b) {
  require(!a.empty() || b.empty(), errc::wrong_dimension, "matrix product shape mismatch");
  if (a.empty()) return {};
  require(a[0].size() == b.size(), errc::wrong_dimension, "matrix product shape mismatch");
  std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  CoefficientRing ring = smat_ring(a);
  if (ring.is_rationals()) ring = smat_ring(b);
  ScalarMat r(rows, ScalarVec(cols, Scalar(ring, Rat(0))));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

ScalarMat smat_add(const ScalarMat& a, const ScalarMat& b) {
  require(a.size() == b.size(), errc::wrong_dimension, "matrix sum shape mismatch");
  ScalarMat r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    require(a[i].size() == b[i].size(), errc::wrong_dimension, "matrix sum shape mismatch");
    for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
  }
  return r;
}

ScalarMat smat_scale(const ScalarMat& a, const Scalar& c) {
  ScalarMat r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

Scalar smat_trace(const ScalarMat& a) {
  smat_check_square(a);
  Scalar t = a.empty() ? Scalar() : Scalar(smat_ring(a), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

bool smat_is_zero(const ScalarMat& a) {
  for (auto& row : a)
    for (auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

UPoly char_poly(const ScalarMat& a) {
  smat_check_square(a);
  std::size_t n = a.size();
  CoefficientRing ring = smat_ring(a);
  std::vector<Scalar> c(n + 1, Scalar(ring, Rat(0)));
  c[n] = Scalar(ring, Rat(1));
  ScalarMat m(n, ScalarVec(n, Scalar(ring, Rat(0))));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    m = smat_mul(a, m);
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    ScalarMat am = smat_mul(a, m);
    Scalar tr = smat_trace(am);
    c[n - k] = -tr * Scalar(ring, Rat(1, Int(k)));
  }
  return UPoly(ring, std::move(c));
}

Triangularity triangularity(const ScalarMat& a) {
  smat_check_square(a);
  bool lower = true, upper = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i < j && !a[i][j].is_zero()) lower = false;
      if (i > j && !a[i][j].is_zero()) upper = false;
    }
  if (upper) return Triangularity::upper;
  if (lower) return Triangularity::lower;
  return Triangularity::none;
}

}  // namespace infchar
