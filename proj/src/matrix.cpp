#include "infchar/matrix.hpp"

#include <algorithm>

#include "infchar/error.hpp"

namespace infchar {

IntMat identity_mat(std::size_t n) {
  IntMat m(n, IntVec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool is_identity(const IntMat& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != ((i == j) ? 1 : 0)) return false;
  return true;
}

bool is_square(const IntMat& m) {
  for (auto& row : m)
    if (row.size() != m.size()) return false;
  return true;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  require(!a.empty() && !b.empty() && a[0].size() == b.size(), errc::wrong_dimension,
          "matrix product shape mismatch");
  IntMat r(a.size(), IntVec(b[0].size(), Int(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

IntMat mat_transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat r(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
  return r;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
  IntVec r(m.size(), Int(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    require(m[i].size() == v.size(), errc::wrong_dimension, "matrix/vector shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

RatVec mat_apply(const IntMat& m, const RatVec& v) {
  RatVec r(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    require(m[i].size() == v.size(), errc::wrong_dimension, "matrix/vector shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += Rat(m[i][j]) * v[j];
  }
  return r;
}

IntMat mat_pow(const IntMat& m, unsigned long long k) {
  IntMat acc = identity_mat(m.size()), base = m;
  while (k) {
    if (k & 1) acc = mat_mul(acc, base);
    k >>= 1;
    if (k) base = mat_mul(base, base);
  }
  return acc;
}

Int dot(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), errc::wrong_dimension, "dot product shape mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  require(a.size() == b.size(), errc::wrong_dimension, "dot product shape mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), errc::wrong_dimension, "vector sum shape mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), errc::wrong_dimension, "vector difference shape mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  require(a.size() == b.size(), errc::wrong_dimension, "vector sum shape mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  require(a.size() == b.size(), errc::wrong_dimension, "vector difference shape mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

std::optional<IntVec> to_int(const RatVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!rat_is_integer(v[i])) return std::nullopt;
    r[i] = numerator(v[i]);
  }
  return r;
}

Int mat_det(IntMat m) {
  require(is_square(m), errc::wrong_dimension, "determinant of a non-square matrix");
  std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::optional<IntMat> mat_inverse_unimodular(const IntMat& m) {
  Int d = mat_det(m);
  if (d != 1 && d != -1) return std::nullopt;
  std::size_t n = m.size();
  // Gauss-Jordan over the rationals, then read off the (integral) inverse.
  RatMat aug(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(m[i][j]);
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    require(p < n, errc::internal_error, "unimodular matrix unexpectedly singular");
    std::swap(aug[c], aug[p]);
    Rat inv = Rat(1) / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  IntMat inv(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(rat_is_integer(aug[i][n + j]), errc::internal_error,
              "inverse of unimodular matrix not integral");
      inv[i][j] = numerator(aug[i][n + j]);
    }
  return inv;
}

std::optional<RatVec> solve_rational_injective(const RatMat& a, const RatVec& b) {
  std::size_t rows = a.size();
  require(rows == b.size(), errc::wrong_dimension, "linear system shape mismatch");
  std::size_t cols = rows ? a[0].size() : 0;
  RatMat aug(rows, RatVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    require(a[i].size() == cols, errc::wrong_dimension, "ragged matrix");
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][cols] = b[i];
  }
  std::vector<std::size_t> pivot_row(cols, rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[r], aug[p]);
    Rat inv = Rat(1) / aug[r][c];
    for (auto& x : aug[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_row[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;  // inconsistent
  RatVec x(cols, Rat(0));
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] == rows) return std::nullopt;  // free column: A not injective
    x[c] = aug[pivot_row[c]][cols];
  }
  return x;
}

namespace {

// Row Hermite reduction of `m`, mirroring every row operation onto `track`
// (when non-null).  Returns pivot columns per row; zero rows sink to the
// bottom.  Pivots are positive and entries above each pivot are reduced into
// [0, pivot).
std::vector<std::size_t> hnf_rows(IntMat& m, IntMat* track) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] -= q * m[src][j];
    if (track)
      for (std::size_t j = 0; j < (*track)[dst].size(); ++j)
        (*track)[dst][j] -= q * (*track)[src][j];
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(m[i], m[j]);
    if (track) std::swap((*track)[i], (*track)[j]);
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : m[i]) x = -x;
    if (track)
      for (auto& x : (*track)[i]) x = -x;
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd chaining within column c on rows r..end
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == rows) break;
      swap_rows(r, best);
      bool any = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        add_multiple(i, r, q);
        if (m[i][c] != 0) any = true;
      }
      if (!any) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0) negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = m[i][c] / m[r][c];
      if (m[i][c] < 0 && m[i][c] % m[r][c] != 0) --q;  // floor division
      if (q != 0) add_multiple(i, r, q);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

std::optional<IntSolution> solve_integer(const IntMat& a, const IntVec& b) {
  std::size_t m = a.size();
  require(b.size() == m, errc::wrong_dimension, "linear system shape mismatch");
  std::size_t n = m ? a[0].size() : 0;
  for (auto& row : a) require(row.size() == n, errc::wrong_dimension, "ragged matrix");
  // Row-reduce A^T with a tracking matrix: U A^T = H.  Solving z H = b^T in z
  // gives x = z^T-weighted rows of U.
  IntMat h = mat_transpose(a);
  IntMat u = identity_mat(n);
  auto pivots = hnf_rows(h, &u);
  std::size_t rank = pivots.size();
  IntVec z(rank, Int(0));
  IntVec residual = b;
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t c = pivots[i];
    if (residual[c] % h[i][c] != 0) return std::nullopt;
    z[i] = residual[c] / h[i][c];
    for (std::size_t j = 0; j < m; ++j) residual[j] -= z[i] * h[i][j];
  }
  for (auto& v : residual)
    if (v != 0) return std::nullopt;
  IntVec x(n, Int(0));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < n; ++j) x[j] += z[i] * u[i][j];
  IntSolution sol;
  sol.particular = std::move(x);
  for (std::size_t i = rank; i < n; ++i) sol.kernel.push_back(u[i]);
  return sol;
}

IntVec reduce_mod_lattice(IntVec x, std::vector<IntVec> basis) {
  if (basis.empty()) return x;
  IntMat m = std::move(basis);
  auto pivots = hnf_rows(m, nullptr);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::size_t c = pivots[i];
    Int p = m[i][c];
    Int q = x[c] / p;
    if (x[c] < 0 && x[c] % p != 0) --q;
    if (q != 0)
      for (std::size_t j = 0; j < x.size(); ++j) x[j] -= q * m[i][j];
  }
  return x;
}

}  // namespace infchar
