#include "infchar/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "infchar/error.hpp"

namespace infchar {

namespace {

struct IntVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct IntMatLess {
  bool operator()(const IntMat& a, const IntMat& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    IntVecLess less;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return less(a[i], b[i]);
    }
    return false;
  }
};

std::size_t rational_rank(const RatMat& m) {
  RatMat a = m;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Rational expansion of every root over Delta.  Requires Delta independent.
std::vector<RatVec> delta_expansions(const BasedRootDatum& d) {
  RatMat a(d.rank(), RatVec(d.n_simple(), Rat(0)));
  for (std::size_t k = 0; k < d.n_simple(); ++k)
    for (std::size_t i = 0; i < d.rank(); ++i) a[i][k] = Rat(d.simple_root(k)[i]);
  std::vector<RatVec> out;
  out.reserve(d.datum.roots.size());
  for (auto& root : d.datum.roots) {
    auto sol = solve_rational_injective(a, to_rat(root));
    require(sol.has_value(), errc::not_based,
            "root outside the span of the simple roots");
    out.push_back(std::move(*sol));
  }
  return out;
}

std::optional<std::size_t> find_root_index(const RootDatum& datum, const IntVec& v) {
  for (std::size_t i = 0; i < datum.roots.size(); ++i)
    if (datum.roots[i] == v) return i;
  return std::nullopt;
}

}  // namespace

BasedRootDatum validate_based_root_datum(std::size_t rank, std::vector<IntVec> roots,
                                         std::vector<IntVec> coroots,
                                         std::vector<std::size_t> simple) {
  require(roots.size() == coroots.size(), errc::schema_violation,
          "roots and coroots must be paired by index");
  for (auto& r : roots)
    require(r.size() == rank, errc::schema_violation, "root of the wrong length");
  for (auto& c : coroots)
    require(c.size() == rank, errc::schema_violation, "coroot of the wrong length");
  std::set<std::size_t> seen_simple;
  for (auto i : simple) {
    require(i < roots.size(), errc::schema_violation, "simple index out of range");
    require(seen_simple.insert(i).second, errc::schema_violation, "duplicate simple index");
  }

  BasedRootDatum d;
  d.datum.rank = rank;
  d.datum.roots = std::move(roots);
  d.datum.coroots = std::move(coroots);
  d.simple = std::move(simple);
  const auto& rs = d.datum.roots;
  const auto& cs = d.datum.coroots;

  // pairing normalization
  for (std::size_t i = 0; i < rs.size(); ++i)
    require(dot(rs[i], cs[i]) == 2, errc::pairing_violation,
            "pairing of root " + std::to_string(i) + " with its coroot is not 2");

  // reduced and duplicate-free
  std::set<IntVec, IntVecLess> root_set(rs.begin(), rs.end());
  require(root_set.size() == rs.size(), errc::not_reduced, "duplicate root");
  for (auto& r : rs) {
    IntVec twice(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) twice[i] = 2 * r[i];
    require(!root_set.count(twice), errc::not_reduced,
            "root system is not reduced (contains both a and 2a)");
  }

  // reflection closure, compatible with the root/coroot pairing
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < rs.size(); ++j) {
      Int c1 = dot(rs[j], cs[i]);
      IntVec img(rank), coimg(rank);
      Int c2 = dot(rs[i], cs[j]);
      for (std::size_t t = 0; t < rank; ++t) {
        img[t] = rs[j][t] - c1 * rs[i][t];
        coimg[t] = cs[j][t] - c2 * cs[i][t];
      }
      auto k = find_root_index(d.datum, img);
      require(k.has_value(), errc::not_closed_under_reflection,
              "reflection of root " + std::to_string(j) + " along root " + std::to_string(i) +
                  " leaves the root set");
      require(cs[*k] == coimg, errc::not_closed_under_reflection,
              "coroots are not permuted compatibly with the roots under reflection");
    }
  }

  // based structure
  RatMat delta(rank, RatVec(d.n_simple(), Rat(0)));
  for (std::size_t k = 0; k < d.n_simple(); ++k)
    for (std::size_t t = 0; t < rank; ++t) delta[t][k] = Rat(d.simple_root(k)[t]);
  require(rational_rank(delta) == d.n_simple(), errc::not_based,
          "simple roots are linearly dependent");
  for (auto& exp : delta_expansions(d)) {
    bool nonneg = true, nonpos = true;
    for (auto& c : exp) {
      require(rat_is_integer(c), errc::not_based, "non-integer expansion over Delta");
      if (c > 0) nonpos = false;
      if (c < 0) nonneg = false;
    }
    require(nonneg || nonpos, errc::not_based, "root with mixed-sign expansion over Delta");
  }
  return d;
}

namespace {

BasedRootDatum from_simple_system(std::size_t rank, const std::vector<IntVec>& s_roots,
                                  const std::vector<IntVec>& s_coroots) {
  std::vector<IntVec> roots = s_roots, coroots = s_coroots;
  std::set<IntVec, IntVecLess> seen(roots.begin(), roots.end());
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (std::size_t i = 0; i < s_roots.size(); ++i) {
      Int c1 = dot(roots[head], s_coroots[i]);
      Int c2 = dot(s_roots[i], coroots[head]);
      IntVec img(rank), coimg(rank);
      for (std::size_t t = 0; t < rank; ++t) {
        img[t] = roots[head][t] - c1 * s_roots[i][t];
        coimg[t] = coroots[head][t] - c2 * s_coroots[i][t];
      }
      if (seen.insert(img).second) {
        roots.push_back(img);
        coroots.push_back(coimg);
      }
      require(roots.size() <= 4096, errc::internal_error, "root closure diverged");
    }
  }
  std::vector<std::size_t> simple(s_roots.size());
  for (std::size_t i = 0; i < simple.size(); ++i) simple[i] = i;
  return validate_based_root_datum(rank, std::move(roots), std::move(coroots),
                                   std::move(simple));
}

IntVec basis_vec(std::size_t rank, std::size_t i, long long v = 1) {
  IntVec e(rank, Int(0));
  e[i] = v;
  return e;
}

}  // namespace

BasedRootDatum builtin_datum(const std::string& family, long long n) {
  auto bad_n = [&](const std::string& why) {
    fail(errc::unsupported_family, family + "(" + std::to_string(n) + "): " + why);
  };
  auto check_rank = [&](long long rank) {
    require(rank <= static_cast<long long>(kRankCap), errc::rank_cap_exceeded,
            family + "(" + std::to_string(n) + ") exceeds the rank cap " +
                std::to_string(kRankCap));
    return static_cast<std::size_t>(rank);
  };
  if (family == "GL") {
    if (n < 1) bad_n("n must be at least 1");
    std::size_t r = check_rank(n);
    std::vector<IntVec> sr, sc;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      IntVec v(r, Int(0));
      v[i] = 1;
      v[i + 1] = -1;
      sr.push_back(v);
      sc.push_back(v);
    }
    return from_simple_system(r, sr, sc);
  }
  if (family == "SL" || family == "PGL") {
    if (n < 2) bad_n("n must be at least 2");
    std::size_t r = check_rank(n - 1);
    // type A_{n-1} Cartan matrix columns
    std::vector<IntVec> cartan_cols(r, IntVec(r, Int(0)));
    for (std::size_t j = 0; j < r; ++j) {
      cartan_cols[j][j] = 2;
      if (j > 0) cartan_cols[j][j - 1] = -1;
      if (j + 1 < r) cartan_cols[j][j + 1] = -1;
    }
    std::vector<IntVec> sr, sc;
    for (std::size_t j = 0; j < r; ++j) {
      if (family == "SL") {
        // X = weight lattice: simple roots are Cartan columns, coroots are basis vectors
        sr.push_back(cartan_cols[j]);
        sc.push_back(basis_vec(r, j));
      } else {
        // X = root lattice: simple roots are basis vectors, coroots are Cartan columns
        sr.push_back(basis_vec(r, j));
        sc.push_back(cartan_cols[j]);
      }
    }
    return from_simple_system(r, sr, sc);
  }
  if (family == "Sp") {
    if (n < 1) bad_n("n must be at least 1 (Sp_2n has rank n)");
    std::size_t r = check_rank(n);
    std::vector<IntVec> sr, sc;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      IntVec v(r, Int(0));
      v[i] = 1;
      v[i + 1] = -1;
      sr.push_back(v);
      sc.push_back(v);
    }
    sr.push_back(basis_vec(r, r - 1, 2));  // long root 2 e_r
    sc.push_back(basis_vec(r, r - 1, 1));
    return from_simple_system(r, sr, sc);
  }
  if (family == "SO") {
    if (n < 2) bad_n("n must be at least 2");
    std::size_t r = check_rank(n / 2);
    std::vector<IntVec> sr, sc;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      IntVec v(r, Int(0));
      v[i] = 1;
      v[i + 1] = -1;
      sr.push_back(v);
      sc.push_back(v);
    }
    if (n % 2 == 1) {  // type B: short root e_r, coroot 2 e_r
      sr.push_back(basis_vec(r, r - 1, 1));
      sc.push_back(basis_vec(r, r - 1, 2));
    } else if (r >= 2) {  // type D: e_{r-1} + e_r
      IntVec v(r, Int(0));
      v[r - 2] = 1;
      v[r - 1] = 1;
      sr.push_back(v);
      sc.push_back(v);
    }
    return from_simple_system(r, sr, sc);
  }
  fail(errc::unsupported_family, "unknown family '" + family + "'");
}

bool datum_equal(const BasedRootDatum& a, const BasedRootDatum& b) {
  return a.datum.rank == b.datum.rank && a.datum.roots == b.datum.roots &&
         a.datum.coroots == b.datum.coroots && a.simple == b.simple;
}

bool datum_equal_up_to_order(const BasedRootDatum& a, const BasedRootDatum& b) {
  if (a.datum.rank != b.datum.rank || a.datum.roots.size() != b.datum.roots.size() ||
      a.n_simple() != b.n_simple())
    return false;
  std::set<std::size_t> b_simple(b.simple.begin(), b.simple.end());
  std::vector<bool> used(b.datum.roots.size(), false);
  for (std::size_t i = 0; i < a.datum.roots.size(); ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < b.datum.roots.size(); ++j) {
      if (used[j] || a.datum.roots[i] != b.datum.roots[j] ||
          a.datum.coroots[i] != b.datum.coroots[j])
        continue;
      bool a_is_simple =
          std::find(a.simple.begin(), a.simple.end(), i) != a.simple.end();
      if (a_is_simple != (b_simple.count(j) > 0)) continue;
      used[j] = true;
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  return true;
}

BasedRootDatum dualize(const BasedRootDatum& d) {
  return validate_based_root_datum(d.datum.rank, d.datum.coroots, d.datum.roots, d.simple);
}

std::vector<int> root_signs(const BasedRootDatum& d) {
  auto exps = delta_expansions(d);
  std::vector<int> signs;
  signs.reserve(exps.size());
  for (auto& e : exps) {
    int s = 0;
    for (auto& c : e)
      if (c != 0) {
        s = c > 0 ? 1 : -1;
        break;
      }
    require(s != 0, errc::internal_error, "zero root");
    signs.push_back(s);
  }
  return signs;
}

IntMat reflection_matrix(const BasedRootDatum& d, std::size_t root_index) {
  require(root_index < d.datum.roots.size(), errc::schema_violation,
          "root index out of range");
  std::size_t r = d.rank();
  const IntVec& alpha = d.datum.roots[root_index];
  const IntVec& cov = d.datum.coroots[root_index];
  IntMat m = identity_mat(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i][j] -= alpha[i] * cov[j];
  return m;
}

bool WeylGroup::contains(const IntMat& w) const {
  return std::find(elements.begin(), elements.end(), w) != elements.end();
}

WeylGroup weyl_group(const BasedRootDatum& d, std::size_t cap) {
  WeylGroup w;
  for (std::size_t k = 0; k < d.n_simple(); ++k)
    w.generators.push_back(reflection_matrix(d, d.simple[k]));
  std::set<IntMat, IntMatLess> seen;
  std::deque<IntMat> queue;
  IntMat id = identity_mat(d.rank());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    IntMat cur = std::move(queue.front());
    queue.pop_front();
    w.elements.push_back(cur);
    for (auto& g : w.generators) {
      IntMat nxt = mat_mul(cur, g);
      if (seen.insert(nxt).second) {
        require(seen.size() <= cap, errc::weyl_cap_exceeded,
                "Weyl group exceeds the enumeration cap " + std::to_string(cap));
        queue.push_back(std::move(nxt));
      }
    }
  }
  return w;
}

RatVec half_sum_positive_roots(const BasedRootDatum& d) {
  auto signs = root_signs(d);
  RatVec delta(d.rank(), Rat(0));
  for (std::size_t i = 0; i < d.datum.roots.size(); ++i) {
    if (signs[i] <= 0) continue;
    for (std::size_t t = 0; t < d.rank(); ++t)
      delta[t] += Rat(d.datum.roots[i][t], 2);
  }
  return delta;
}

std::optional<IntVec> find_twisting_element(const BasedRootDatum& d) {
  if (d.n_simple() == 0) return IntVec(d.rank(), Int(0));
  IntMat a(d.n_simple(), IntVec(d.rank()));
  for (std::size_t k = 0; k < d.n_simple(); ++k) a[k] = d.simple_coroot(k);
  auto sol = solve_integer(a, IntVec(d.n_simple(), Int(1)));
  if (!sol) return std::nullopt;
  return reduce_mod_lattice(sol->particular, sol->kernel);
}

bool is_dominant(const RatVec& weight, const BasedRootDatum& d) {
  require(weight.size() == d.rank(), errc::wrong_dimension,
          "weight length does not match the rank");
  for (std::size_t k = 0; k < d.n_simple(); ++k)
    if (dot(weight, d.simple_coroot(k)) < 0) return false;
  return true;
}

DominantRep dominant_representative(RatVec weight, const BasedRootDatum& d) {
  require(weight.size() == d.rank(), errc::wrong_dimension,
          "weight length does not match the rank");
  DominantRep out;
  std::size_t guard = 0;
  while (true) {
    bool moved = false;
    for (std::size_t k = 0; k < d.n_simple(); ++k) {
      Rat c = dot(weight, d.simple_coroot(k));
      if (c < 0) {
        const IntVec& alpha = d.simple_root(k);
        for (std::size_t t = 0; t < weight.size(); ++t) weight[t] -= c * Rat(alpha[t]);
        out.word.push_back(k);
        moved = true;
        break;
      }
    }
    if (!moved) break;
    require(++guard <= 1000000, errc::internal_error, "chamber descent failed to terminate");
  }
  out.weight = std::move(weight);
  return out;
}

RatVec apply_word(const BasedRootDatum& d, const std::vector<std::size_t>& word, RatVec v) {
  for (auto k : word) {
    require(k < d.n_simple(), errc::schema_violation, "word entry out of range");
    Rat c = dot(v, d.simple_coroot(k));
    const IntVec& alpha = d.simple_root(k);
    for (std::size_t t = 0; t < v.size(); ++t) v[t] -= c * Rat(alpha[t]);
  }
  return v;
}

PinnedAutomorphism make_pinned_automorphism(const BasedRootDatum& d, IntMat matrix,
                                            unsigned order_cap) {
  require(matrix.size() == d.rank(), errc::schema_violation,
          "automorphism matrix has the wrong size");
  for (auto& row : matrix)
    require(row.size() == d.rank(), errc::schema_violation,
            "automorphism matrix has the wrong size");
  auto inv = mat_inverse_unimodular(matrix);
  require(inv.has_value(), errc::not_pinned, "automorphism matrix is not unimodular");

  PinnedAutomorphism g;
  g.matrix = std::move(matrix);
  g.inverse = std::move(*inv);

  // Delta permutation on the root side
  for (std::size_t k = 0; k < d.n_simple(); ++k) {
    IntVec img = mat_apply(g.matrix, d.simple_root(k));
    std::size_t pos = d.n_simple();
    for (std::size_t t = 0; t < d.n_simple(); ++t)
      if (d.simple_root(t) == img) {
        pos = t;
        break;
      }
    require(pos < d.n_simple(), errc::not_pinned,
            "automorphism does not permute the simple roots");
    g.simple_perm.push_back(pos);
  }
  // compatible coroot permutation through the inverse-transpose
  IntMat inv_t = mat_transpose(g.inverse);
  for (std::size_t k = 0; k < d.n_simple(); ++k) {
    IntVec img = mat_apply(inv_t, d.simple_coroot(k));
    require(img == d.simple_coroot(g.simple_perm[k]), errc::not_pinned,
            "automorphism does not act compatibly on the coroots");
  }
  // permutes the full root set
  std::set<IntVec, IntVecLess> root_set(d.datum.roots.begin(), d.datum.roots.end());
  for (auto& r : d.datum.roots)
    require(root_set.count(mat_apply(g.matrix, r)) > 0, errc::not_pinned,
            "automorphism does not permute the roots");
  // finite order
  IntMat power = g.matrix;
  unsigned order = 1;
  while (!is_identity(power)) {
    require(order < order_cap, errc::automorphism_order_cap_exceeded,
            "automorphism order exceeds the cap " + std::to_string(order_cap));
    power = mat_mul(power, g.matrix);
    ++order;
  }
  g.order = order;
  return g;
}

RatVec apply_automorphism(const PinnedAutomorphism& g, const RatVec& v) {
  return mat_apply(g.matrix, v);
}

ScalarVec apply_automorphism(const PinnedAutomorphism& g, const ScalarVec& v) {
  return apply_int_matrix(g.matrix, v);
}

}  // namespace infchar
