#include <doctest.h>

#include <numeric>
#include <optional>

#include "infchar/error.hpp"
#include "infchar/rootdata.hpp"

using namespace infchar;

namespace {

IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

// Independent Weyl order oracle: classify the Coxeter graph of the simple
// system and apply the classical product formulas.  Returns nullopt for
// shapes outside A/B/C/D/G2, in which case the test is skipped.
std::optional<unsigned long long> classified_weyl_order(const BasedRootDatum& d) {
  std::size_t n = d.n_simple();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Int nij = dot(d.simple_root(i), d.simple_coroot(j)) *
                dot(d.simple_root(j), d.simple_coroot(i));
      int m;
      if (nij == 0)
        m = 2;
      else if (nij == 1)
        m = 3;
      else if (nij == 2)
        m = 4;
      else if (nij == 3)
        m = 6;
      else
        return std::nullopt;
      if (m > 2) {
        adj[i].push_back({j, m});
        adj[j].push_back({i, m});
      }
    }
  std::vector<bool> seen(n, false);
  unsigned long long total = 1;
  auto factorial = [](std::size_t k) {
    unsigned long long f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    // collect the component
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (auto [t, m] : adj[comp[h]])
        if (!seen[t]) {
          seen[t] = true;
          comp.push_back(t);
        }
    std::size_t k = comp.size();
    std::vector<int> degrees;
    int edges4 = 0, edges6 = 0, branch = 0;
    for (auto v : comp) {
      int deg = 0;
      for (auto [t, m] : adj[v]) {
        ++deg;
        if (m == 4) ++edges4;
        if (m == 6) ++edges6;
      }
      degrees.push_back(deg);
      if (deg >= 3) ++branch;
    }
    edges4 /= 2;
    edges6 /= 2;
    int max_deg = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    if (k == 1) {
      total *= 2;  // A1
    } else if (edges6 == 1 && k == 2) {
      total *= 12;  // G2
    } else if (edges4 == 0 && edges6 == 0 && max_deg <= 2 && branch == 0) {
      total *= factorial(k + 1);  // A_k
    } else if (edges4 == 1 && edges6 == 0 && max_deg <= 2) {
      total *= (1ull << k) * factorial(k);  // B_k / C_k
    } else if (edges4 == 0 && edges6 == 0 && branch == 1 && k >= 4) {
      total *= (1ull << (k - 1)) * factorial(k);  // D_k
    } else {
      return std::nullopt;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("datum validation accepts the standard examples") {
  auto gl2 = validate_based_root_datum(2, {iv({1, -1}), iv({-1, 1})},
                                       {iv({1, -1}), iv({-1, 1})}, {0});
  CHECK(gl2.rank() == 2);
  auto sl2 = validate_based_root_datum(1, {iv({2}), iv({-2})}, {iv({1}), iv({-1})}, {0});
  CHECK(sl2.n_simple() == 1);
}

TEST_CASE("datum validation rejects broken data") {
  // coroot (1,0) paired with root (1,-1): pairing 1
  CHECK_THROWS_WITH_AS(
      validate_based_root_datum(2, {iv({1, -1}), iv({-1, 1})}, {iv({1, 0}), iv({-1, 0})}, {0}),
      doctest::Contains("PairingViolation"), error);
  // missing the negative root: not closed under reflection
  CHECK_THROWS_WITH_AS(validate_based_root_datum(2, {iv({1, -1})}, {iv({1, -1})}, {0}),
                       doctest::Contains("NotClosedUnderReflection"), error);
  // duplicate root
  CHECK_THROWS_WITH_AS(
      validate_based_root_datum(2, {iv({1, -1}), iv({1, -1})}, {iv({1, -1}), iv({1, -1})}, {0}),
      doctest::Contains("NotReduced"), error);
  // simple set not spanning the roots' expansions: (1,-1) not in span of (1,1)
  CHECK_THROWS_AS(
      validate_based_root_datum(2, {iv({1, -1}), iv({-1, 1})}, {iv({1, -1}), iv({-1, 1})}, {}),
      error);
  // ragged input
  CHECK_THROWS_WITH_AS(validate_based_root_datum(2, {iv({1})}, {iv({1, -1})}, {}),
                       doctest::Contains("SchemaViolation"), error);
}

TEST_CASE("builtin data have the expected shapes") {
  auto gl2 = builtin_datum("GL", 2);
  CHECK(gl2.rank() == 2);
  CHECK(gl2.datum.roots.size() == 2);
  auto gl3 = builtin_datum("GL", 3);
  CHECK(gl3.rank() == 3);
  CHECK(gl3.datum.roots.size() == 6);
  auto sp2 = builtin_datum("Sp", 2);
  CHECK(sp2.rank() == 2);
  CHECK(sp2.datum.roots.size() == 8);
  auto so5 = builtin_datum("SO", 5);
  CHECK(so5.rank() == 2);
  CHECK(so5.datum.roots.size() == 8);
  auto so4 = builtin_datum("SO", 4);
  CHECK(so4.rank() == 2);
  CHECK(so4.datum.roots.size() == 4);
  auto so3 = builtin_datum("SO", 3);
  CHECK(so3.rank() == 1);
  CHECK(so3.datum.roots.size() == 2);
  auto sl3 = builtin_datum("SL", 3);
  CHECK(sl3.rank() == 2);
  CHECK(sl3.datum.roots.size() == 6);
  auto pgl3 = builtin_datum("PGL", 3);
  CHECK(pgl3.rank() == 2);
  CHECK(pgl3.datum.roots.size() == 6);
  auto gl1 = builtin_datum("GL", 1);
  CHECK(gl1.rank() == 1);
  CHECK(gl1.datum.roots.empty());

  CHECK_THROWS_WITH_AS(builtin_datum("E8", 8), doctest::Contains("UnsupportedFamily"), error);
  CHECK_THROWS_WITH_AS(builtin_datum("GL", 9), doctest::Contains("RankCapExceeded"), error);
  CHECK_THROWS_AS(builtin_datum("GL", 0), error);
}

TEST_CASE("dualize swaps roots and coroots and is an involution") {
  auto gl2 = builtin_datum("GL", 2);
  auto dual = dualize(gl2);
  CHECK(dual.datum.roots == gl2.datum.coroots);
  CHECK(dual.datum.coroots == gl2.datum.roots);
  CHECK(datum_equal(dualize(builtin_datum("SL", 2)), builtin_datum("PGL", 2)));
  CHECK(datum_equal(dualize(builtin_datum("PGL", 2)), builtin_datum("SL", 2)));
  for (auto& [fam, n] : std::vector<std::pair<std::string, int>>{
           {"GL", 3}, {"SL", 3}, {"PGL", 2}, {"Sp", 2}, {"SO", 5}}) {
    auto d = builtin_datum(fam, n);
    CHECK(datum_equal_up_to_order(dualize(dualize(d)), d));
  }
}

TEST_CASE("reflections permute the root set") {
  for (auto& [fam, n] : std::vector<std::pair<std::string, int>>{
           {"GL", 3}, {"SL", 3}, {"Sp", 2}, {"SO", 5}, {"SO", 4}}) {
    auto d = builtin_datum(fam, n);
    for (std::size_t i = 0; i < d.datum.roots.size(); ++i) {
      IntMat s = reflection_matrix(d, i);
      std::vector<IntVec> imgs;
      for (auto& r : d.datum.roots) imgs.push_back(mat_apply(s, r));
      auto sorted = d.datum.roots;
      std::sort(sorted.begin(), sorted.end());
      std::sort(imgs.begin(), imgs.end());
      CHECK(imgs == sorted);
    }
  }
}

TEST_CASE("Weyl group enumeration matches the classified product formula") {
  CHECK(weyl_group(builtin_datum("GL", 2)).order() == 2);
  CHECK(weyl_group(builtin_datum("GL", 3)).order() == 6);
  CHECK(weyl_group(builtin_datum("Sp", 2)).order() == 8);
  for (int n = 2; n <= 6; ++n) {
    unsigned long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(weyl_group(builtin_datum("GL", n)).order() == fact);
  }
  for (auto& [fam, n] : std::vector<std::pair<std::string, int>>{
           {"GL", 4}, {"GL", 6}, {"SL", 4}, {"PGL", 3}, {"Sp", 2}, {"Sp", 3}, {"Sp", 4},
           {"SO", 5}, {"SO", 7}, {"SO", 8}, {"SO", 9}, {"SO", 4}, {"SO", 3}}) {
    auto d = builtin_datum(fam, n);
    auto oracle = classified_weyl_order(d);
    REQUIRE(oracle.has_value());
    CAPTURE(fam);
    CAPTURE(n);
    CHECK(weyl_group(d).order() == *oracle);
  }
  // closure and root permutation
  auto d = builtin_datum("Sp", 2);
  auto w = weyl_group(d);
  for (auto& m : w.elements) {
    std::vector<IntVec> imgs;
    for (auto& r : d.datum.roots) imgs.push_back(mat_apply(m, r));
    auto sorted = d.datum.roots;
    std::sort(sorted.begin(), sorted.end());
    std::sort(imgs.begin(), imgs.end());
    CHECK(imgs == sorted);
  }
  for (auto& a : w.generators)
    for (auto& b : w.generators) CHECK(w.contains(mat_mul(a, b)));
  // cap
  CHECK_THROWS_WITH_AS(weyl_group(builtin_datum("GL", 8)),
                       doctest::Contains("WeylCapExceeded"), error);
  CHECK(weyl_group(builtin_datum("GL", 7)).order() == 5040);
}

TEST_CASE("half sum of positive roots") {
  CHECK(half_sum_positive_roots(builtin_datum("GL", 2)) == rv({Rat(1, 2), Rat(-1, 2)}));
  CHECK(half_sum_positive_roots(builtin_datum("GL", 3)) == rv({Rat(1), Rat(0), Rat(-1)}));
  for (auto& [fam, n] : std::vector<std::pair<std::string, int>>{
           {"GL", 2}, {"GL", 4}, {"SL", 3}, {"PGL", 3}, {"Sp", 2}, {"Sp", 3},
           {"SO", 5}, {"SO", 7}, {"SO", 8}}) {
    auto d = builtin_datum(fam, n);
    auto delta = half_sum_positive_roots(d);
    for (std::size_t k = 0; k < d.n_simple(); ++k) {
      CAPTURE(fam);
      CHECK(dot(delta, d.simple_coroot(k)) == 1);
    }
  }
}

TEST_CASE("twisting element: GL_n, SL_2 present; PGL_2 absent") {
  for (int n = 2; n <= 5; ++n) {
    auto t = find_twisting_element(builtin_datum("GL", n));
    REQUIRE(t.has_value());
    IntVec expect;
    for (int i = 0; i < n; ++i) expect.emplace_back(-i);
    CHECK(*t == expect);
  }
  auto sl2 = find_twisting_element(builtin_datum("SL", 2));
  REQUIRE(sl2.has_value());
  CHECK(*sl2 == iv({1}));

  auto pgl2_datum = builtin_datum("PGL", 2);
  CHECK_FALSE(find_twisting_element(pgl2_datum).has_value());
  // brute force confirmation over a box
  for (long long k = -10; k <= 10; ++k) {
    bool all_one = true;
    for (std::size_t s = 0; s < pgl2_datum.n_simple(); ++s)
      if (dot(iv({k}), pgl2_datum.simple_coroot(s)) != 1) all_one = false;
    CHECK_FALSE(all_one);
  }
  // PGL_3 does have one: rho lies in the root lattice of A_2
  auto pgl3 = find_twisting_element(builtin_datum("PGL", 3));
  REQUIRE(pgl3.has_value());
  for (std::size_t s = 0; s < 2; ++s)
    CHECK(dot(*pgl3, builtin_datum("PGL", 3).simple_coroot(s)) == 1);
  // torus: anything works, canonical answer is zero
  auto t1 = find_twisting_element(builtin_datum("GL", 1));
  REQUIRE(t1.has_value());
  CHECK(*t1 == iv({0}));
  // defining system holds exactly whenever present
  for (auto& [fam, n] : std::vector<std::pair<std::string, int>>{
           {"GL", 4}, {"SL", 3}, {"Sp", 2}, {"SO", 5}}) {
    auto d = builtin_datum(fam, n);
    auto tw = find_twisting_element(d);
    if (!tw) continue;
    for (std::size_t s = 0; s < d.n_simple(); ++s) CHECK(dot(*tw, d.simple_coroot(s)) == 1);
  }
}

TEST_CASE("dominance and dominant representatives") {
  auto gl2 = builtin_datum("GL", 2);
  CHECK(is_dominant(rv({Rat(3), Rat(0)}), gl2));
  CHECK_FALSE(is_dominant(rv({Rat(0), Rat(3)}), gl2));
  auto gl3 = builtin_datum("GL", 3);
  CHECK(is_dominant(rv({Rat(1), Rat(1), Rat(1)}), gl3));

  auto rep = dominant_representative(rv({Rat(0), Rat(3)}), gl2);
  CHECK(rep.weight == rv({Rat(3), Rat(0)}));
  CHECK(rep.word == std::vector<std::size_t>{0});
  rep = dominant_representative(rv({Rat(3), Rat(0)}), gl2);
  CHECK(rep.weight == rv({Rat(3), Rat(0)}));
  CHECK(rep.word.empty());
  rep = dominant_representative(rv({Rat(-1), Rat(0), Rat(1)}), gl3);
  CHECK(rep.weight == rv({Rat(1), Rat(0), Rat(-1)}));

  // the recorded word really maps the input to the representative
  RatVec start = rv({Rat(-5), Rat(2), Rat(7)});
  auto r2 = dominant_representative(start, gl3);
  CHECK(apply_word(gl3, r2.word, start) == r2.weight);
  CHECK(is_dominant(r2.weight, gl3));

  // idempotent and W-invariant
  auto w = weyl_group(gl3);
  for (auto& m : w.elements) {
    RatVec moved = mat_apply(m, start);
    CHECK(dominant_representative(moved, gl3).weight == r2.weight);
  }
  auto sp2 = builtin_datum("Sp", 2);
  auto wsp = weyl_group(sp2);
  RatVec v0 = rv({Rat(-3), Rat(5)});
  auto canon = dominant_representative(v0, sp2).weight;
  for (auto& m : wsp.elements)
    CHECK(dominant_representative(mat_apply(m, v0), sp2).weight == canon);
}

TEST_CASE("pinned automorphisms") {
  auto gl3 = builtin_datum("GL", 3);
  IntMat flip = {iv({0, 0, -1}), iv({0, -1, 0}), iv({-1, 0, 0})};
  auto g = make_pinned_automorphism(gl3, flip);
  CHECK(g.order == 2);
  CHECK(g.simple_perm == std::vector<std::size_t>{1, 0});
  CHECK(apply_automorphism(g, rv({Rat(3), Rat(1), Rat(0)})) == rv({Rat(0), Rat(-1), Rat(-3)}));
  // identity
  auto id = make_pinned_automorphism(gl3, identity_mat(3));
  CHECK(id.order == 1);
  CHECK(apply_automorphism(id, rv({Rat(5), Rat(6), Rat(7)})) == rv({Rat(5), Rat(6), Rat(7)}));
  // gamma fixes the half sum
  CHECK(apply_automorphism(g, half_sum_positive_roots(gl3)) == half_sum_positive_roots(gl3));
  // rejects a unimodular matrix that does not permute Delta
  auto gl2 = builtin_datum("GL", 2);
  CHECK_THROWS_WITH_AS(make_pinned_automorphism(gl2, {iv({1, 1}), iv({0, 1})}),
                       doctest::Contains("NotPinned"), error);
  // rejects a non-unimodular matrix
  CHECK_THROWS_WITH_AS(make_pinned_automorphism(gl2, {iv({2, 0}), iv({0, 2})}),
                       doctest::Contains("NotPinned"), error);
  // scalar vectors transform through the same matrix
  auto k = CoefficientRing::number_field({Rat(-2), Rat(0), Rat(1)});
  ScalarVec sv = {Scalar::generator(k), Scalar(k, Rat(1)), Scalar(k, Rat(0))};
  auto moved = apply_automorphism(g, sv);
  CHECK(moved[0] == Scalar(k, Rat(0)));
  CHECK(moved[1] == -Scalar(k, Rat(1)));
  CHECK(moved[2] == -Scalar::generator(k));
}
