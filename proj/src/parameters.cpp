#include "infchar/parameters.hpp"

#include <algorithm>
#include <set>

#include "infchar/error.hpp"
#include "infchar/invariants.hpp"

namespace infchar {

namespace {

bool is_perm(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto x : p) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

ScalarVec promote_all(ScalarVec v, const CoefficientRing& ring) {
  for (auto& x : v) x = x.promoted(ring);
  return v;
}

// (m > t)_i = prod_j t_j^(m_ij); negative exponents go through inverses, so
// unit entries are required.
ScalarVec mult_action(const IntMat& m, const ScalarVec& t) {
  CoefficientRing ring = t.empty() ? CoefficientRing::rationals() : t[0].ring();
  ScalarVec out(m.size(), Scalar(ring, Rat(1)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      long long e = m[i][j].convert_to<long long>();
      if (e != 0) out[i] *= t[j].pow(e);
    }
  return out;
}

struct NormPair {
  ScalarVec t;
  IntMat w;
};

NormPair pair_mul(const NormPair& a, const NormPair& b) {
  ScalarVec moved = mult_action(a.w, b.t);
  ScalarVec t = a.t;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] *= moved[i];
  return {std::move(t), mat_mul(a.w, b.w)};
}

NormPair pair_inv(const NormPair& a) {
  auto winv = mat_inverse_unimodular(a.w);
  require(winv.has_value(), errc::not_in_group,
          "Weyl component is not invertible");
  ScalarVec tinv;
  tinv.reserve(a.t.size());
  for (const auto& x : a.t) tinv.push_back(x.inverse());
  return {mult_action(*winv, tinv), *winv};
}

NormPair gamma_on(const PinnedAutomorphism& g, const NormPair& a) {
  return {mult_action(g.matrix, a.t),
          mat_mul(g.matrix, mat_mul(a.w, g.inverse))};
}

bool pair_eq(const NormPair& a, const NormPair& b) {
  return a.w == b.w && scalar_vec_eq(a.t, b.t);
}

std::string pair_str(const NormPair& a) {
  std::string s = "t=(";
  for (std::size_t i = 0; i < a.t.size(); ++i) {
    if (i) s += ", ";
    s += a.t[i].str();
  }
  s += ")";
  return s;
}

void check_cocycle_shape(const TorusWeylCocycle& c, const WeylGroup& w) {
  std::size_t n = c.gamma.size();
  require(c.t_values.size() == n && c.w_values.size() == n,
          errc::schema_violation,
          "cocycle must assign one value per group element");
  for (std::size_t i = 0; i < n; ++i) {
    require(c.t_values[i].size() == c.group.rank(), errc::wrong_dimension,
            "torus component has wrong rank");
    for (const auto& x : c.t_values[i])
      require(x.is_unit(), errc::not_invertible,
              "torus component entries must be units: " + x.str());
    require(w.contains(c.w_values[i]), errc::not_in_group,
            "Weyl component is not a Weyl group element");
  }
}

}  // namespace

std::size_t GammaGroup::inv(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (table[i][j] == identity) return j;
  fail(errc::group_table_invalid, "element has no inverse in the table");
}

GammaGroup trivial_gamma(const BasedRootDatum& d) {
  GammaGroup g;
  g.elements.push_back(
      make_pinned_automorphism(d, identity_mat(d.rank())));
  g.table = {{0}};
  g.identity = 0;
  return g;
}

GammaGroup make_gamma_group(
    const BasedRootDatum& d, const std::vector<IntMat>& matrices,
    const std::vector<std::vector<std::size_t>>& table) {
  std::size_t n = matrices.size();
  require(n > 0, errc::group_table_invalid, "group must be nonempty");
  require(table.size() == n, errc::group_table_invalid,
          "table must have one row per element");

  GammaGroup g;
  for (const auto& m : matrices)
    g.elements.push_back(make_pinned_automorphism(d, m));

  for (const auto& row : table) {
    require(row.size() == n, errc::group_table_invalid, "ragged group table");
    for (auto x : row)
      require(x < n, errc::group_table_invalid, "table entry out of range");
  }
  // Latin square.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> in_row(n, false), in_col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      require(!in_row[table[i][j]], errc::group_table_invalid,
              "repeated entry in table row");
      in_row[table[i][j]] = true;
      require(!in_col[table[j][i]], errc::group_table_invalid,
              "repeated entry in table column");
      in_col[table[j][i]] = true;
    }
  }
  // Identity element: located through the table (the action need not be
  // faithful), then required to carry the identity matrix.
  std::size_t e = n;
  for (std::size_t i = 0; i < n && e == n; ++i) {
    bool neutral = true;
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] != j || table[j][i] != j) {
        neutral = false;
        break;
      }
    if (neutral) e = i;
  }
  require(e < n, errc::group_table_invalid,
          "table has no identity element");
  require(is_identity(matrices[e]), errc::group_table_invalid,
          "identity element must act by the identity matrix");
  // The table must agree with matrix multiplication; associativity follows.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      require(mat_mul(matrices[i], matrices[j]) == matrices[table[i][j]],
              errc::group_table_invalid,
              "table disagrees with matrix multiplication");
  g.table = table;
  g.identity = e;
  return g;
}

RatVec class_shift(const GaloisParameterSpec& spec) {
  RatVec zero(spec.group.rank(), Rat(0));
  if (spec.mode == Mode::L) return zero;
  RatVec delta = half_sum_positive_roots(spec.group);
  if (spec.twisting) return vec_sub(delta, *spec.twisting);
  return delta;
}

ScalarVec class_at(const GaloisParameterSpec& spec, const std::string& tau) {
  auto it = spec.sen_data.find(tau);
  require(it != spec.sen_data.end(), errc::unknown_label,
          "no Sen data for tau label '" + tau + "'");
  const SenOperator& op = it->second;
  ScalarVec cls = op.is_class()
                      ? op.eigenvalues
                      : semisimple_class_of_matrix(op, spec.group).eigenvalues;
  return promote_all(std::move(cls), spec.ring);
}

GaloisParameterSpec build_parameter_spec(GaloisParameterSpec raw) {
  const std::size_t rank = raw.group.rank();
  if (raw.ring == CoefficientRing()) raw.ring = CoefficientRing::rationals();
  if (raw.gamma.elements.empty()) raw.gamma = trivial_gamma(raw.group);

  require(!raw.embeddings.empty(), errc::schema_violation,
          "at least one embedding sigma is required");
  std::set<std::string> sigma_seen, tau_seen;
  for (const auto& block : raw.embeddings) {
    require(!block.sigma.empty(), errc::schema_violation,
            "sigma labels must be nonempty");
    require(sigma_seen.insert(block.sigma).second, errc::schema_violation,
            "duplicate sigma label '" + block.sigma + "'");
    require(!block.taus.empty(), errc::schema_violation,
            "sigma '" + block.sigma + "' has no tau labels");
    for (const auto& tau : block.taus) {
      require(!tau.empty(), errc::schema_violation,
              "tau labels must be nonempty");
      require(tau_seen.insert(tau).second, errc::schema_violation,
              "duplicate tau label '" + tau + "'");
    }
  }
  for (const auto& [tau, op] : raw.sen_data) {
    require(tau_seen.count(tau), errc::unknown_label,
            "Sen data for unknown tau label '" + tau + "'");
    require(op.size() == rank, errc::wrong_dimension,
            "Sen data at '" + tau + "' has size " +
                std::to_string(op.size()) + ", expected rank " +
                std::to_string(rank));
  }
  for (const auto& tau : tau_seen)
    require(raw.sen_data.count(tau), errc::unknown_label,
            "no Sen data for tau label '" + tau + "'");

  // Embedding actions: left actions of Gamma, simply transitive on each
  // tau-fiber.
  const std::size_t ng = raw.gamma.size();
  for (const auto& block : raw.embeddings) {
    require(block.action.size() == ng, errc::schema_violation,
            "sigma '" + block.sigma + "': one permutation per group element");
    const std::size_t nt = block.taus.size();
    for (const auto& p : block.action)
      require(is_perm(p, nt), errc::schema_violation,
              "sigma '" + block.sigma + "': action entries must be "
              "permutations of the tau labels");
    for (std::size_t k = 0; k < nt; ++k)
      require(block.action[raw.gamma.identity][k] == k,
              errc::group_table_invalid,
              "sigma '" + block.sigma + "': identity must act trivially");
    for (std::size_t i = 0; i < ng; ++i)
      for (std::size_t j = 0; j < ng; ++j)
        for (std::size_t k = 0; k < nt; ++k)
          require(block.action[raw.gamma.mul(i, j)][k] ==
                      block.action[i][block.action[j][k]],
                  errc::group_table_invalid,
                  "sigma '" + block.sigma + "': tau action is not a left "
                  "group action");
    require(nt == ng, errc::schema_violation,
            "sigma '" + block.sigma + "': the action must be simply "
            "transitive (" + std::to_string(ng) + " group elements, " +
            std::to_string(nt) + " tau labels)");
    for (std::size_t k = 0; k < nt; ++k) {
      std::vector<bool> hit(nt, false);
      for (std::size_t i = 0; i < ng; ++i) hit[block.action[i][k]] = true;
      require(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
              errc::schema_violation,
              "sigma '" + block.sigma + "': the action must be simply "
              "transitive on the tau labels");
    }
  }

  if (raw.mode == Mode::C)
    require(raw.d_weight == Rat(1), errc::missing_cyclotomic_constraint,
            "C-parameters require d_weight = 1, got " + show_rat(raw.d_weight));

  if (raw.twisting) {
    const RatVec& tw = *raw.twisting;
    require(tw.size() == rank, errc::invalid_twisting,
            "twisting element has wrong length");
    for (const auto& x : tw)
      require(rat_is_integer(x), errc::invalid_twisting,
              "twisting element must be integral");
    for (std::size_t i = 0; i < raw.group.n_simple(); ++i) {
      Rat pairing(0);
      const IntVec& coroot = raw.group.simple_coroot(i);
      for (std::size_t j = 0; j < rank; ++j) pairing += tw[j] * Rat(coroot[j]);
      require(pairing == Rat(1), errc::invalid_twisting,
              "twisting element must pair to 1 with every simple coroot");
    }
    for (std::size_t g = 0; g < ng; ++g)
      require(apply_automorphism(raw.gamma.elements[g], tw) == tw,
              errc::invalid_twisting,
              "twisting element must be fixed by the gamma action");
  }

  // Gamma-compatibility of the Sen classes along each tau-orbit.  The raw
  // classes are compared up to W: the mode shifts are either zero or
  // W-invariant, and the direct-C shift enters only after the class is
  // replaced by its dominant representative, so they never affect orbit
  // equality.
  if (ng > 1) {
    WeylGroup w = weyl_group(raw.group);
    for (const auto& block : raw.embeddings) {
      for (std::size_t g = 0; g < ng; ++g) {
        if (g == raw.gamma.identity) continue;
        for (std::size_t k = 0; k < block.taus.size(); ++k) {
          const std::string& tau = block.taus[k];
          const std::string& tau_moved = block.taus[block.action[g][k]];
          ScalarVec lhs =
              apply_automorphism(raw.gamma.elements[g], class_at(raw, tau));
          ScalarVec rhs = class_at(raw, tau_moved);
          require(orbit_contains(w, lhs, rhs),
                  errc::gamma_incompatible_sen_data,
                  "sigma '" + block.sigma + "', tau '" + tau +
                      "', gamma index " + std::to_string(g) +
                      ": moved class does not match the recorded class at '" +
                      tau_moved + "'");
        }
      }
    }
  }
  return raw;
}

GaloisParameterSpec twist_to_C(const GaloisParameterSpec& spec,
                               const RatVec& twisting) {
  require(spec.mode == Mode::L, errc::schema_violation,
          "only L-parameters can be twisted to C-parameters");
  require(twisting.size() == spec.group.rank(), errc::invalid_twisting,
          "twisting element has wrong length");
  for (const auto& x : twisting)
    require(rat_is_integer(x), errc::invalid_twisting,
            "twisting element must be integral");
  for (std::size_t i = 0; i < spec.group.n_simple(); ++i) {
    Rat pairing(0);
    const IntVec& coroot = spec.group.simple_coroot(i);
    for (std::size_t j = 0; j < twisting.size(); ++j)
      pairing += twisting[j] * Rat(coroot[j]);
    require(pairing == Rat(1), errc::invalid_twisting,
            "twisting element must pair to 1 with every simple coroot");
  }
  for (std::size_t g = 0; g < spec.gamma.size(); ++g)
    require(apply_automorphism(spec.gamma.elements[g], twisting) == twisting,
            errc::twisting_not_gamma_invariant,
            "twisting element is not fixed by gamma index " +
                std::to_string(g));
  GaloisParameterSpec out = spec;
  out.mode = Mode::C;
  out.d_weight = Rat(1);
  out.twisting = twisting;
  return build_parameter_spec(std::move(out));
}

CocycleCheck validate_cocycle(const TorusWeylCocycle& c) {
  WeylGroup w = weyl_group(c.group);
  check_cocycle_shape(c, w);
  const std::size_t n = c.gamma.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      NormPair lhs{c.t_values[c.gamma.mul(i, j)],
                   c.w_values[c.gamma.mul(i, j)]};
      NormPair moved = gamma_on(c.gamma.elements[i],
                                {c.t_values[j], c.w_values[j]});
      NormPair rhs = pair_mul({c.t_values[i], c.w_values[i]}, moved);
      if (!pair_eq(lhs, rhs)) {
        CocycleCheck bad;
        bad.ok = false;
        bad.first = i;
        bad.second = j;
        bad.detail = "c(ij) = " + pair_str(lhs) + " but c(i).(i.c(j)) = " +
                     pair_str(rhs);
        return bad;
      }
    }
  }
  return {};
}

bool cohomologous(const TorusWeylCocycle& c1, const TorusWeylCocycle& c2,
                  const ScalarVec& t_n, const IntMat& w_n) {
  WeylGroup w = weyl_group(c1.group);
  check_cocycle_shape(c1, w);
  check_cocycle_shape(c2, w);
  require(c1.gamma.size() == c2.gamma.size() &&
              c1.gamma.table == c2.gamma.table,
          errc::schema_violation, "cocycles must share the group");
  NormPair n{t_n, w_n};
  NormPair ninv = pair_inv(n);
  for (std::size_t g = 0; g < c1.gamma.size(); ++g) {
    NormPair want = pair_mul(
        pair_mul(n, {c1.t_values[g], c1.w_values[g]}),
        gamma_on(c1.gamma.elements[g], ninv));
    if (!pair_eq({c2.t_values[g], c2.w_values[g]}, want)) return false;
  }
  return true;
}

TorusWeylCocycle coboundary(const BasedRootDatum& d, const GammaGroup& gamma,
                            const ScalarVec& t_n, const IntMat& w_n) {
  TorusWeylCocycle c;
  c.group = d;
  c.gamma = gamma;
  NormPair n{t_n, w_n};
  NormPair ninv = pair_inv(n);
  for (std::size_t g = 0; g < gamma.size(); ++g) {
    NormPair val = pair_mul(n, gamma_on(gamma.elements[g], ninv));
    c.t_values.push_back(val.t);
    c.w_values.push_back(val.w);
  }
  return c;
}

}  // namespace infchar
