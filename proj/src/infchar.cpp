#include "infchar/infchar.hpp"

#include <algorithm>
#include <set>

#include "infchar/sen.hpp"

namespace infchar {

namespace {

const EmbeddingBlock& block_of(const GaloisParameterSpec& spec,
                               const std::string& sigma) {
  for (const EmbeddingBlock& b : spec.embeddings) {
    if (b.sigma == sigma) return b;
  }
  fail(errc::unknown_label, "no embedding block named '" + sigma + "'");
}

// A cyclotomic reference point is what turns a character into a candidate
// highest weight: either the spec is already in C mode or it carries a
// twisting element.
bool has_c_reference(const GaloisParameterSpec& spec) {
  return spec.mode == Mode::C || spec.twisting.has_value();
}

bool is_direct_c(const GaloisParameterSpec& spec) {
  return spec.mode == Mode::C && !spec.twisting.has_value();
}

std::optional<RatVec> rational_vec(const ScalarVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const Scalar& s : v) {
    if (!s.is_rational()) return std::nullopt;
    out.push_back(s.as_rational());
  }
  return out;
}

std::size_t linear_orbit_size(const WeylGroup& w, const RatVec& v) {
  std::set<RatVec> seen;
  for (const IntMat& elt : w.elements) seen.insert(mat_apply(elt, v));
  return seen.size();
}

// Evaluation point of the character at a tau label.  The L-mode point is the
// raw class; with a twisting element the W-invariant vector delta - twisting
// is added; direct C data is first replaced by its dominant representative,
// because the +delta shift is not W-invariant and is only well defined on
// the canonical representative of the class.  Family-valued direct C data
// keeps its stored representative (no chamber order is defined there).
ScalarVec character_point(const GaloisParameterSpec& spec,
                          const std::string& tau) {
  ScalarVec cls = class_at(spec, tau);
  if (is_direct_c(spec)) {
    if (std::optional<RatVec> m = rational_vec(cls)) {
      cls = to_scalars(dominant_representative(*m, spec.group).weight, spec.ring);
    }
  }
  return scalar_vec_add(cls, to_scalars(class_shift(spec), spec.ring));
}

struct MatchedWeight {
  RatVec lambda;
  bool dominant = false;
  bool strict = false;
};

// Matched weight of an exact integral class: the dominant representative of
// the class, minus the twisting element when one is present.  Equivalently
// domrep(class) + c_shift - delta, where c_shift is delta - twisting or
// plain delta; the flags test dominance and trivial stabilizer of the
// result.
MatchedWeight matched_weight(const GaloisParameterSpec& spec, const RatVec& cls) {
  RatVec delta = half_sum_positive_roots(spec.group);
  RatVec e = vec_add(dominant_representative(cls, spec.group).weight,
                     spec.twisting ? vec_sub(delta, *spec.twisting) : delta);
  MatchedWeight out;
  out.dominant = true;
  out.strict = true;
  for (std::size_t k = 0; k < spec.group.n_simple(); ++k) {
    Rat p = dot(e, spec.group.simple_coroot(k));
    if (p < 1) out.dominant = false;
    if (p < 2) out.strict = false;
  }
  out.lambda = vec_sub(e, delta);
  return out;
}

RatVec integral_class_at(const GaloisParameterSpec& spec, const std::string& tau) {
  std::optional<RatVec> m = rational_vec(class_at(spec, tau));
  require(m.has_value(), errc::internal_error,
          "class at '" + tau + "' not rational after a Hodge-Tate check");
  return *m;
}

}  // namespace

TauIndependence verify_tau_independence(const GaloisParameterSpec& spec,
                                        const std::string& sigma) {
  const EmbeddingBlock& b = block_of(spec, sigma);
  WeylGroup w = weyl_group(spec.group);
  // Orbit equality of the shifted points reduces to orbit equality of the
  // raw classes in every mode, so the comparison needs no shift at all.
  ScalarVec base = class_at(spec, b.taus[0]);
  TauIndependence out;
  out.ok = true;
  for (std::size_t k = 1; k < b.taus.size(); ++k) {
    std::size_t g = spec.gamma.size();
    for (std::size_t gi = 0; gi < spec.gamma.size(); ++gi) {
      if (b.action[gi][0] == k) {
        g = gi;
        break;
      }
    }
    require(g < spec.gamma.size(), errc::schema_violation,
            "no group element moves '" + b.taus[0] + "' to '" + b.taus[k] + "'");
    const PinnedAutomorphism& undo = spec.gamma.elements[spec.gamma.inv(g)];
    ScalarVec moved = apply_automorphism(undo, class_at(spec, b.taus[k]));
    if (!orbit_contains(w, base, moved)) {
      out.ok = false;
      out.sigma = sigma;
      out.tau_base = b.taus[0];
      out.tau_other = b.taus[k];
      return out;
    }
  }
  return out;
}

InfinitesimalCharacter zeta_sigma(const GaloisParameterSpec& spec,
                                  const std::string& sigma) {
  const EmbeddingBlock& b = block_of(spec, sigma);
  TauIndependence t = verify_tau_independence(spec, sigma);
  require(t.ok, errc::tau_independence_violated,
          "classes at '" + t.tau_base + "' and '" + t.tau_other +
              "' above '" + sigma + "' give different characters");
  return make_character(character_point(spec, b.taus[0]));
}

std::vector<InfinitesimalCharacter> zeta_global(const GaloisParameterSpec& spec) {
  std::vector<InfinitesimalCharacter> out;
  out.reserve(spec.embeddings.size());
  for (const EmbeddingBlock& b : spec.embeddings) out.push_back(zeta_sigma(spec, b.sigma));
  return out;
}

HTCocharacter ht_cocharacter(const GaloisParameterSpec& spec,
                             const std::string& tau) {
  auto it = spec.sen_data.find(tau);
  require(it != spec.sen_data.end(), errc::unknown_label,
          "no Sen operator recorded for '" + tau + "'");
  HodgeTateResult ht = is_hodge_tate(it->second);
  require(ht.value, errc::not_hodge_tate,
          "sen operator at '" + tau + "' is not Hodge-Tate: " + ht.diagnostic);
  RatVec m = integral_class_at(spec, tau);
  HTCocharacter out;
  out.representative = dominant_representative(m, spec.group).weight;
  out.orbit_size = linear_orbit_size(weyl_group(spec.group), m);
  return out;
}

std::map<std::string, RegularityResult> is_regular(
    const GaloisParameterSpec& spec) {
  std::map<std::string, RegularityResult> out;
  bool cref = has_c_reference(spec);
  for (const EmbeddingBlock& b : spec.embeddings) {
    for (const std::string& tau : b.taus) {
      RegularityResult r;
      HodgeTateResult ht = is_hodge_tate(spec.sen_data.at(tau));
      r.hodge_tate = ht.value;
      r.ht_diagnostic = ht.diagnostic;
      if (ht.value && cref) {
        MatchedWeight mw = matched_weight(spec, integral_class_at(spec, tau));
        r.dominant_exists = mw.dominant;
        r.strictly_regular = mw.strict;
      }
      out[tau] = std::move(r);
    }
  }
  return out;
}

std::map<std::string, RatVec> pi_alg(const GaloisParameterSpec& spec) {
  require(has_c_reference(spec), errc::twisting_required,
          "matching an algebraic representation needs a cyclotomic reference: "
          "twist the parameter or supply C-mode data");
  std::map<std::string, RatVec> out;
  for (const EmbeddingBlock& b : spec.embeddings) {
    const std::string& tau0 = b.taus[0];
    HodgeTateResult ht = is_hodge_tate(spec.sen_data.at(tau0));
    require(ht.value, errc::not_hodge_tate,
            "sen operator at '" + tau0 + "' is not Hodge-Tate: " + ht.diagnostic);
    MatchedWeight mw = matched_weight(spec, integral_class_at(spec, tau0));
    require(mw.dominant, errc::not_regular,
            "character at '" + b.sigma + "' is not regular: no dominant matched weight");
    out[b.sigma] = std::move(mw.lambda);
  }
  return out;
}

bool verify_inf_HT_roundtrip(const GaloisParameterSpec& spec) {
  std::map<std::string, RatVec> lambdas = pi_alg(spec);
  WeylGroup w = weyl_group(spec.group);
  for (const EmbeddingBlock& b : spec.embeddings) {
    InfinitesimalCharacter zc = make_character(character_point(spec, b.taus[0]));
    InfinitesimalCharacter from_lambda =
        inf_char_of_highest_weight(lambdas.at(b.sigma), spec.group);
    if (!characters_equal(zc, from_lambda, w)) return false;
  }
  return true;
}

ZetaReport compute_report(const GaloisParameterSpec& spec, bool check_roundtrip) {
  ZetaReport rep;
  auto record = [&rep](const error& e) {
    std::string line = e.what();
    if (std::find(rep.failures.begin(), rep.failures.end(), line) ==
        rep.failures.end()) {
      rep.failures.push_back(std::move(line));
    }
    if (!rep.first_error) rep.first_error = e.code();
  };

  for (const EmbeddingBlock& b : spec.embeddings) {
    if (!rep.tau_independence.ok) break;
    try {
      TauIndependence t = verify_tau_independence(spec, b.sigma);
      if (!t.ok) {
        rep.tau_independence = t;
        record(error(errc::tau_independence_violated,
                     "classes at '" + t.tau_base + "' and '" + t.tau_other +
                         "' above '" + b.sigma + "' give different characters"));
      }
    } catch (const error& e) {
      record(e);
      break;
    }
  }

  for (const EmbeddingBlock& b : spec.embeddings) {
    SigmaCharacterReport sc;
    sc.sigma = b.sigma;
    try {
      sc.point = character_point(spec, b.taus[0]);
      if (!spec.ring.is_family()) {
        if (std::optional<RatVec> p = rational_vec(sc.point)) {
          sc.dominant_representative = dominant_representative(*p, spec.group).weight;
        }
        sc.algebraic_match = match_algebraic(make_character(sc.point), spec.group);
      }
      rep.sigma_characters.push_back(std::move(sc));
    } catch (const error& e) {
      record(e);
    }
  }

  // Family rings offer only orbit data and specialization identities: no
  // chamber order means no Hodge-Tate weights, cocharacters or matching, and
  // their absence is not a failure.
  if (spec.ring.is_family()) return rep;

  for (const EmbeddingBlock& b : spec.embeddings) {
    for (const std::string& tau : b.taus) {
      HodgeTateResult ht = is_hodge_tate(spec.sen_data.at(tau));
      bool value = ht.value;
      rep.hodge_tate[tau] = std::move(ht);
      if (!value) {
        record(error(errc::not_hodge_tate,
                     "sen operator at '" + tau + "' is not Hodge-Tate: " +
                         rep.hodge_tate[tau].diagnostic));
        continue;
      }
      try {
        rep.nu[tau] = ht_cocharacter(spec, tau);
      } catch (const error& e) {
        record(e);
      }
    }
  }

  rep.regular = is_regular(spec);

  if (has_c_reference(spec)) {
    bool all_regular = true;
    for (const auto& [tau, r] : rep.regular) {
      if (!r.hodge_tate || !r.dominant_exists.value_or(false)) all_regular = false;
    }
    if (all_regular) {
      try {
        rep.pi = pi_alg(spec);
        if (check_roundtrip) rep.roundtrip = verify_inf_HT_roundtrip(spec);
      } catch (const error& e) {
        record(e);
      }
    }
  }

  return rep;
}

}  // namespace infchar
