#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infchar/invariants.hpp"
#include "infchar/parameters.hpp"

namespace infchar {

// The infinitesimal character attached to one embedding sigma: the W-orbit of
// the mode-shifted Sen class of any tau above sigma.  Direct C data is
// canonicalized to its dominant representative before the +delta shift (the
// shift is not W-invariant, so it is only well defined on the canonical
// representative of the class).
// errors: split_failure, TauIndependenceViolated (bug sentinel: unreachable
// for specs passing validation).
InfinitesimalCharacter zeta_sigma(const GaloisParameterSpec& spec,
                                  const std::string& sigma);

// All sigma characters, in embedding order.
std::vector<InfinitesimalCharacter> zeta_global(
    const GaloisParameterSpec& spec);

struct TauIndependence {
  bool ok = true;
  std::string sigma;  // witness fields when !ok
  std::string tau_base, tau_other;
};

// Recomputes the character from every tau above sigma, undoing the recorded
// gamma-move of each label, and checks that all orbits agree.
TauIndependence verify_tau_independence(const GaloisParameterSpec& spec,
                                        const std::string& sigma);

struct HTCocharacter {
  RatVec representative;  // dominant representative of the class orbit
  std::size_t orbit_size = 0;
};

// The Hodge-Tate cocharacter orbit at tau: the plain W-orbit of the raw
// integral class, before any delta-shift, in every mode.
// errors: NotHodgeTate (with diagnostic), split_failure.
HTCocharacter ht_cocharacter(const GaloisParameterSpec& spec,
                             const std::string& tau);

struct RegularityResult {
  bool hodge_tate = false;
  std::string ht_diagnostic;
  // The two flags need a cyclotomic reference point (twisting or C mode) and
  // an exact rational class; absent otherwise.
  std::optional<bool> dominant_exists;   // matched weight is dominant
  std::optional<bool> strictly_regular;  // matched weight has trivial stabilizer
};

// Per-tau regularity report.  Never throws for data reasons; failures are
// encoded in the result.
std::map<std::string, RegularityResult> is_regular(
    const GaloisParameterSpec& spec);

// Per-sigma highest weight of the algebraic representation matched by the
// C-side character.  errors: TwistingRequired (bare L mode), NotHodgeTate,
// NotRegular.
std::map<std::string, RatVec> pi_alg(const GaloisParameterSpec& spec);

// Checks that the C-side character of every sigma equals the infinitesimal
// character of the matched highest weight.  errors: as for pi_alg.
bool verify_inf_HT_roundtrip(const GaloisParameterSpec& spec);

// --- full report -------------------------------------------------------------

struct SigmaCharacterReport {
  std::string sigma;
  ScalarVec point;
  std::optional<RatVec> dominant_representative;
  std::optional<RatVec> algebraic_match;
};

struct ZetaReport {
  std::vector<SigmaCharacterReport> sigma_characters;
  TauIndependence tau_independence;
  std::map<std::string, HodgeTateResult> hodge_tate;   // per tau
  std::map<std::string, HTCocharacter> nu;             // per tau passing HT
  std::map<std::string, RegularityResult> regular;     // per tau
  std::optional<std::map<std::string, RatVec>> pi;     // per sigma
  std::optional<bool> roundtrip;
  // Computation failures encountered while assembling the report; the report
  // is partial when nonempty.  first_error drives the exit code.
  std::vector<std::string> failures;
  std::optional<errc> first_error;
};

// Runs the full pipeline, recording computation failures instead of throwing,
// so a partial report survives non-Hodge-Tate data or a non-split
// characteristic polynomial.
ZetaReport compute_report(const GaloisParameterSpec& spec,
                          bool check_roundtrip);

}  // namespace infchar
