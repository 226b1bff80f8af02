#pragma once

#include <string>

#include "infchar/infchar.hpp"

namespace infchar {

// Parses and validates a JSON spec document.  Top-level keys: group,
// coefficients, gamma, embeddings, sen, mode, d_weight, twisting_element,
// name, description.  Every exact value is a string token ("3", "5/2",
// "x+1"); unknown keys are rejected; error messages carry the JSON path.
// errors: ParseError (malformed document) plus everything
// build_parameter_spec raises.
GaloisParameterSpec parse_spec_json(const std::string& text);
GaloisParameterSpec load_spec_file(const std::string& path);

// Root-datum documents: {"family": ..., "n": ...} or explicit
// {"rank", "roots", "coroots", "simple"}.
BasedRootDatum parse_datum_json(const std::string& text);
BasedRootDatum load_datum_file(const std::string& path);

// Canonical JSON: keys sorted, two-space indent, exact values as strings,
// trailing newline.  Parsing the output and dumping it again is
// byte-identical.
std::string report_to_json(const ZetaReport& rep);
std::string datum_to_json(const BasedRootDatum& d);

// Human-readable renderings of the same data.
std::string report_to_text(const ZetaReport& rep);
std::string datum_to_text(const BasedRootDatum& d);

}  // namespace infchar
