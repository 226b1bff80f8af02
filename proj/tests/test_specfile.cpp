#include <fstream>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "infchar/error.hpp"
#include "infchar/specfile.hpp"
#include "json.hpp"

using namespace infchar;

namespace {

std::string slurp_case(const std::string& name) {
  std::ifstream in(std::string(CASES_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::internal_error;
}

}  // namespace

TEST_CASE("spec documents parse into validated parameter specs") {
  auto spec = parse_spec_json(slurp_case("gl2_sym2.json"));
  CHECK(spec.name == "gl2-sym2");
  CHECK(spec.mode == Mode::C);
  CHECK(spec.twisting == RatVec{Rat(1), Rat(0)});
  CHECK(spec.group.rank() == 2);
  CHECK(spec.gamma.is_trivial());
  REQUIRE(spec.embeddings.size() == 1);
  CHECK(spec.embeddings[0].taus == std::vector<std::string>{"t0"});

  auto rep = compute_report(spec, true);
  CHECK(rep.failures.empty());
  CHECK(rep.pi->at("s0") == RatVec{Rat(2), Rat(0)});
  CHECK(rep.roundtrip == true);

  auto flip = parse_spec_json(slurp_case("a2_flip.json"));
  CHECK(flip.gamma.size() == 2);
  CHECK(verify_tau_independence(flip, "s0").ok);

  auto fam = parse_spec_json(slurp_case("family.json"));
  CHECK(fam.ring.is_family());
  CHECK(zeta_sigma(fam, "s0").point.size() == 2);

  auto nil = parse_spec_json(slurp_case("nilpotent.json"));
  auto nilrep = compute_report(nil, false);
  CHECK(nilrep.first_error == errc::not_hodge_tate);
  CHECK(!nilrep.hodge_tate.at("t0").value);
}

TEST_CASE("malformed documents are rejected with a path") {
  // Truncated document: the parse error carries a byte offset.
  CHECK_THROWS_WITH_AS((void)parse_spec_json("{\"group\": {\"family\""),
                       doctest::Contains("byte"), error);
  CHECK(code_of([] { (void)parse_spec_json("{\"group\": {"); }) ==
        errc::parse_error);

  std::string base = R"({
    "group": {"family": "GL", "n": 2},
    "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
    "sen": {"t0": {"eigenvalues": ["3", "0"]}}
  })";
  CHECK_NOTHROW((void)parse_spec_json(base));

  // Unknown keys are rejected, with the JSON path in the message.
  CHECK_THROWS_WITH_AS(
      (void)parse_spec_json(R"({"group": {"family": "GL", "n": 2}, "extra": 1,
        "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
        "sen": {"t0": {"eigenvalues": ["3"]}}})"),
      doctest::Contains("unknown key 'extra'"), error);
  CHECK_THROWS_WITH_AS(
      (void)parse_spec_json(R"({"group": {"family": "GL", "n": 2},
        "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
        "sen": {"t0": {"eigenvalues": ["3", "0"], "junk": true}}})"),
      doctest::Contains("/sen/t0"), error);

  // Exact values must be strings, never JSON numbers.
  CHECK_THROWS_WITH_AS(
      (void)parse_spec_json(R"({"group": {"family": "GL", "n": 2},
        "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
        "sen": {"t0": {"eigenvalues": [3, 0]}}})"),
      doctest::Contains("strings"), error);

  // Missing required keys.
  CHECK_THROWS_WITH_AS(
      (void)parse_spec_json(R"({"group": {"family": "GL", "n": 2},
        "sen": {"t0": {"eigenvalues": ["3", "0"]}}})"),
      doctest::Contains("missing key 'embeddings'"), error);

  // A Sen entry needs exactly one representation.
  CHECK_THROWS_WITH_AS(
      (void)parse_spec_json(R"({"group": {"family": "GL", "n": 2},
        "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
        "sen": {"t0": {"eigenvalues": ["3", "0"], "matrix": [["1"]]}}})"),
      doctest::Contains("exactly one"), error);

  CHECK_THROWS_WITH_AS(
      (void)parse_spec_json(R"({"group": {"family": "GL", "n": 2}, "mode": "Z",
        "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
        "sen": {"t0": {"eigenvalues": ["3", "0"]}}})"),
      doctest::Contains("/mode"), error);

  // Structural failures surface through validation, not parsing.
  CHECK(code_of([&] {
          (void)parse_spec_json(R"({"group": {"family": "GL", "n": 2},
            "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
            "sen": {"t0": {"eigenvalues": ["3", "0", "7"]}}})");
        }) == errc::wrong_dimension);
}

TEST_CASE("coefficient ring documents") {
  std::string nf = R"({
    "group": {"family": "GL", "n": 2},
    "coefficients": {"kind": "number_field", "min_poly": ["-2", "0", "1"], "generator": "r"},
    "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
    "sen": {"t0": {"eigenvalues": ["r", "-r"]}}
  })";
  auto spec = parse_spec_json(nf);
  CHECK(spec.ring.is_number_field());
  CHECK(spec.ring.field_degree() == 2);
  auto chi = zeta_sigma(spec, "s0");
  CHECK(chi.point.size() == 2);

  CHECK_THROWS_WITH_AS(
      (void)parse_spec_json(R"({"group": {"family": "GL", "n": 2},
        "coefficients": {"kind": "galois"},
        "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
        "sen": {"t0": {"eigenvalues": ["3", "0"]}}})"),
      doctest::Contains("/coefficients/kind"), error);
}

TEST_CASE("root-datum documents and serialization") {
  auto gl2 = parse_datum_json(R"({"family": "GL", "n": 2})");
  CHECK(gl2.rank() == 2);

  auto explicit_a1 = parse_datum_json(R"({
    "rank": 2,
    "roots": [["1", "-1"], ["-1", "1"]],
    "coroots": [["1", "-1"], ["-1", "1"]],
    "simple": [0]
  })");
  CHECK(datum_equal(explicit_a1, gl2));

  // Serialized datum re-parses to an equal datum.
  auto dual = dualize(parse_datum_json(R"({"family": "Sp", "n": 2})"));
  CHECK(datum_equal(parse_datum_json(datum_to_json(dual)), dual));

  CHECK(code_of([] {
          (void)parse_datum_json(R"({"rank": 1, "roots": [["2"]],
            "coroots": [["3"]], "simple": [0]})");
        }) == errc::pairing_violation);
  CHECK(code_of([] { (void)parse_datum_json(R"({"family": "E", "n": 8})"); }) ==
        errc::unsupported_family);
}

TEST_CASE("report JSON is canonical") {
  auto spec = parse_spec_json(slurp_case("gl2_sym2.json"));
  std::string text = report_to_json(compute_report(spec, true));

  // Re-parse + re-dump is byte-identical (sorted keys, fixed indent).
  nlohmann::json parsed = nlohmann::json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);

  CHECK(parsed["tau_independence"] == true);
  CHECK(parsed["roundtrip"] == true);
  CHECK(parsed["pi_alg"]["s0"] == nlohmann::json({"2", "0"}));
  CHECK(parsed["sigma_characters"]["s0"]["algebraic_match"] ==
        nlohmann::json({"2", "0"}));
  CHECK(parsed["sigma_characters"]["s0"]["dominant_representative"] ==
        nlohmann::json({"5/2", "-1/2"}));
  CHECK(parsed["nu"]["t0"]["representative"] == nlohmann::json({"3", "0"}));
  CHECK(parsed["nu"]["t0"]["orbit_size"] == 2);
  CHECK(parsed["regular"]["t0"]["strictly_regular"] == true);
  CHECK(parsed["failures"].empty());

  // No floating-point tokens anywhere.
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& v) {
    CHECK(!v.is_number_float());
    if (v.is_object() || v.is_array())
      for (const auto& child : v) walk(child);
  };
  walk(parsed);

  // The text rendering mentions the same verdicts.
  std::string human = report_to_text(compute_report(spec, true));
  CHECK(human.find("tau independence: ok") != std::string::npos);
  CHECK(human.find("pi_alg s0: (2, 0)") != std::string::npos);

  // Partial report for non-Hodge-Tate data still serializes cleanly.
  auto nil = parse_spec_json(slurp_case("nilpotent.json"));
  nlohmann::json partial =
      nlohmann::json::parse(report_to_json(compute_report(nil, false)));
  CHECK(partial["hodge_tate"]["t0"]["value"] == false);
  CHECK(partial["nu"].empty());
  CHECK(partial["pi_alg"].is_null());
  CHECK(!partial["failures"].empty());
}
