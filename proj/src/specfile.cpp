#include "infchar/specfile.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace infchar {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  fail(errc::parse_error, path.empty() ? msg : path + ": " + msg);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) bad(path, "unknown key '" + it.key() + "'");
  }
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, "missing key '" + std::string(key) + "'");
  return *it;
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "expected a string");
  return v.get<std::string>();
}

// Structural integers (ranks, indices, tables) are plain JSON integers; all
// exact values are strings.
long long get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<long long>();
}

std::size_t get_index(const json& v, const std::string& path) {
  long long n = get_int(v, path);
  if (n < 0) bad(path, "expected a nonnegative index");
  return static_cast<std::size_t>(n);
}

Rat get_rat(const json& v, const std::string& path) {
  if (!v.is_string())
    bad(path, "exact values are strings like \"3\" or \"5/2\"");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const error& e) {
    bad(path, e.what());
  }
}

RatVec get_rat_vec(const json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array");
  RatVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_rat(v[i], path + "/" + std::to_string(i)));
  return out;
}

IntVec get_int_vec(const json& v, const std::string& path) {
  RatVec r = get_rat_vec(v, path);
  IntVec out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!rat_is_integer(r[i]))
      bad(path + "/" + std::to_string(i), "expected an integer");
    out.push_back(numerator(r[i]));
  }
  return out;
}

IntMat get_int_mat(const json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of rows");
  IntMat out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_int_vec(v[i], path + "/" + std::to_string(i)));
  return out;
}

Scalar get_scalar(const json& v, const CoefficientRing& ring,
                  const std::string& path) {
  if (!v.is_string())
    bad(path, "exact values are strings like \"3\", \"5/2\" or \"x+1\"");
  try {
    return Scalar::parse(ring, v.get<std::string>());
  } catch (const error& e) {
    bad(path, e.what());
  }
}

BasedRootDatum datum_from_json(const json& g, const std::string& path) {
  if (!g.is_object()) bad(path, "expected an object");
  if (g.contains("family")) {
    check_keys(g, path, {"family", "n"});
    return builtin_datum(get_string(field(g, path, "family"), path + "/family"),
                         get_int(field(g, path, "n"), path + "/n"));
  }
  check_keys(g, path, {"rank", "roots", "coroots", "simple"});
  std::size_t rank = get_index(field(g, path, "rank"), path + "/rank");
  const json& jroots = field(g, path, "roots");
  if (!jroots.is_array()) bad(path + "/roots", "expected an array");
  std::vector<IntVec> roots;
  for (std::size_t i = 0; i < jroots.size(); ++i)
    roots.push_back(get_int_vec(jroots[i], path + "/roots/" + std::to_string(i)));
  const json& jcoroots = field(g, path, "coroots");
  if (!jcoroots.is_array()) bad(path + "/coroots", "expected an array");
  std::vector<IntVec> coroots;
  for (std::size_t i = 0; i < jcoroots.size(); ++i)
    coroots.push_back(
        get_int_vec(jcoroots[i], path + "/coroots/" + std::to_string(i)));
  const json& jsimple = field(g, path, "simple");
  if (!jsimple.is_array()) bad(path + "/simple", "expected an array");
  std::vector<std::size_t> simple;
  for (std::size_t i = 0; i < jsimple.size(); ++i)
    simple.push_back(get_index(jsimple[i], path + "/simple/" + std::to_string(i)));
  return validate_based_root_datum(rank, std::move(roots), std::move(coroots),
                                   std::move(simple));
}

CoefficientRing ring_from_json(const json& c, const std::string& path) {
  if (!c.is_object()) bad(path, "expected an object");
  std::string kind = get_string(field(c, path, "kind"), path + "/kind");
  if (kind == "rationals") {
    check_keys(c, path, {"kind"});
    return CoefficientRing::rationals();
  }
  if (kind == "number_field") {
    check_keys(c, path, {"kind", "min_poly", "generator"});
    RatPoly p = get_rat_vec(field(c, path, "min_poly"), path + "/min_poly");
    std::string gen = c.contains("generator")
                          ? get_string(c["generator"], path + "/generator")
                          : "a";
    return CoefficientRing::number_field(std::move(p), std::move(gen));
  }
  if (kind == "family") {
    check_keys(c, path, {"kind", "base", "variables"});
    CoefficientRing base = c.contains("base")
                               ? ring_from_json(c["base"], path + "/base")
                               : CoefficientRing::rationals();
    const json& jvars = field(c, path, "variables");
    if (!jvars.is_array()) bad(path + "/variables", "expected an array");
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < jvars.size(); ++i)
      vars.push_back(get_string(jvars[i], path + "/variables/" + std::to_string(i)));
    return CoefficientRing::family(base, std::move(vars));
  }
  bad(path + "/kind",
      "expected \"rationals\", \"number_field\" or \"family\"");
}

GammaGroup gamma_from_json(const json& g, const BasedRootDatum& d,
                           const std::string& path) {
  if (!g.is_object()) bad(path, "expected an object");
  check_keys(g, path, {"matrices", "table"});
  const json& jmats = field(g, path, "matrices");
  if (!jmats.is_array()) bad(path + "/matrices", "expected an array");
  std::vector<IntMat> mats;
  for (std::size_t i = 0; i < jmats.size(); ++i)
    mats.push_back(get_int_mat(jmats[i], path + "/matrices/" + std::to_string(i)));
  const json& jtable = field(g, path, "table");
  if (!jtable.is_array()) bad(path + "/table", "expected an array");
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t i = 0; i < jtable.size(); ++i) {
    const json& row = jtable[i];
    std::string rpath = path + "/table/" + std::to_string(i);
    if (!row.is_array()) bad(rpath, "expected an array");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < row.size(); ++j)
      out.push_back(get_index(row[j], rpath + "/" + std::to_string(j)));
    table.push_back(std::move(out));
  }
  return make_gamma_group(d, std::move(mats), std::move(table));
}

SenOperator sen_from_json(const json& s, const CoefficientRing& ring,
                          const std::string& path) {
  if (!s.is_object()) bad(path, "expected an object");
  check_keys(s, path, {"eigenvalues", "matrix"});
  bool has_cls = s.contains("eigenvalues");
  bool has_mat = s.contains("matrix");
  if (has_cls == has_mat)
    bad(path, "exactly one of \"eigenvalues\" or \"matrix\" is required");
  if (has_cls) {
    const json& jv = s["eigenvalues"];
    if (!jv.is_array()) bad(path + "/eigenvalues", "expected an array");
    ScalarVec v;
    for (std::size_t i = 0; i < jv.size(); ++i)
      v.push_back(get_scalar(jv[i], ring, path + "/eigenvalues/" + std::to_string(i)));
    return sen_class(std::move(v));
  }
  const json& jm = s["matrix"];
  if (!jm.is_array()) bad(path + "/matrix", "expected an array of rows");
  ScalarMat m;
  for (std::size_t i = 0; i < jm.size(); ++i) {
    const json& row = jm[i];
    std::string rpath = path + "/matrix/" + std::to_string(i);
    if (!row.is_array()) bad(rpath, "expected an array");
    ScalarVec out;
    for (std::size_t j = 0; j < row.size(); ++j)
      out.push_back(get_scalar(row[j], ring, rpath + "/" + std::to_string(j)));
    m.push_back(std::move(out));
  }
  return sen_matrix(std::move(m));
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error,
         "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json rat_vec_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(show_rat(x));
  return out;
}

json scalar_vec_json(const ScalarVec& v) {
  json out = json::array();
  for (const Scalar& x : v) out.push_back(x.str());
  return out;
}

json opt_rat_vec_json(const std::optional<RatVec>& v) {
  return v ? rat_vec_json(*v) : json(nullptr);
}

json opt_bool_json(const std::optional<bool>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string show_vec(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += show_rat(v[i]);
  }
  return out + ")";
}

std::string show_svec(const ScalarVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace

GaloisParameterSpec parse_spec_json(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) bad("", "expected a JSON object");
  check_keys(doc, "",
             {"group", "coefficients", "gamma", "embeddings", "sen", "mode",
              "d_weight", "twisting_element", "name", "description"});

  GaloisParameterSpec raw;
  raw.group = datum_from_json(field(doc, "", "group"), "/group");
  raw.ring = doc.contains("coefficients")
                 ? ring_from_json(doc["coefficients"], "/coefficients")
                 : CoefficientRing::rationals();
  raw.gamma = doc.contains("gamma")
                  ? gamma_from_json(doc["gamma"], raw.group, "/gamma")
                  : trivial_gamma(raw.group);

  const json& jemb = field(doc, "", "embeddings");
  if (!jemb.is_array() || jemb.empty())
    bad("/embeddings", "expected a nonempty array");
  for (std::size_t i = 0; i < jemb.size(); ++i) {
    const json& b = jemb[i];
    std::string bpath = "/embeddings/" + std::to_string(i);
    if (!b.is_object()) bad(bpath, "expected an object");
    check_keys(b, bpath, {"sigma", "taus", "action"});
    EmbeddingBlock block;
    block.sigma = get_string(field(b, bpath, "sigma"), bpath + "/sigma");
    const json& jtaus = field(b, bpath, "taus");
    if (!jtaus.is_array()) bad(bpath + "/taus", "expected an array");
    for (std::size_t k = 0; k < jtaus.size(); ++k)
      block.taus.push_back(
          get_string(jtaus[k], bpath + "/taus/" + std::to_string(k)));
    const json& jact = field(b, bpath, "action");
    if (!jact.is_array()) bad(bpath + "/action", "expected an array");
    for (std::size_t g = 0; g < jact.size(); ++g) {
      const json& row = jact[g];
      std::string rpath = bpath + "/action/" + std::to_string(g);
      if (!row.is_array()) bad(rpath, "expected an array");
      std::vector<std::size_t> out;
      for (std::size_t k = 0; k < row.size(); ++k)
        out.push_back(get_index(row[k], rpath + "/" + std::to_string(k)));
      block.action.push_back(std::move(out));
    }
    raw.embeddings.push_back(std::move(block));
  }

  const json& jsen = field(doc, "", "sen");
  if (!jsen.is_object()) bad("/sen", "expected an object keyed by tau label");
  for (auto it = jsen.begin(); it != jsen.end(); ++it)
    raw.sen_data.emplace(it.key(),
                         sen_from_json(it.value(), raw.ring, "/sen/" + it.key()));

  if (doc.contains("mode")) {
    std::string m = get_string(doc["mode"], "/mode");
    if (m == "L")
      raw.mode = Mode::L;
    else if (m == "C")
      raw.mode = Mode::C;
    else
      bad("/mode", "expected \"L\" or \"C\"");
  }
  if (doc.contains("d_weight"))
    raw.d_weight = get_rat(doc["d_weight"], "/d_weight");
  if (doc.contains("twisting_element"))
    raw.twisting = get_rat_vec(doc["twisting_element"], "/twisting_element");
  if (doc.contains("name")) raw.name = get_string(doc["name"], "/name");
  if (doc.contains("description"))
    raw.description = get_string(doc["description"], "/description");

  return build_parameter_spec(std::move(raw));
}

BasedRootDatum parse_datum_json(const std::string& text) {
  return datum_from_json(parse_document(text), "");
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

GaloisParameterSpec load_spec_file(const std::string& path) {
  return parse_spec_json(slurp(path));
}

BasedRootDatum load_datum_file(const std::string& path) {
  return parse_datum_json(slurp(path));
}

std::string report_to_json(const ZetaReport& rep) {
  json j;
  j["failures"] = rep.failures;

  json ht = json::object();
  for (const auto& [tau, r] : rep.hodge_tate)
    ht[tau] = json{{"diagnostic", r.diagnostic}, {"value", r.value}};
  j["hodge_tate"] = ht;

  json nu = json::object();
  for (const auto& [tau, n] : rep.nu)
    nu[tau] = json{{"orbit_size", n.orbit_size},
                   {"representative", rat_vec_json(n.representative)}};
  j["nu"] = nu;

  if (rep.pi) {
    json pi = json::object();
    for (const auto& [sigma, lam] : *rep.pi) pi[sigma] = rat_vec_json(lam);
    j["pi_alg"] = pi;
  } else {
    j["pi_alg"] = nullptr;
  }

  json reg = json::object();
  for (const auto& [tau, r] : rep.regular)
    reg[tau] = json{{"dominant_exists", opt_bool_json(r.dominant_exists)},
                    {"hodge_tate", r.hodge_tate},
                    {"strictly_regular", opt_bool_json(r.strictly_regular)}};
  j["regular"] = reg;

  j["roundtrip"] = opt_bool_json(rep.roundtrip);

  json sig = json::object();
  for (const SigmaCharacterReport& sc : rep.sigma_characters)
    sig[sc.sigma] =
        json{{"algebraic_match", opt_rat_vec_json(sc.algebraic_match)},
             {"dominant_representative",
              opt_rat_vec_json(sc.dominant_representative)},
             {"point", scalar_vec_json(sc.point)}};
  j["sigma_characters"] = sig;

  j["tau_independence"] = rep.tau_independence.ok;
  return j.dump(2) + "\n";
}

std::string report_to_text(const ZetaReport& rep) {
  std::ostringstream out;
  for (const SigmaCharacterReport& sc : rep.sigma_characters) {
    out << "sigma " << sc.sigma << ":\n";
    out << "  point: " << show_svec(sc.point) << "\n";
    if (sc.dominant_representative)
      out << "  dominant representative: " << show_vec(*sc.dominant_representative)
          << "\n";
    out << "  algebraic match: "
        << (sc.algebraic_match ? show_vec(*sc.algebraic_match) : "absent") << "\n";
  }
  out << "tau independence: " << (rep.tau_independence.ok ? "ok" : "VIOLATED")
      << "\n";
  if (!rep.tau_independence.ok)
    out << "  witness: sigma " << rep.tau_independence.sigma << ", "
        << rep.tau_independence.tau_base << " vs "
        << rep.tau_independence.tau_other << "\n";
  for (const auto& [tau, r] : rep.hodge_tate) {
    out << "hodge-tate " << tau << ": " << (r.value ? "yes" : "no");
    if (!r.diagnostic.empty()) out << " (" << r.diagnostic << ")";
    out << "\n";
  }
  for (const auto& [tau, n] : rep.nu)
    out << "nu " << tau << ": " << show_vec(n.representative) << ", orbit size "
        << n.orbit_size << "\n";
  for (const auto& [tau, r] : rep.regular) {
    out << "regular " << tau << ":";
    if (r.dominant_exists)
      out << " dominant " << (*r.dominant_exists ? "yes" : "no");
    if (r.strictly_regular)
      out << ", strictly regular " << (*r.strictly_regular ? "yes" : "no");
    if (!r.dominant_exists && !r.strictly_regular) out << " not applicable";
    out << "\n";
  }
  if (rep.pi)
    for (const auto& [sigma, lam] : *rep.pi)
      out << "pi_alg " << sigma << ": " << show_vec(lam) << "\n";
  else
    out << "pi_alg: absent\n";
  if (rep.roundtrip)
    out << "roundtrip: " << (*rep.roundtrip ? "ok" : "FAILED") << "\n";
  for (const std::string& f : rep.failures) out << "error: " << f << "\n";
  return out.str();
}

std::string datum_to_json(const BasedRootDatum& d) {
  json j;
  json roots = json::array();
  for (const IntVec& r : d.datum.roots) {
    json row = json::array();
    for (const Int& x : r) row.push_back(x.str());
    roots.push_back(row);
  }
  json coroots = json::array();
  for (const IntVec& r : d.datum.coroots) {
    json row = json::array();
    for (const Int& x : r) row.push_back(x.str());
    coroots.push_back(row);
  }
  j["coroots"] = coroots;
  j["rank"] = d.datum.rank;
  j["roots"] = roots;
  j["simple"] = d.simple;
  return j.dump(2) + "\n";
}

std::string datum_to_text(const BasedRootDatum& d) {
  std::ostringstream out;
  out << "rank " << d.datum.rank << ", " << d.datum.roots.size() << " roots, "
      << d.n_simple() << " simple\n";
  for (std::size_t i = 0; i < d.datum.roots.size(); ++i) {
    out << "  root " << i << ": (";
    for (std::size_t k = 0; k < d.datum.rank; ++k) {
      if (k) out << ", ";
      out << d.datum.roots[i][k].str();
    }
    out << ")  coroot: (";
    for (std::size_t k = 0; k < d.datum.rank; ++k) {
      if (k) out << ", ";
      out << d.datum.coroots[i][k].str();
    }
    out << ")";
    for (std::size_t s : d.simple)
      if (s == i) out << "  [simple]";
    out << "\n";
  }
  return out.str();
}

}  // namespace infchar
