#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "infchar/specfile.hpp"

using namespace infchar;

namespace {

int exit_code_for(const error& e) {
  return is_validation_error(e.code()) ? 2 : 3;
}

int run_compute(const std::string& path, const std::string& format,
                bool check_roundtrip) {
  GaloisParameterSpec spec;
  try {
    spec = load_spec_file(path);
  } catch (const error& e) {
    std::cerr << "FAIL " << e.what() << "\n";
    return exit_code_for(e);
  }
  ZetaReport rep = compute_report(spec, check_roundtrip);
  std::cout << (format == "json" ? report_to_json(rep) : report_to_text(rep));
  if (rep.first_error)
    return is_validation_error(*rep.first_error) ? 2 : 3;
  return 0;
}

int run_validate(const std::string& path) {
  try {
    (void)load_spec_file(path);
  } catch (const error& e) {
    std::cout << "FAIL " << e.what() << "\n";
    return exit_code_for(e);
  }
  std::cout << "PASS\n";
  return 0;
}

int run_rootdata(const std::string& sub, const std::string& path,
                 const std::string& format) {
  try {
    BasedRootDatum d = load_datum_file(path);
    nlohmann::json j;
    if (sub == "dualize") {
      BasedRootDatum dual = dualize(d);
      std::cout << (format == "json" ? datum_to_json(dual) : datum_to_text(dual));
      return 0;
    }
    if (sub == "weyl") {
      std::size_t n = weyl_group(d).order();
      if (format == "json") {
        j["order"] = n;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "weyl group order: " << n << "\n";
      }
      return 0;
    }
    if (sub == "delta") {
      RatVec delta = half_sum_positive_roots(d);
      if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Rat& x : delta) arr.push_back(show_rat(x));
        j["delta"] = arr;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "delta: (";
        for (std::size_t i = 0; i < delta.size(); ++i)
          std::cout << (i ? ", " : "") << show_rat(delta[i]);
        std::cout << ")\n";
      }
      return 0;
    }
    // sub == "twisting"
    std::optional<IntVec> tw = find_twisting_element(d);
    if (format == "json") {
      if (tw) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Int& x : *tw) arr.push_back(x.str());
        j["twisting"] = arr;
      } else {
        j["twisting"] = nullptr;
      }
      std::cout << j.dump(2) << "\n";
    } else if (tw) {
      std::cout << "twisting: (";
      for (std::size_t i = 0; i < tw->size(); ++i)
        std::cout << (i ? ", " : "") << (*tw)[i].str();
      std::cout << ")\n";
    } else {
      std::cout << "twisting: none\n";
    }
    return 0;
  } catch (const error& e) {
    std::cerr << "FAIL " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact infinitesimal characters of p-adic parameter data"};
  app.require_subcommand(1);

  std::string compute_path, compute_format = "text";
  bool check_roundtrip = false;
  CLI::App* compute =
      app.add_subcommand("compute", "run the full character pipeline on a spec");
  compute->add_option("file", compute_path, "spec JSON file")->required();
  compute->add_option("--format", compute_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  compute->add_flag("--check-roundtrip", check_roundtrip,
                    "also verify the matched weight reproduces the character");

  std::string validate_path;
  CLI::App* validate =
      app.add_subcommand("validate", "check every structural invariant of a spec");
  validate->add_option("file", validate_path, "spec JSON file")->required();

  std::string rootdata_sub, rootdata_path, rootdata_format = "text";
  CLI::App* rootdata =
      app.add_subcommand("rootdata", "root-datum utilities on a datum file");
  rootdata->add_option("operation", rootdata_sub, "dualize|weyl|delta|twisting")
      ->required()
      ->check(CLI::IsMember({"dualize", "weyl", "delta", "twisting"}));
  rootdata->add_option("file", rootdata_path, "root-datum JSON file")->required();
  rootdata->add_option("--format", rootdata_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(compute))
      return run_compute(compute_path, compute_format, check_roundtrip);
    if (app.got_subcommand(validate)) return run_validate(validate_path);
    return run_rootdata(rootdata_sub, rootdata_path, rootdata_format);
  } catch (const error& e) {
    std::cerr << "FAIL " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "FAIL InternalError: " << e.what() << "\n";
    return 3;
  }
}
