#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "covdim/covdim.h"

using nlohmann::json;

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 1;

// Bad input is a usage error; everything else that fails is computational.
int exit_code_for(int status) {
  switch (status) {
    case COVDIM_SYNTAX_ERROR:
    case COVDIM_SEMANTIC_ERROR:
    case COVDIM_FORMAT_ERROR:
    case COVDIM_IO_ERROR:
    case COVDIM_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitComputation;
  }
}

json error_object(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}, {"position", nullptr}}}};
}

int report_error(const json& err, bool as_json, int exit_code) {
  if (as_json) {
    std::cout << err.dump(2) << "\n";
  } else {
    const auto& e = err.at("error");
    std::cerr << "error: " << e.at("code").get<std::string>() << ": " << e.at("message").get<std::string>();
    if (!e.at("position").is_null()) std::cerr << " (at offset " << e.at("position") << ")";
    std::cerr << "\n";
  }
  return exit_code;
}

int library_error(int status, bool as_json) {
  const std::string text = covdim_last_error();
  json err = text.empty() ? error_object("InternalError", "status " + std::to_string(status)) : json::parse(text);
  return report_error(err, as_json, exit_code_for(status));
}

std::string interval(const json& iv) {
  return "[" + std::to_string(iv[0].get<long long>()) + ", " + (iv[1].is_null() ? std::string("?") : std::to_string(iv[1].get<long long>())) + "]";
}

void print_analyze(const json& r) {
  std::cout << "group:    " << r["group"].get<std::string>() << "\n"
            << "order:    " << r["order"] << "\n"
            << "center:   order " << r["center"]["order"] << ", rank " << r["center"]["rank"]
            << (r["center"]["cyclic"].get<bool>() ? ", cyclic" : "") << "\n"
            << "faithful: " << (r["faithful"].is_null() ? "unknown" : r["faithful"].get<bool>() ? "yes" : "no") << "\n"
            << "covdim:   " << interval(r["covdim"]) << "\n"
            << "edim:     " << interval(r["edim"]) << "\n";
  for (const auto& f : r["flags"]) std::cout << "note:     " << f.get<std::string>() << "\n";
  std::cout << "derivation:\n";
  for (const auto& c : r["certificates"]) {
    const auto& k = c["conclusion"];
    std::cout << "  " << k["group"].get<std::string>() << " " << k["fact"].get<std::string>() << " = " << k["value"]
              << "  by " << c["rule"].get<std::string>() << "\n";
    for (const auto& p : c["premises"])
      std::cout << "      " << p["group"].get<std::string>() << " " << p["fact"].get<std::string>() << " = " << p["value"] << "\n";
  }
}

void print_faithful(const json& r) {
  auto yn = [](const json& b) { return b.get<bool>() ? "yes" : "no"; };
  std::cout << "group:           " << r["group"].get<std::string>() << "\n"
            << "gaschutz:        " << yn(r["gaschutz"]) << "\n"
            << "character table: " << yn(r["character_table"]) << "\n"
            << "oracles agree:   " << yn(r["agree"]) << "\n";
  if (!r["socle_abelian"].is_null()) std::cout << "N_G order:       " << r["socle_abelian"]["order"] << "\n";
  if (r["trivial_convention"].get<bool>()) std::cout << "note:            trivial group counted as faithful\n";
}

void print_table(const json& r) {
  std::cout << r["group"].get<std::string>() << ", order " << r["order"] << ", values in Q(z), z = exp(2 pi i/"
            << r["conductor"] << ")\n";
  std::size_t i = 0;
  for (const auto& c : r["classes"])
    std::cout << "  class " << i++ << ": " << c["representative"].get<std::string>() << "  size " << c["size"] << "  order "
              << c["element_order"] << "\n";
  i = 0;
  for (const auto& ch : r["characters"]) {
    std::cout << "  chi_" << i++ << " (deg " << ch["degree"] << "):";
    for (const auto& v : ch["values"]) std::cout << "  " << v.get<std::string>();
    std::cout << "\n";
  }
}

void print_flat(const json& r) {
  for (const auto& [k, v] : r.items()) {
    if (k == "covariant") continue;
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  if (r.contains("covariant")) std::cout << "covariant:\n" << r["covariant"].dump(2) << "\n";
}

void print_catalog(const json& r) {
  for (const auto& e : r["entries"])
    std::cout << (e["pass"].get<bool>() ? "PASS " : "FAIL ") << e["spec"].get<std::string>() << "  covdim "
              << interval(e["covdim"]) << "  edim " << interval(e["edim"]) << "\n";
  std::cout << r["passed"] << " passed, " << r["failed"] << " failed\n";
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariant dimension bounds, faithfulness and covariant tools for finite groups"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string spec, op, path;
  std::vector<std::uint64_t> beta;
  std::uint64_t seed = kDefaultSeed;

  auto* analyze = app.add_subcommand("analyze", "Derive covdim and edim intervals with certificates");
  auto* faithful = app.add_subcommand("faithful", "Run both faithfulness oracles");
  auto* table = app.add_subcommand("table", "Print the character table");
  for (auto* sc : {analyze, faithful, table}) {
    sc->add_option("spec", spec, "Group spec, e.g. \"S3 x S3\" or \"C3 : C4 [inv]\"")->required();
    sc->add_flag("--json", as_json, "Emit JSON");
  }
  auto* covariant = app.add_subcommand("covariant", "Operate on a covariant file");
  covariant->add_option("op", op, "check, degrees, phimax, dim or faithful")
      ->required()
      ->check(CLI::IsMember({"check", "degrees", "phimax", "dim", "faithful"}));
  covariant->add_option("file", path, "Covariant JSON file")->required();
  covariant->add_option("--beta", beta, "Weight vector for phimax")->delimiter(',');
  covariant->add_option("--seed", seed, "Seed for randomized steps")->capture_default_str();
  covariant->add_flag("--json", as_json, "Emit JSON");
  auto* catalog = app.add_subcommand("catalog", "Verify the golden catalog");
  catalog->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    bool json_requested = false;
    for (int i = 1; i < argc; ++i) json_requested = json_requested || std::string(argv[i]) == "--json";
    return report_error(error_object("UsageError", e.what()), json_requested, kExitUsage);
  }

  char* out = nullptr;
  int status = COVDIM_OK;
  void (*printer)(const json&) = print_flat;
  if (*catalog) {
    status = covdim_catalog_json(&out);
    printer = print_catalog;
  } else if (*covariant) {
    std::string text;
    if (!read_file(path, text))
      return report_error(error_object("IoError", "cannot read '" + path + "'"), as_json, kExitUsage);
    status = covdim_covariant_json(op.c_str(), text.c_str(), beta.empty() ? nullptr : beta.data(), beta.size(), seed, &out);
  } else {
    covdim_group* g = nullptr;
    status = covdim_group_parse(spec.c_str(), &g);
    if (status != COVDIM_OK) return library_error(status, as_json);
    if (*analyze) {
      status = covdim_analyze_json(g, &out);
      printer = print_analyze;
    } else if (*faithful) {
      status = covdim_faithful_json(g, &out);
      printer = print_faithful;
    } else {
      status = covdim_table_json(g, &out);
      printer = print_table;
    }
    covdim_group_free(g);
  }
  if (status != COVDIM_OK) return library_error(status, as_json);
  const std::string text(out);
  covdim_string_free(out);
  if (as_json) std::cout << text;
  else printer(json::parse(text));
  return 0;
}
