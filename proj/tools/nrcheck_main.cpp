#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nrcheck/code_io.hpp"
#include "nrcheck/construct.hpp"
#include "nrcheck/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitInputError = 2;

constexpr const char* kBudgetEnv = "NRCHECK_SEARCH_BUDGET";

std::uint64_t default_budget() {
  const char* env = std::getenv(kBudgetEnv);
  if (env == nullptr || *env == '\0') return nrcheck::kDefaultNodeLimit;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string(kBudgetEnv) + " must be a positive integer");
}

nrcheck::Code build_named(const std::string& name) {
  using namespace nrcheck;
  if (name == "golay24") return golay24();
  if (name == "reed_muller") return reed_muller_subcode();
  if (name == "nr") return nordstrom_robinson();
  if (name == "pn") return puncture(nordstrom_robinson(), 1);
  if (name.rfind("pn@", 0) == 0) {
    const std::string digits = name.substr(3);
    if (!digits.empty() && digits.size() <= 2 && digits.find_first_not_of("0123456789") == std::string::npos) {
      const int p = std::stoi(digits);
      if (p >= 1 && p <= 16) return puncture(nordstrom_robinson(), p);
    }
  }
  throw std::invalid_argument("unknown code name '" + name + "' (golay24, reed_muller, nr, pn, pn@1..pn@16)");
}

int cmd_construct(const std::string& name, const std::string& out_path) {
  const nrcheck::Code code = build_named(name);
  nrcheck::write_code_file(out_path, code);
  std::cerr << "wrote " << code.size() << " words of length " << code.length() << " to " << out_path << '\n';
  return kExitOk;
}

int cmd_analyze(const std::string& path) {
  const nrcheck::Code code = nrcheck::read_code_file(path);
  std::cout << nrcheck::analysis_json(code).dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& target_name, const std::string& json_path, std::uint64_t budget,
               const std::string& nr_path) {
  const nrcheck::VerifyTarget target = nrcheck::parse_verify_target(target_name);
  nrcheck::VerificationInputs inputs = nrcheck::VerificationInputs::standard();
  if (!nr_path.empty()) inputs.nr = nrcheck::read_code_file(nr_path);

  const nrcheck::VerificationReport report = nrcheck::run_verification(target, inputs, budget);
  if (!json_path.empty()) {
    const std::string text = nlohmann::json(report).dump(2) + "\n";
    if (json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(json_path);
      if (!out) throw std::runtime_error("cannot write " + json_path);
      out << text;
    }
  }
  (json_path == "-" ? std::cerr : std::cout) << nrcheck::render_summary(report);
  return report.all_passed() ? kExitOk : kExitClaimFailure;
}

int cmd_feasible(int m, const std::string& spec, bool antipodal) {
  const auto tmpl = nrcheck::DistributionTemplate::parse(m, spec, antipodal);
  try {
    std::cout << nrcheck::feasibility_json(nrcheck::feasible_distributions(tmpl)).dump(2) << '\n';
  } catch (const nrcheck::UnboundedSystemError& e) {
    nlohmann::json j{{"m", m}, {"unbounded", true}, {"error", e.what()}};
    std::cout << j.dump(2) << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nordstrom-Robinson code verification workbench"};
  app.require_subcommand(1);

  std::string name;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "write a standard code to a file");
  construct->add_option("name", name, "golay24, reed_muller, nr, pn or pn@p")->required();
  construct->add_option("-o,--output", out_path, "output path")->required();

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "print code invariants as JSON");
  analyze->add_option("path", analyze_path, "code file")->required();

  std::string target;
  std::string json_path;
  std::string nr_path;
  std::uint64_t budget = 0;
  auto* verify = app.add_subcommand("verify", "run the claim manifest");
  verify->add_option("target", target, "nr, pn or all")->required();
  verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  verify->add_option("--budget", budget, "search node limit per backtrack search")->check(CLI::PositiveNumber);
  verify->add_option("--nr", nr_path, "read NR from a code file instead of constructing it");

  int m = 0;
  std::string spec;
  bool antipodal = false;
  auto* feasible = app.add_subcommand("feasible", "solve a distance distribution template");
  feasible->add_option("-m", m, "length")->required();
  feasible->add_option("-t,--template", spec, "comma list of i=value and i=?")->required();
  feasible->add_flag("--antipodal", antipodal, "mirror unlisted slots, a_i = a_{m-i}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*construct) return cmd_construct(name, out_path);
    if (*analyze) return cmd_analyze(analyze_path);
    if (*verify) return cmd_verify(target, json_path, budget > 0 ? budget : default_budget(), nr_path);
    if (*feasible) return cmd_feasible(m, spec, antipodal);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
