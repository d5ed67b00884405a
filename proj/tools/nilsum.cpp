// nilsum: construct modular Lie algebras over GF(p), run structure
// predicates, search for nilpotent-pair decompositions, and drive the
// experiment suites. All reports are JSON with canonical key order;
// exhaustive runs are byte-reproducible, randomized runs replay from the
// recorded seed.

#include "nilsum/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace nilsum;

namespace {

int emit(const json& doc, const std::string& out_path) {
  if (!out_path.empty())
    save_json(out_path, doc);
  else
    std::cout << doc.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for solvability and nilpotent-sum experiments on modular Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand name

  CommandOptions opts;
  std::string out_path;
  std::string format = "json";
  bool serial = false;
  app.add_option("--seed", opts.seed, "seed for all randomized choices");
  app.add_option("--budget-subspaces", opts.budget_subspaces,
                 "largest subspace lattice an exhaustive scan may touch");
  app.add_option("--budget-seconds", opts.budget_seconds,
                 "wall-clock cap for randomized sampling (0 = off)");
  app.add_flag("--timings", opts.timings, "include elapsed_ms in stats (not byte-reproducible)");
  app.add_flag("--serial", serial, "run scan kernels on the serial reference path");
  app.add_option("--out", out_path, "write the JSON report to this file");
  app.add_option("--format", format, "report format (json)")->check(CLI::IsMember({"json"}));

  // check
  auto* check = app.add_subcommand("check", "validate a construction and run predicates");
  std::string check_spec;
  std::vector<std::string> predicates;
  check->add_option("--spec", check_spec, "construction expression")->required();
  check->add_option("--predicates", predicates,
                    "comma-separated: solvable,nilpotent,center,one_dim_ideals,cartan,dim")
      ->delimiter(',');

  // search
  auto* search = app.add_subcommand("search", "nilpotent-pair decomposition search");
  std::string search_spec, search_mode = "exhaustive";
  search->add_option("--spec", search_spec, "construction expression")->required();
  search->add_option("--mode", search_mode, "exhaustive | randomized")
      ->check(CLI::IsMember({"exhaustive", "randomized"}));
  search->add_option("--samples", opts.randomized_budget, "randomized mode: closure samples");

  // suite
  auto* suite = app.add_subcommand("suite", "named experiment suites");
  std::string suite_name;
  uint32_t suite_p = 0, suite_m = 1;
  std::string suite_mode;
  uint64_t suite_samples = 500, suite_count = 100;
  suite->add_option("--name", suite_name, "lemma2_3 | lemma4 | deform | theorem_smoke")
      ->required()
      ->check(CLI::IsMember({"lemma2_3", "lemma4", "deform", "theorem_smoke"}));
  suite->add_option("--p", suite_p, "characteristic (suite-specific default)");
  suite->add_option("--m", suite_m, "number of variables (lemma4)");
  suite->add_option("--mode", suite_mode, "lemma4: exhaustive | sample");
  suite->add_option("--samples", suite_samples, "lemma4 sample mode: sample count");
  suite->add_option("--count", suite_count, "theorem_smoke: number of random algebras");

  // remarks
  auto* remarks = app.add_subcommand("remarks", "the closing-remarks experiment trio");

  // serialize
  auto* ser = app.add_subcommand("serialize", "write or verify algebra files");
  std::string ser_spec, ser_in;
  ser->add_option("--spec", ser_spec, "construction to serialize (needs --out)");
  ser->add_option("--in", ser_in, "algebra file to load and re-validate");

  CLI11_PARSE(app, argc, argv);
  opts.exec = serial ? Exec::serial : Exec::parallel;

  try {
    if (*check) return emit(cmd_check(check_spec, predicates, opts), out_path);
    if (*search) return emit(cmd_search(search_spec, search_mode, opts), out_path);
    if (*suite) {
      json params = json::object();
      if (suite_p) params["p"] = suite_p;
      if (suite_name == "lemma4") {
        params["m"] = suite_m;
        params["mode"] = suite_mode.empty() ? "exhaustive" : suite_mode;
        params["samples"] = suite_samples;
      }
      if (suite_name == "theorem_smoke") params["count"] = suite_count;
      return emit(cmd_suite(suite_name, params, opts), out_path);
    }
    if (*remarks) return emit(cmd_remarks(opts), out_path);
    if (*ser) {
      if (!ser_spec.empty() && !out_path.empty())
        return emit(cmd_serialize_spec(ser_spec, out_path, opts), "");
      if (!ser_in.empty()) return emit(cmd_load_verify(ser_in, opts), out_path);
      std::cerr << "serialize: need --spec with --out, or --in\n";
      return 2;
    }
  } catch (const SpecParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
