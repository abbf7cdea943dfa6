#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stanley/experiment.hpp"
#include "stanley/io.hpp"
#include "stanley/squarefree.hpp"

using namespace stanley;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kInputError = 2, kRefused = 3 };

void print_ideal(const MonomialIdeal& ideal, bool as_json) {
  std::cout << (as_json ? format_ideal_json(ideal) + "\n" : format_ideal_text(ideal));
}

std::string prime_text(const PrimeIdeal& p) {
  std::string out = "(";
  for (std::size_t i : p.support.indices()) out += (out.size() > 1 ? ", x" : "x") + std::to_string(i + 1);
  return out + ")";
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact monomial ideal arithmetic, symbolic powers and Stanley depth"};
  app.require_subcommand(1);

  std::string input;
  bool as_json = false;
  std::size_t k = 1;

  auto* ideal_cmd = app.add_subcommand("ideal", "Parse an ideal file and print its minimal generators");
  auto* symbolic_cmd = app.add_subcommand("symbolic", "Symbolic power of a squarefree ideal");
  auto* power_cmd = app.add_subcommand("power", "Ordinary power");
  auto* colon_cmd = app.add_subcommand("colon", "Colon ideal (I : v)");
  auto* radical_cmd = app.add_subcommand("radical", "Radical");
  auto* primes_cmd = app.add_subcommand("primes", "Minimal primes of a squarefree ideal");
  for (auto* cmd : {ideal_cmd, symbolic_cmd, power_cmd, colon_cmd, radical_cmd, primes_cmd}) {
    cmd->add_option("file", input, "Ideal file (text or JSON)")->required()->check(CLI::ExistingFile);
    cmd->add_flag("--json", as_json, "Print JSON instead of text");
  }
  symbolic_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::PositiveNumber);
  power_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::PositiveNumber);
  std::string v_text;
  colon_cmd->add_option("--v", v_text, "Monomial such as x1*x2^2")->required();

  auto* sdepth_cmd = app.add_subcommand("sdepth", "Exact Stanley depth of I (or S/I) with a witness");
  bool quotient = false;
  SolverLimits limits;
  std::string witness_out;
  sdepth_cmd->add_option("file", input, "Ideal file (text or JSON)")->required()->check(CLI::ExistingFile);
  sdepth_cmd->add_flag("--quotient", quotient, "Use S/I instead of I");
  sdepth_cmd->add_option("--max-poset-points", limits.max_poset_points, "Refuse larger posets");
  sdepth_cmd->add_option("--time-budget-secs", limits.time_budget_secs, "Refuse after this long per decision")
      ->check(CLI::PositiveNumber);
  sdepth_cmd->add_option("--witness", witness_out, "Also write the witness decomposition here");

  auto* cover_cmd = app.add_subcommand("cover-ideal", "Cover ideal of a graph");
  cover_cmd->add_option("graph", input, "Graph file (edge list or JSON)")->required()->check(CLI::ExistingFile);
  cover_cmd->add_flag("--json", as_json, "Print JSON instead of text");

  auto* transfer_cmd = app.add_subcommand("transfer", "Transfer a decomposition along a monomial map");
  std::string instance_file, decomposition_file;
  transfer_cmd->add_option("--instance", instance_file, "Instance JSON")->required()->check(CLI::ExistingFile);
  transfer_cmd->add_option("--decomposition", decomposition_file, "Source decomposition JSON")
      ->required()
      ->check(CLI::ExistingFile);

  auto* experiment_cmd = app.add_subcommand("experiment", "Run an experiment spec and print the CSV report");
  std::string csv_out, report_out;
  experiment_cmd->add_option("spec", input, "Experiment spec JSON")->required()->check(CLI::ExistingFile);
  experiment_cmd->add_option("--csv", csv_out, "Write the CSV here instead of stdout");
  experiment_cmd->add_option("--report", report_out, "Write the JSON metadata report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*ideal_cmd) {
      print_ideal(parse_ideal(read_file(input)), as_json);
    } else if (*symbolic_cmd) {
      print_ideal(symbolic_power(parse_ideal(read_file(input)), k), as_json);
    } else if (*power_cmd) {
      print_ideal(product_power(parse_ideal(read_file(input)), k), as_json);
    } else if (*colon_cmd) {
      const auto ideal = parse_ideal(read_file(input));
      print_ideal(colon(ideal, parse_monomial(Ring(ideal.ring_size()), v_text)), as_json);
    } else if (*radical_cmd) {
      print_ideal(radical(parse_ideal(read_file(input))), as_json);
    } else if (*primes_cmd) {
      const auto decomposition = minimal_primes(parse_ideal(read_file(input)));
      if (as_json) {
        std::cout << decomposition_to_json(decomposition).dump() << "\n";
      } else {
        for (const auto& p : decomposition.primes) std::cout << prime_text(p) << "\n";
      }
    } else if (*sdepth_cmd) {
      const auto ideal = parse_ideal(read_file(input));
      const auto pair = quotient ? QuotientPair::of_ring_quotient(ideal) : QuotientPair::of_ideal(ideal);
      try {
        const auto result = sdepth_exact(pair, limits);
        json out = {{"sdepth", result.value},
                    {"mode", quotient ? "quotient" : "ideal"},
                    {"decomposition", spaces_to_json(result.witness.spaces)}};
        std::cout << out.dump() << "\n";
        if (!witness_out.empty()) write_file(witness_out, format_decomposition_json(result.witness) + "\n");
      } catch (const SolverRefused& e) {
        std::cerr << "REFUSED: " << e.what() << "\n";
        return kRefused;
      }
    } else if (*cover_cmd) {
      print_ideal(cover_ideal(parse_graph(read_file(input))), as_json);
    } else if (*transfer_cmd) {
      const auto instance = instance_from_json(parse_json_file(instance_file));
      const StanleyDecomposition source{instance.source,
                                        spaces_from_json(parse_json_file(decomposition_file), instance.source.ring_size())};
      if (auto check = verify_decomposition(source); !check) {
        std::cerr << "invalid source decomposition: " << check.reason << "\n";
        return kInputError;
      }
      const auto demo = run_transfer_demo(instance, source);
      json out = {{"decomposition", spaces_to_json(demo.result.output.spaces)}, {"report", demo.report}};
      std::cout << out.dump() << "\n";
      if (!demo.result.verified || demo.result.output_sdepth < demo.result.input_sdepth) return kFail;
    } else if (*experiment_cmd) {
      const std::filesystem::path spec_path(input);
      const auto spec = experiment_spec_from_json(parse_json_file(input), spec_path.parent_path());
      const auto report = run_experiment(spec);
      if (csv_out.empty()) {
        std::cout << report.csv();
      } else {
        write_file(csv_out, report.csv());
      }
      if (!report_out.empty()) write_file(report_out, report.metadata.dump(2) + "\n");
      std::cerr << report.count("PASS") << " pass, " << report.count("FAIL") << " fail, " << report.count("SKIPPED")
                << " skipped, " << report.count("REFUSED") << " refused\n";
      if (report.has_failure()) return kFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidDecomposition& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
