#include "foliaquant/cli.hpp"

#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "foliaquant/runner.hpp"

namespace fq {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify leafwise quantization data on a foliated chart"};
  std::string command_name;
  std::string path;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> max_degree;
  std::optional<unsigned> samples;
  bool serial = false;
  bool timings = false;

  app.add_option("command", command_name,
                 "check-structure | check-prequant | check-polarization | verify-dirac | check-leaves | all")
      ->required();
  app.add_option("model", path, "model file (YAML)")->required();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "random seed for samples and zero tests");
  app.add_option("--max-degree", max_degree, "monomial degree for basis checks")->check(CLI::Range(0u, 8u));
  app.add_option("--samples", samples, "evaluation points per zero test")->check(CLI::Range(1u, 1000u));
  app.add_flag("--serial", serial, "run checks on one thread");
  app.add_flag("--timings", timings, "include wall time per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "foliaquant: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  auto command = parse_command(command_name);
  if (!command) {
    err << "foliaquant: unknown command '" << command_name << "'\n";
    return kExitUsage;
  }

  ModelSpec spec;
  try {
    spec = load_model_file(path);
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
    return kExitParse;
  }
  if (seed) spec.options.seed = *seed;
  if (max_degree) spec.options.max_degree = *max_degree;
  if (samples) spec.options.samples = *samples;

  const Report report = run_command(*command, spec, serial ? Execution::serial : Execution::parallel);
  out << (format == "json" ? to_json(report, timings) : to_text(report, timings));
  return report.exit_code();
}

}  // namespace fq
