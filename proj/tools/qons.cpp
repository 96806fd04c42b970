#include <CLI11.hpp>

#include <iostream>

#include "qons/errors.hpp"
#include "suites.hpp"

using namespace qons;
using namespace qons::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for q-Onsager algebra realizations"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::string config_path;
  unsigned jobs = 1;
  std::optional<std::uint64_t> fuel;
  std::optional<int> degree;
  std::optional<std::string> out;
  bool reproducible = false;
  std::vector<std::string> suite_names(std::begin(kSuites), std::end(kSuites));
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names));
  verify->add_option("--config", config_path, "Config file (key = value lines)");
  verify->add_option("--jobs", jobs, "Identities checked concurrently")->check(CLI::Range(1u, 256u));
  verify->add_option("--fuel", fuel, "Rewrite fuel")->check(CLI::PositiveNumber);
  verify->add_option("--degree", degree, "Degree bound")->check(CLI::Range(0, 30));
  verify->add_option("--out", out, "Output directory (default qons-out)");
  verify->add_flag("--reproducible", reproducible, "Omit timestamps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    SuiteConfig c = config_path.empty() ? SuiteConfig{} : load_config(config_path);
    if (c.suite && *c.suite != suite) {
      throw ConfigError("config selects suite '" + *c.suite + "' but the command line asks for '" + suite + "'");
    }
    c.suite = suite;
    if (fuel) c.fuel = *fuel;
    if (degree) c.degree = *degree;
    if (out) c.out = *out;
    const SuiteRun run = run_suite(c, {jobs, reproducible});
    const auto written = write_outputs(run, c, c.out.value_or("qons-out"), reproducible);
    for (const auto& cert : run.certificates) {
      std::cout << to_string(cert.verdict) << "  " << cert.identity;
      if (auto it = cert.bindings.find("module"); it != cert.bindings.end()) std::cout << "  [" << it->second << "]";
      std::cout << "\n";
    }
    std::cout << suite << ": " << to_string(run.verdict) << " (" << written.size() << " files in "
              << c.out.value_or("qons-out") << ")\n";
    return exit_code(run.verdict);
  } catch (const ResourceBudgetExceeded& e) {
    std::cerr << "qons: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "qons: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qons: internal error: " << e.what() << "\n";
    return kExitResource;
  }
}
