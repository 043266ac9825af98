// Command-line front end: config-driven experiment runner for the
// kinematic-wave solver.  Exit codes: 0 success, 2 invalid configuration or
// arguments, 3 solver or I/O failure.

#include <cstdio>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "kinwave/config.hpp"
#include "kinwave/harness.hpp"

namespace {

using Command = std::function<void(const kinwave::ExperimentConfig&)>;

struct SubcommandSpec {
  const char* name;
  const char* help;
  Command command;
  std::string config_path;
  std::string out_dir;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume experiments for the kinematic-wave traffic "
               "model with a discontinuous piecewise-linear flux"};
  app.require_subcommand(1);

  SubcommandSpec specs[] = {
      {"run", "Time-stepping run: snapshot CSVs plus a manifest",
       kinwave::cmd_run, {}, {}},
      {"convergence", "Grid-refinement study with fitted error rates",
       kinwave::cmd_convergence, {}, {}},
      {"flux-compare",
       "Same initial data under the discontinuous and continuous flux",
       kinwave::cmd_flux_compare, {}, {}},
      {"mollifier-report",
       "Smoothing-kernel tables: kernel, flux derivatives, inflection sweep",
       kinwave::cmd_mollifier_report, {}, {}},
  };
  for (SubcommandSpec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("config", spec.config_path, "Experiment config file")
        ->required();
    sub->add_option("--out", spec.out_dir,
                    "Output directory (overrides output.dir)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const SubcommandSpec& spec : specs) {
    if (!app.got_subcommand(spec.name)) continue;
    try {
      kinwave::ExperimentConfig config = kinwave::load_config(spec.config_path);
      if (!spec.out_dir.empty()) config.output_dir = spec.out_dir;
      spec.command(config);
      return 0;
    } catch (const std::invalid_argument& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    } catch (const std::domain_error& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "failure: %s\n", e.what());
      return 3;
    }
  }
  return 2;  // unreachable: a subcommand is required
}
