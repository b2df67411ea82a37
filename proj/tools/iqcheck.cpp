#include <iostream>

#include <CLI11.hpp>

#include "iq/report.hpp"

// Command-line front end. All real work lives in the library; this file only
// maps flags onto a RunConfig.
int main(int argc, char** argv) {
  CLI::App app{
      "Decides whether finite interactions are irreducibly quantified, with "
      "certificates, a configuration-space oracle, and classification tools."};
  app.require_subcommand(1);

  iq::RunConfig config;

  auto add_common = [&](CLI::App* cmd, bool with_inputs = true) {
    if (with_inputs)
      cmd->add_option("inputs", config.inputs, "input file(s)")->required()->expected(-1);
    cmd->add_option("--base-point", config.base_point, "base point for normalized bases");
    cmd->add_option("--max-sites", config.max_sites, "largest site count searched");
    cmd->add_option("--degree-cap", config.degree_cap,
                    "cap on brute-force enumeration and configuration-space sizes");
    cmd->add_option("--work-limit", config.work_limit,
                    "S-pair reductions allowed per Groebner-basis computation");
    cmd->add_option("--format", config.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", config.seed, "seed for sampled runs");
    cmd->add_option("--jobs", config.jobs, "parallel workers for batch inputs");
  };

  add_common(app.add_subcommand("check", "decide irreducible quantifiability"));
  add_common(app.add_subcommand("conserved", "print conserved-quantity bases"));
  add_common(app.add_subcommand("oracle", "search configuration spaces for counterexamples"));
  add_common(app.add_subcommand("classify", "group interactions by conserved-space equivalence"));
  add_common(app.add_subcommand("maximal", "largest interaction with a given conserved basis"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? iq::kExitInputError : iq::kExitSuccess;
  }

  config.command = app.get_subcommands().front()->get_name();
  return iq::run_cli(config, std::cout, std::cerr);
}
