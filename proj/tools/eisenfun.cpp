#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "eisenfun/cli.hpp"

namespace {

using eisenfun::cli::Format;
using eisenfun::cli::RunConfig;

// Options shared by every subcommand.
void add_common(CLI::App* sub, RunConfig& cfg) {
  static const std::map<std::string, Format> kFormats{{"csv", Format::csv},
                                                      {"json", Format::json}};
  sub->add_option("--order", cfg.order, "PHF order m (>= 2)");
  sub->add_option("--min", cfg.min, "grid start");
  sub->add_option("--max", cfg.max, "grid end");
  sub->add_option("--steps", cfg.steps, "number of grid points (>= 2)");
  sub->add_option("--out", cfg.out, "output file (directory for `figure`)");
  sub->add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  sub->add_option("--tol", cfg.tol, "tolerance override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eisenstein pseudo-hyperbolic functions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* figure = app.add_subcommand("figure", "write figure data files fig1..fig5");
  add_common(figure, cfg);
  figure->add_option("--id", cfg.figure_id, "figure number 1..5 (all when omitted)");
  figure->add_option("--k-min", cfg.k_min, "k grid start (figure 3)");
  figure->add_option("--k-max", cfg.k_max, "k grid end (figure 3)");

  auto* table = app.add_subcommand("table", "tabulate e_0..e_{m-1} on a grid");
  add_common(table, cfg);

  auto* eft = app.add_subcommand("eft", "Eisenstein-Fourier transform of a builtin");
  add_common(eft, cfg);
  eft->add_option("--fn", cfg.fn, "gaussian or expdecay");
  eft->add_option("--k-min", cfg.k_min, "k grid start");
  eft->add_option("--k-max", cfg.k_max, "k grid end");

  auto* decompose = app.add_subcommand("decompose", "parity components of a builtin series");
  add_common(decompose, cfg);
  decompose->add_option("--fn", cfg.fn, "exp, cosh, cos, sin or gaussian");

  auto* check = app.add_subcommand("check", "run the identity suite");
  add_common(check, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return eisenfun::cli::kUsageError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  return eisenfun::cli::run(cfg, std::cout, std::cerr);
}
