#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "relsig/cli.hpp"

namespace {

void add_common(CLI::App* cmd, relsig::RunConfig& config, bool& json_flag) {
  cmd->add_option("input", config.input_path, "system description file")
      ->required();
  cmd->add_flag("--json", json_flag, "emit a JSON report instead of text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact signatures, subsignatures and Barlow-Proschan importance "
      "indices of semicoherent systems"};
  app.require_subcommand(1);

  relsig::RunConfig config;
  bool json_flag = false;
  std::vector<unsigned> set_components;
  std::uint64_t trials = 0;

  auto* signature = app.add_subcommand(
      "signature", "Samaniego signature from the reliability polynomial");
  add_common(signature, config, json_flag);
  signature->add_flag("--show-steps", config.show_steps,
                      "print the intermediate polynomials");

  auto* subsig = app.add_subcommand(
      "subsig", "signature of a component subset (--set 1,2,3)");
  add_common(subsig, config, json_flag);
  subsig->add_option("--set", set_components, "1-indexed components of M")
      ->delimiter(',');
  subsig->add_flag("--show-steps", config.show_steps,
                   "print the intermediate polynomials");

  auto* bp = app.add_subcommand(
      "bp", "Barlow-Proschan importance index of every component");
  add_common(bp, config, json_flag);
  bp->add_flag("--show-steps", config.show_steps,
               "print the per-component derivative sections");

  auto* genfunc = app.add_subcommand(
      "genfunc", "generating function of a subset signature (--set 1,2,3)");
  add_common(genfunc, config, json_flag);
  genfunc->add_option("--set", set_components, "1-indexed components of M")
      ->delimiter(',');
  genfunc->add_flag("--show-steps", config.show_steps,
                    "print the intermediate polynomials");

  auto* poly = app.add_subcommand(
      "poly", "reliability polynomial in standard multilinear form");
  add_common(poly, config, json_flag);

  auto* modules = app.add_subcommand(
      "modules", "all modular sets with their factorizations (n <= 12)");
  add_common(modules, config, json_flag);

  auto* verify = app.add_subcommand(
      "verify", "cross-check the polynomial pipeline against the oracles");
  add_common(verify, config, json_flag);
  verify->add_option("--trials", trials,
                     "additionally spot-check M=C by sampling this many "
                     "random failure orders");
  verify->add_option("--seed", config.seed, "sampler seed (default 0)");
  verify->add_flag("--all-subsets", config.all_subsets,
                   "check every nonempty subset, not just |M| <= 4 (n <= 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return relsig::exit_code::usage;
  }

  if (signature->parsed()) config.command = relsig::Command::signature;
  if (subsig->parsed()) config.command = relsig::Command::subsig;
  if (bp->parsed()) config.command = relsig::Command::bp;
  if (genfunc->parsed()) config.command = relsig::Command::genfunc;
  if (poly->parsed()) config.command = relsig::Command::poly;
  if (modules->parsed()) config.command = relsig::Command::modules;
  if (verify->parsed()) config.command = relsig::Command::verify;
  if (!set_components.empty()) config.set_m = set_components;
  if (verify->parsed() && verify->count("--trials") > 0)
    config.trials = trials;
  config.format =
      json_flag ? relsig::OutputFormat::json : relsig::OutputFormat::text;

  return relsig::run(config, std::cout, std::cerr);
}
