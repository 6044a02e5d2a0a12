#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "rtp/cli.hpp"
#include "rtp/errors.hpp"

namespace {

void add_common_flags(CLI::App* cmd, rtp::RunConfig& cfg, bool wants_spec) {
  if (wants_spec) {
    cmd->add_option("--spec", cfg.spec_file, "spec file (JSON with fields d, h)");
    cmd->add_option("--catalog", cfg.catalog_name, "named catalog entry");
  }
  cmd->add_option("--rows", cfg.rows, "truncation rows")->check(CLI::PositiveNumber);
  cmd->add_option("--cols", cfg.cols, "truncation columns (default: rows)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--order", cfg.order, "certification / truncation order")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--minor-cap", cfg.minor_cap,
                  "largest minor size to enumerate (0 = full)")
      ->check(CLI::NonNegativeNumber);
  std::map<std::string, rtp::OutputFormat> formats{
      {"table", rtp::OutputFormat::Table},
      {"csv", rtp::OutputFormat::Csv},
      {"json", rtp::OutputFormat::Json}};
  cmd->add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--seed", cfg.seed, "random seed (search)");
  cmd->add_option("--trials", cfg.trials, "sample count (search)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "riordan_tp: exact construction and total-positivity certification "
      "of Riordan arrays"};
  app.require_subcommand(1);

  rtp::RunConfig cfg;
  using Handler = std::function<int(const rtp::RunConfig&, std::ostream&)>;
  std::pair<const char*, std::pair<const char*, Handler>> commands[] = {
      {"build", {"print the array truncation", rtp::cmd_build}},
      {"certify",
       {"run the three TP criteria plus the direct enumeration",
        rtp::cmd_certify}},
      {"identity",
       {"verify the factorization / decomposition / block identities",
        rtp::cmd_identity}},
      {"az", {"extract the A- and Z-sequences (proper arrays)", rtp::cmd_az}},
      {"tp", {"enumerate minors of the array truncation", rtp::cmd_tp}},
      {"search",
       {"sample random rational specs and report those only the "
        "Hessenberg criterion certifies",
        rtp::cmd_search}},
      {"catalog", {"list the built-in arrays", rtp::cmd_catalog}},
  };

  Handler selected;
  for (auto& [name, info] : commands) {
    CLI::App* sub = app.add_subcommand(name, info.first);
    const bool wants_spec =
        std::string(name) != "search" && std::string(name) != "catalog";
    add_common_flags(sub, cfg, wants_spec);
    if (std::string(name) == "tp" && cfg.minor_cap == 0) {
      // tp defaults to the configurable cap of 4; 0 still means full.
      sub->parse_complete_callback([&cfg, sub]() {
        if (sub->count("--minor-cap") == 0) cfg.minor_cap = 4;
      });
    }
    Handler handler = info.second;
    sub->callback([&selected, handler]() { selected = handler; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return selected(cfg, std::cout);
  } catch (const rtp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
