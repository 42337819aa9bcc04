#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgblocks/cli.hpp"

int main(int argc, char **argv) {
  using namespace sgb::cli;
  CLI::App app{"Block decomposition of subgroup spaces of rank 1 and rank 2 compact Lie groups"};
  app.require_subcommand(1);

  std::string group, format = "table";
  bool ledger = false;
  auto *classify = app.add_subcommand("classify", "print the block table of a group");
  classify->add_option("--group", group, "ambient group")->required()->check(CLI::IsMember(group_names()));
  classify->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  classify->add_flag("--ledger", ledger, "append the discrepancy ledger");

  std::string summary_group;
  auto *summary = app.add_subcommand("summary", "print per-rank block statistics");
  summary->add_option("--group", summary_group, "ambient group")->required()->check(CLI::IsMember(group_names()));

  std::vector<std::string> oracle_args;
  auto *oracle = app.add_subcommand("oracle", "brute-force checks: lemma-counting | weyl-subgroups W | rep-decompose W H_d");
  oracle->add_option("args", oracle_args, "subcommand and its arguments")->required();

  std::optional<std::string> diff_group;
  auto *diff = app.add_subcommand("paper-diff", "list values that differ from the published tables");
  diff->add_option("--group", diff_group, "restrict to one group")->check(CLI::IsMember(group_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  if (*classify)
    return cmd_classify(group, format, ledger, std::cout, std::cerr);
  if (*summary)
    return cmd_summary(summary_group, std::cout, std::cerr);
  if (*oracle)
    return cmd_oracle(oracle_args, std::cout, std::cerr);
  return cmd_paper_diff(diff_group, std::cout, std::cerr);
}
