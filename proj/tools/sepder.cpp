#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sepder/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Separator-based derivation toolkit for graphic arrangements"};
  app.require_subcommand(1);

  sepder::RunConfig cfg;
  int cutoff = -1;
  bool have_cutoff = false;

  auto add_common = [&](CLI::App* sub, bool needs_cutoff) {
    sub->add_option("input", cfg.input_path,
                    sub->get_name() == "census" ? "directory of graph files" : "graph file")
        ->required();
    sub->add_option("--format", cfg.format, "edge_list, graph6 or auto")
        ->check(CLI::IsMember({"auto", "edge_list", "graph6"}));
    sub->add_option("--output", cfg.output, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    if (needs_cutoff) {
      sub->add_option("--cutoff", cutoff, "verification degree cap (default: max degree + 2)")
          ->each([&](const std::string&) { have_cutoff = true; });
    }
  };

  add_common(app.add_subcommand("separators", "minimal vertex separators"), false);
  add_common(app.add_subcommand("connectivity", "vertex connectivity"), false);
  auto* poset = app.add_subcommand("poset", "separator poset, or one descending chain");
  add_common(poset, false);
  poset->add_option("--ordering", cfg.ordering,
                    "vertex ordering; prints the descending chain of its set")
      ->delimiter(',');
  add_common(app.add_subcommand("generators", "assemble a generating set"), false);
  add_common(app.add_subcommand("verify", "certify generation degree by degree"), true);
  add_common(app.add_subcommand("degrees", "minimal derivation degree sequence"), true);
  add_common(app.add_subcommand("bounds", "degree bound report"), true);
  add_common(app.add_subcommand("saito", "determinant basis test"), true);
  add_common(app.add_subcommand("census", "one JSON record per graph in a directory"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : sepder::exit_parse;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (have_cutoff) cfg.cutoff = cutoff;
  return sepder::run(cfg, std::cout, std::cerr);
}
