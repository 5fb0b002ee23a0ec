#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "weldkit/cli.hpp"

int main(int argc, char** argv) {
  using weld::Subcommand;
  weld::RunConfig cfg;

  CLI::App app{"Virtual, welded and rotational welded knot diagrams"};
  app.require_subcommand(1);
  const std::map<std::string, weld::Theory> theories{
      {"classical", weld::Theory::Classical},
      {"virtual", weld::Theory::Virtual},
      {"welded", weld::Theory::Welded},
      {"rotational-welded", weld::Theory::RotationalWelded}};
  const std::map<std::string, weld::ReportFormat> formats{{"text", weld::ReportFormat::Text},
                                                          {"tsv", weld::ReportFormat::Tsv}};
  std::string out, theory = "welded", format = "text";

  struct Entry {
    const char* name;
    Subcommand sub;
    const char* help;
  };
  const Entry entries[] = {
      {"parse", Subcommand::Parse, "Validate diagram files and print canonical codes"},
      {"invariants", Subcommand::Invariants, "Parity profile, Whitney degree, hom counts, Alexander"},
      {"surface", Subcommand::Surface, "Genus and cell counts of the representing surface"},
      {"census", Subcommand::Census, "Fiber-circle census by stratum"},
      {"homcount", Subcommand::HomCount, "Wirtinger presentation and hom counts"},
      {"search", Subcommand::Search, "Search for a move path between two diagrams"},
      {"movie-check", Subcommand::MovieCheck, "Check a movie under a theory"},
      {"render", Subcommand::Render, "Draw a diagram as SVG"}};

  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("inputs", cfg.inputs, "Input files (- for stdin)");
    sub->add_option("--theory", theory, "Move theory")
        ->check(CLI::IsMember(theories, CLI::ignore_case));
    sub->add_option("--groups", cfg.groups, "Group panel, e.g. s3,s4")
        ->delimiter(',')
        ->check(CLI::IsMember({"s3", "s4", "a4", "d4"}));
    sub->add_option("--depth", cfg.limits.max_depth, "Search depth limit")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--nodes", cfg.limits.max_nodes, "Search node limit");
    sub->add_option("--max-crossings", cfg.limits.max_crossings, "Crossing limit for search states")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember(formats, CLI::ignore_case));
    sub->add_option("--out", out, "Write the report to a file");
    sub->callback([&cfg, s = e.sub] { cfg.subcommand = s; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : weld::kExitUsage;
  }
  cfg.theory = theories.at(theory);
  cfg.format = formats.at(format);
  if (!out.empty()) cfg.out = out;
  return weld::run(cfg, std::cout, std::cerr);
}
