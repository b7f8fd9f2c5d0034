#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hitset/cli.hpp"

int main(int argc, char** argv) {
  using namespace hitset;
  CLI::App app{"hitset: compressed enumeration of exact, all and minimal hitting sets"};
  app.require_subcommand(1);

  RunConfig config;
  std::string badness = "auto", grade = "first", format = "text";
  bool no_feasibility = false;
  std::size_t cutoff = 0;

  auto common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", config.input, "input file")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--no-feasibility", no_feasibility, "skip the feasibility check");
    sub->add_option("--workers", config.workers, "worker threads (0 = hardware, 1 = sequential)");
  };
  auto driver = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--samples", config.samples, "samples per row");
    sub->add_option("--badness", badness, "auto, first, second or third")
        ->check(CLI::IsMember({"auto", "first", "second", "third"}));
    sub->add_option("--mnmc-cache", config.mnmc_cache, "MinNotMC cache file");
  };

  auto* gen = app.add_subcommand("gen", "random hypergraph with signature (w,h,k)");
  gen->add_option("width", config.signature.w, "ground-set size")->required();
  gen->add_option("edges", config.signature.h, "number of edges")->required();
  gen->add_option("size", config.signature.k, "edge size")->required();
  gen->add_option("--seed", config.seed, "random seed");
  gen->add_option("-o,--output", config.output, "output file");

  auto* ehs = app.add_subcommand("ehs", "exact hitting sets as g-rows");
  common(ehs, true);
  ehs->add_flag("--reduce", config.reduce, "work on the quotient by vertex equivalence");

  auto* matchings = app.add_subcommand("matchings", "perfect matchings of a graph (`n m` then `u v` lines)");
  common(matchings, true);

  auto* hs = app.add_subcommand("hs", "all hitting sets as semifinal e-rows");
  common(hs, true);
  hs->add_option("--cutoff", cutoff, "drop rows of degree above this");

  auto* mhs = app.add_subcommand("mhs", "minimal hitting sets");
  common(mhs, true);
  driver(mhs);
  mhs->add_option("--grade", grade, "first or second")->check(CLI::IsMember({"first", "second"}));
  mhs->add_option("--cutoff", cutoff, "drop rows of degree above this");
  mhs->add_flag("--reduce", config.reduce, "work on the quotient by vertex equivalence");

  auto* classify = app.add_subcommand("classify", "second-grade row verdicts and statistics");
  common(classify, true);
  driver(classify);
  classify->add_option("--cutoff", cutoff, "drop rows of degree above this");

  auto* minnotmc = app.add_subcommand("minnotmc", "minimal non-MC sets as a family file");
  common(minnotmc, true);
  minnotmc->add_option("-o,--output", config.output, "output file");

  auto* sample = app.add_subcommand("sample", "uniform random minimal hitting sets");
  common(sample, true);
  sample->add_option("--seed", config.seed, "random seed");
  sample->add_option("-n,--count", config.count, "number of sets");

  auto* count = app.add_subcommand("count", "counts of exact, all and minimal hitting sets");
  common(count, true);
  driver(count);
  count->add_flag("--reduce", config.reduce, "reduce before the exact enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  static const std::map<std::string, BadnessMode> modes{
      {"auto", BadnessMode::Auto}, {"first", BadnessMode::First}, {"second", BadnessMode::Second}, {"third", BadnessMode::Third}};
  config.badness = modes.at(badness);
  config.grade = grade == "second" ? Grade::Second : Grade::First;
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  config.feasibility = !no_feasibility;
  if (cutoff > 0) config.cutoff = cutoff;
  return run_command(config, std::cout, std::cerr);
}
