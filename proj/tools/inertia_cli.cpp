// Command-line front end: scan, enumerate, sample, construct, fixtures.

#include <CLI11.hpp>

#include <iostream>

#include "inertia/harness.hpp"

int main(int argc, char** argv) {
  using namespace inertia;
  CLI::App app{"Exact inertia checks for graph conjectures"};
  app.require_subcommand(1);

  std::string checks = "all";
  std::string emit = "jsonl";
  bool fail_fast = false;
  std::size_t jobs = default_jobs();
  std::uint64_t seed = 0;
  std::size_t exact_limit = CheckOptions{}.exact_limit;
  std::size_t max_order = kDefaultMaxOrder;
  bool allow_approximate = false;
  bool timings = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--checks", checks, "Comma-separated check ids, or 'all'");
    sub->add_option("--emit", emit, "Report format")->check(CLI::IsMember({"jsonl", "csv"}));
    sub->add_flag("--fail-fast", fail_fast, "Stop at the first violation or parse error");
    sub->add_option("--jobs", jobs, "Worker threads (default from INERTIA_JOBS)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--exact-limit", exact_limit, "Order above which approximation may be used");
    sub->add_option("--max-order", max_order, "Largest accepted graph order");
    sub->add_flag("--allow-approximate", allow_approximate,
                  "Use floating-point inertia above --exact-limit");
    sub->add_flag("--timings", timings, "Include per-record wall-clock time");
  };

  auto* scan = app.add_subcommand("scan", "Check graph6/sparse6 lines from files or stdin");
  std::vector<std::string> inputs;
  scan->add_option("inputs", inputs, "Input files ('-' for stdin)");
  common(scan);

  auto* enumerate = app.add_subcommand("enumerate", "Sweep all labeled graphs up to an order");
  std::size_t sweep_order = 5;
  enumerate->add_option("order", sweep_order, "Largest order (at most 7)")->required();
  common(enumerate);

  auto* sample = app.add_subcommand("sample", "Check random graphs from G(n, 1/2)");
  std::size_t sample_order = 0, sample_count = 1;
  sample->add_option("n", sample_order, "Order")->required();
  sample->add_option("count", sample_count, "Number of graphs")->required();
  sample->add_option("--seed", seed, "Seed for the mt19937_64 engine");
  common(sample);

  auto* construct = app.add_subcommand("construct", "Build graphs and print graph6");
  std::vector<std::string> pipelines;
  construct->add_option("pipeline", pipelines,
                        "e.g. \"complete 2 | kl_double | complement\"")
      ->required();
  construct->add_option("--max-order", max_order, "Largest accepted graph order");

  auto* fixtures = app.add_subcommand("fixtures", "Check the fixture catalogue");
  common(fixtures);

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(pipelines, max_order, std::cout, std::cerr);

    ScanConfig config;
    config.checks.enabled = parse_check_list(checks);
    config.checks.exact_limit = exact_limit;
    config.checks.allow_approximate = allow_approximate;
    config.emit = emit == "csv" ? EmitFormat::csv : EmitFormat::jsonl;
    config.fail_fast = fail_fast;
    config.jobs = jobs;
    config.seed = seed;
    config.max_order = max_order;
    config.timings = timings;
    if (exact_limit > max_order)
      throw std::invalid_argument("--exact-limit exceeds --max-order");

    RunStats stats;
    if (scan->parsed()) {
      if (!inputs.empty()) config.inputs = inputs;
      stats = cmd_scan(config, std::cout, std::cerr);
    } else if (enumerate->parsed()) {
      stats = cmd_enumerate(sweep_order, config, std::cout, std::cerr);
    } else if (sample->parsed()) {
      stats = cmd_sample(sample_order, sample_count, config, std::cout, std::cerr);
    } else {
      stats = cmd_fixtures(config, std::cout, std::cerr);
    }
    return stats.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
