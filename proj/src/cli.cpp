#include "pss/cli.hpp"

#include <cstdio>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "pss/errors.hpp"
#include "pss/objectives.hpp"
#include "pss/report.hpp"

namespace pss
{

namespace
{

void print_listing(std::ostream& os)
{
  const auto problems = list_problems();
  os << std::left << std::setw(18) << "id" << std::setw(8) << "dims" << std::setw(24) << "bounds"
     << "optimum\n";
  for (const auto& p : problems)
    os << std::left << std::setw(18) << p.id << std::setw(8) << p.dims << std::setw(24) << p.bounds << p.optimum
       << '\n';
}

}  // namespace

CliRequest parse_cli(const std::vector<std::string>& args)
{
  CliRequest req;
  ExperimentConfig& cfg = req.config;

  CLI::App app{"Pareto-like sequential sampling benchmark runner", args.empty() ? "pss-bench" : args.front()};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::size_t dims = 0;
  std::size_t iters = 0;
  std::size_t runs = 0;
  std::string format = "csv";
  bool list = false;

  auto* problem_opt = app.add_option("--problem", cfg.problem, "Problem id (see --list-problems)");
  auto* dims_opt = app.add_option("--dims", dims, "Dimensionality for any-n functions")->check(CLI::PositiveNumber);
  app.add_option("--alpha", cfg.params.alpha, "Acceptance probability of the prominent region")
    ->check(CLI::Range(0.0, 1.0))
    ->capture_default_str();
  app.add_option("--pop", cfg.params.beta, "Population size")->check(CLI::PositiveNumber)->capture_default_str();
  auto* iters_opt = app.add_option("--iters", iters, "Iterations per run")->check(CLI::PositiveNumber);
  auto* runs_opt = app.add_option("--runs", runs, "Independent replicate runs")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.base_seed, "Base seed; run k uses a seed derived from (seed, k)")
    ->capture_default_str();
  app.add_option("--milestones", cfg.milestones, "Comma-separated iteration milestones")->delimiter(',');
  app.add_option("--out", cfg.output_path, "Output file (stdout when omitted)");
  app.add_option("--format", format, "Report format")
    ->check(CLI::IsMember({"csv", "json"}))
    ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all processors)")->capture_default_str();
  app.add_option("--region-lower", cfg.region_lower, "Success-region lower bound(s), comma-separated")
    ->delimiter(',');
  app.add_option("--region-upper", cfg.region_upper, "Success-region upper bound(s), comma-separated")
    ->delimiter(',');
  app.add_flag("--retighten-on-stall", cfg.retighten_on_stall,
               "Shrink the prominent region every iteration, not only after an improvement");
  app.add_flag("--list-problems", list, "List registered problems and exit");
  app.add_flag("-q,--quiet", req.quiet, "Suppress the summary on stderr");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back();  // program name

  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    req.action = CliRequest::Action::help;
    req.help_text = app.help();
    return req;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (list) {
    req.action = CliRequest::Action::list_problems;
    return req;
  }

  if (problem_opt->count() == 0)
    throw UsageError("--problem is required");
  if (iters_opt->count() == 0)
    throw UsageError("--iters is required");
  if (runs_opt->count() == 0)
    throw UsageError("--runs is required");

  if (dims_opt->count() > 0)
    cfg.dims = dims;
  cfg.params.gamma = iters;
  cfg.replicates = runs;
  cfg.format = format == "json" ? ReportFormat::json : ReportFormat::csv;
  return req;
}

int run_cli(const std::vector<std::string>& args)
{
  CliRequest req;
  try {
    req = parse_cli(args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  }

  switch (req.action) {
    case CliRequest::Action::help:
      std::cout << req.help_text;
      return 0;
    case CliRequest::Action::list_problems:
      print_listing(std::cout);
      return 0;
    case CliRequest::Action::run:
      break;
  }

  try {
    const BatchReport report = run_batch(req.config);
    export_report(report);
    if (!req.quiet) {
      const StatsSummary& s = report.error_stats;
      std::cerr << req.config.problem << ": " << report.runs.size() << " runs, final error mean "
                << format_double(s.mean) << " std " << format_double(s.std) << " min " << format_double(s.min)
                << " max " << format_double(s.max);
      if (report.success_rate)
        std::cerr << ", success rate " << format_double(*report.success_rate);
      std::cerr << '\n';
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace pss
