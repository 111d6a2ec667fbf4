#include "pss/batch.hpp"

#include <chrono>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pss/errors.hpp"
#include "pss/objectives.hpp"
#include "pss/random.hpp"

namespace pss
{

namespace
{

ProblemInstance resolve(const ExperimentConfig& config)
{
  try {
    return make_problem(config.problem, config.dims);
  } catch (const LookupError& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

RunResult execute_replicate(const ExperimentConfig& config, const ProblemInstance& problem, std::size_t k)
{
  const auto start = std::chrono::steady_clock::now();

  RunResult out;
  out.run = k;
  out.seed = derive_seed(config.base_seed, k);
  RunOptions options;
  options.retighten_on_stall = config.retighten_on_stall;
  const RunRecord record = run(problem.objective, problem.domain, config.params, out.seed, options);

  const double reference = problem.optimum.value_or(0.0);
  out.final_fitness = record.final_best.fitness;
  out.final_error = out.final_fitness - reference;
  out.final_x = record.final_best.x;
  out.evaluations = record.evaluations;
  out.milestone_errors.reserve(config.milestones.size());
  for (std::size_t m : config.milestones)
    out.milestone_errors.push_back(record.history[m].best_fitness - reference);

  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

void ExperimentConfig::validate() const
{
  if (problem.empty())
    throw ConfigError("no problem given");
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (replicates < 1)
    throw ConfigError("replicates must be at least 1");
  for (std::size_t i = 0; i < milestones.size(); ++i) {
    if (milestones[i] > params.gamma)
      throw ConfigError("milestone " + std::to_string(milestones[i]) + " exceeds the iteration budget " +
                        std::to_string(params.gamma));
    if (i > 0 && milestones[i] <= milestones[i - 1])
      throw ConfigError("milestones must be strictly increasing");
  }
  if (region_lower.empty() != region_upper.empty())
    throw ConfigError("success region needs both lower and upper bounds");

  const ProblemInstance p = resolve(*this);
  if (!region_lower.empty()) {
    const std::size_t n = p.domain.dims();
    if ((region_lower.size() != 1 && region_lower.size() != n) ||
        (region_upper.size() != 1 && region_upper.size() != n))
      throw ConfigError("success region must give 1 or " + std::to_string(n) + " bounds");
  }
}

std::vector<double> broadcast_bounds(const std::vector<double>& bounds, std::size_t dims)
{
  if (bounds.size() == 1)
    return std::vector<double>(dims, bounds.front());
  return bounds;
}

BatchReport run_batch(const ExperimentConfig& config, Execution execution)
{
  config.validate();
  const ProblemInstance problem = resolve(config);

  BatchReport report;
  report.config = config;
  report.optimum = problem.optimum;
  report.runs.resize(config.replicates);

  if (execution == Execution::parallel) {
    std::vector<std::exception_ptr> failures(config.replicates);
    const auto count = static_cast<std::ptrdiff_t>(config.replicates);
#ifdef _OPENMP
    const int threads = config.jobs > 0 ? static_cast<int>(config.jobs) : omp_get_num_procs();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      try {
        report.runs[k] = execute_replicate(config, problem, static_cast<std::size_t>(k));
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
    for (const auto& f : failures)
      if (f)
        std::rethrow_exception(f);
  } else {
    for (std::size_t k = 0; k < config.replicates; ++k)
      report.runs[k] = execute_replicate(config, problem, k);
  }

  std::vector<double> errors;
  std::vector<double> finals;
  std::vector<std::vector<double>> points;
  for (const auto& r : report.runs) {
    errors.push_back(r.final_error);
    finals.push_back(r.final_fitness);
    points.push_back(r.final_x);
  }
  report.error_stats = aggregate_stats(errors);
  report.fitness_stats = aggregate_stats(finals);

  if (!config.region_lower.empty()) {
    const std::size_t n = problem.domain.dims();
    const auto lo = broadcast_bounds(config.region_lower, n);
    const auto hi = broadcast_bounds(config.region_upper, n);
    report.success_rate = success_rate(std::span<const std::vector<double>>(points), lo, hi);
  }
  return report;
}

bool same_results(const BatchReport& a, const BatchReport& b)
{
  if (a.runs.size() != b.runs.size() || a.optimum != b.optimum || a.success_rate != b.success_rate)
    return false;
  for (std::size_t k = 0; k < a.runs.size(); ++k) {
    const RunResult& x = a.runs[k];
    const RunResult& y = b.runs[k];
    if (x.run != y.run || x.seed != y.seed || x.final_fitness != y.final_fitness || x.final_error != y.final_error ||
        x.final_x != y.final_x || x.milestone_errors != y.milestone_errors || x.evaluations != y.evaluations)
      return false;
  }
  return true;
}

}  // namespace pss
