#ifndef PSS_BATCH_HPP
#define PSS_BATCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pss/analysis.hpp"
#include "pss/core.hpp"

namespace pss
{

enum class ReportFormat
{
  csv,
  json,
};

struct ExperimentConfig
{
  std::string problem;
  std::optional<std::size_t> dims;
  PssParams params;
  std::size_t replicates = 1;
  std::uint64_t base_seed = 0;
  std::vector<std::size_t> milestones; ///< iteration indices in [0, gamma], strictly increasing
  std::string output_path;             ///< empty writes to stdout
  ReportFormat format = ReportFormat::csv;
  std::size_t jobs = 0;                ///< worker threads; 0 uses every processor
  bool retighten_on_stall = false;     ///< see RunOptions::retighten_on_stall

  /// Optional box for the success rate; both empty or both set.
  std::vector<double> region_lower;
  std::vector<double> region_upper;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

struct RunResult
{
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double final_fitness = 0.0;
  double final_error = 0.0; ///< final_fitness - optimum (raw fitness when no optimum is known)
  std::vector<double> final_x;
  std::vector<double> milestone_errors;
  std::size_t evaluations = 0;
  double wall_seconds = 0.0;
};

struct BatchReport
{
  ExperimentConfig config;
  std::optional<double> optimum;
  std::vector<RunResult> runs;
  StatsSummary error_stats;
  StatsSummary fitness_stats;
  std::optional<double> success_rate;
};

/// Expand a single bound to every dimension; pass through a full-length list.
std::vector<double> broadcast_bounds(const std::vector<double>& bounds, std::size_t dims);

/**
 * Execute `replicates` independent runs. Run k uses derive_seed(base_seed, k)
 * and results are stored by run index, so the parallel path (OpenMP over
 * replicates) and the serial reference produce identical reports apart from
 * wall-clock fields. Throws ConfigError before any run on a bad config.
 */
BatchReport run_batch(const ExperimentConfig& config, Execution execution = Execution::parallel);

/// True when both reports agree on everything except wall-clock timings.
bool same_results(const BatchReport& a, const BatchReport& b);

}  // namespace pss

#endif  // PSS_BATCH_HPP
