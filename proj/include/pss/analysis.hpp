#ifndef PSS_ANALYSIS_HPP
#define PSS_ANALYSIS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pss/core.hpp"

namespace pss
{

/// n_prime grid points inside the (true or fictitious) prominent region out of n_total.
struct OccupancyCount
{
  std::size_t n_prime = 0;
  std::size_t n_total = 1;

  bool operator==(const OccupancyCount&) const = default;
};

struct StatsSummary
{
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double std = 0.0; ///< sample standard deviation, n-1 denominator (0 for a single value)
  std::size_t count = 0;
};

/// n'/N, the chance that one uniform draw lands in the prominent region.
double p_in_prominent(const OccupancyCount& occ);

/// 1 - (1 - n'/N)^beta, at least one of beta draws lands in the region.
double p_at_least_one(const OccupancyCount& occ, std::size_t beta);

/// Diversification: p_at_least_one * (1 - alpha). Takes no iteration index.
double exploration_probability(const OccupancyCount& occ, std::size_t beta, double alpha);

/// Intensification over the current fictitious region: p_at_least_one(occ_t) * alpha.
double intensification_probability(const OccupancyCount& occ_t, std::size_t beta, double alpha);

using ScalarFunction = std::function<double(double)>;

/**
 * Count grid points with f(x) < threshold on `grid` evenly spaced points
 * spanning [lower, upper] inclusive. The parallel path is an OpenMP
 * reduction; the serial path is its reference. Throws EvaluationError on a
 * non-finite value.
 */
OccupancyCount discretize_occupancy(const ScalarFunction& f, double lower, double upper, std::size_t grid,
                                    double threshold, Execution execution = Execution::serial);

/// Values of f at strict interior local minima of the same grid, ascending.
std::vector<double> local_minimum_values(const ScalarFunction& f, double lower, double upper, std::size_t grid);

/// Fraction of runs whose final incumbent lies in [region_lower, region_upper] component-wise.
double success_rate(std::span<const RunRecord> runs, std::span<const double> region_lower,
                    std::span<const double> region_upper);

/// Same test over bare final points.
double success_rate(std::span<const std::vector<double>> finals, std::span<const double> region_lower,
                    std::span<const double> region_upper);

/// Throws std::invalid_argument on empty input.
StatsSummary aggregate_stats(std::span<const double> values);

}  // namespace pss

#endif  // PSS_ANALYSIS_HPP
