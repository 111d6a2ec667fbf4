#include "pss/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pss/errors.hpp"

namespace pss
{

namespace
{

void check_occupancy(const OccupancyCount& occ)
{
  if (occ.n_total == 0)
    throw std::invalid_argument("occupancy: n_total must be at least 1");
  if (occ.n_prime > occ.n_total)
    throw std::invalid_argument("occupancy: n_prime exceeds n_total");
}

void check_alpha(double alpha)
{
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1]");
}

double grid_point(double lower, double upper, std::size_t k, std::size_t grid)
{
  if (k + 1 == grid)
    return upper;
  return lower + (upper - lower) * static_cast<double>(k) / static_cast<double>(grid - 1);
}

void check_grid(double lower, double upper, std::size_t grid)
{
  if (grid < 2)
    throw std::invalid_argument("discretize_occupancy: grid must have at least 2 points");
  if (!(lower < upper))
    throw std::invalid_argument("discretize_occupancy: lower must be below upper");
}

[[noreturn]] void throw_non_finite(double x, double v)
{
  throw EvaluationError("non-finite value " + std::to_string(v) + " at x = " + std::to_string(x), {x});
}

}  // namespace

double p_in_prominent(const OccupancyCount& occ)
{
  check_occupancy(occ);
  return static_cast<double>(occ.n_prime) / static_cast<double>(occ.n_total);
}

double p_at_least_one(const OccupancyCount& occ, std::size_t beta)
{
  if (beta < 1)
    throw std::invalid_argument("p_at_least_one: beta must be at least 1");
  const double p = p_in_prominent(occ);

  // Count draw sequences exactly while N^beta fits in a double's mantissa:
  // (N^b - (N - n')^b) / N^b then carries a single rounding.
  constexpr std::uint64_t exact_limit = std::uint64_t{1} << 53;
  std::uint64_t all = 1;
  std::uint64_t miss = 1;
  for (std::size_t b = 0; b < beta; ++b) {
    if (all > exact_limit / occ.n_total)
      return -std::expm1(static_cast<double>(beta) * std::log1p(-p));
    all *= occ.n_total;
    miss *= occ.n_total - occ.n_prime;
  }
  return static_cast<double>(all - miss) / static_cast<double>(all);
}

double exploration_probability(const OccupancyCount& occ, std::size_t beta, double alpha)
{
  check_alpha(alpha);
  return p_at_least_one(occ, beta) * (1.0 - alpha);
}

double intensification_probability(const OccupancyCount& occ_t, std::size_t beta, double alpha)
{
  check_alpha(alpha);
  return p_at_least_one(occ_t, beta) * alpha;
}

OccupancyCount discretize_occupancy(const ScalarFunction& f, double lower, double upper, std::size_t grid,
                                    double threshold, Execution execution)
{
  check_grid(lower, upper, grid);

  std::size_t below = 0;
  if (execution == Execution::parallel) {
    // first non-finite index, reported after the reduction
    std::ptrdiff_t bad = static_cast<std::ptrdiff_t>(grid);
    const auto count = static_cast<std::ptrdiff_t>(grid);
#pragma omp parallel for reduction(+ : below) reduction(min : bad)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      const double v = f(grid_point(lower, upper, static_cast<std::size_t>(k), grid));
      if (!std::isfinite(v))
        bad = std::min(bad, k);
      else if (v < threshold)
        ++below;
    }
    if (bad < count) {
      const double x = grid_point(lower, upper, static_cast<std::size_t>(bad), grid);
      throw_non_finite(x, f(x));
    }
  } else {
    for (std::size_t k = 0; k < grid; ++k) {
      const double x = grid_point(lower, upper, k, grid);
      const double v = f(x);
      if (!std::isfinite(v))
        throw_non_finite(x, v);
      if (v < threshold)
        ++below;
    }
  }
  return {below, grid};
}

std::vector<double> local_minimum_values(const ScalarFunction& f, double lower, double upper, std::size_t grid)
{
  check_grid(lower, upper, grid);
  std::vector<double> values(grid);
  for (std::size_t k = 0; k < grid; ++k)
    values[k] = f(grid_point(lower, upper, k, grid));

  std::vector<double> minima;
  for (std::size_t k = 1; k + 1 < grid; ++k)
    if (values[k] < values[k - 1] && values[k] < values[k + 1])
      minima.push_back(values[k]);
  std::sort(minima.begin(), minima.end());
  return minima;
}

double success_rate(std::span<const std::vector<double>> finals, std::span<const double> region_lower,
                    std::span<const double> region_upper)
{
  if (region_lower.size() != region_upper.size())
    throw std::invalid_argument("success_rate: region bounds differ in length");
  if (finals.empty())
    throw std::invalid_argument("success_rate: no runs");

  std::size_t inside = 0;
  for (const auto& x : finals) {
    if (x.size() != region_lower.size())
      throw std::invalid_argument("success_rate: run dimensionality does not match the region");
    bool ok = true;
    for (std::size_t j = 0; j < x.size() && ok; ++j)
      ok = x[j] >= region_lower[j] && x[j] <= region_upper[j];
    inside += ok ? 1 : 0;
  }
  return static_cast<double>(inside) / static_cast<double>(finals.size());
}

double success_rate(std::span<const RunRecord> runs, std::span<const double> region_lower,
                    std::span<const double> region_upper)
{
  std::vector<std::vector<double>> finals;
  finals.reserve(runs.size());
  for (const auto& rec : runs)
    finals.push_back(rec.final_best.x);
  return success_rate(std::span<const std::vector<double>>(finals), region_lower, region_upper);
}

StatsSummary aggregate_stats(std::span<const double> values)
{
  if (values.empty())
    throw std::invalid_argument("aggregate_stats: empty input");

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  StatsSummary s;
  s.count = n;
  s.min = sorted.front();
  s.max = sorted.back();
  s.median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  if (s.min == s.max) {
    // summation rounding would otherwise leak into mean and std
    s.mean = s.min;
    return s;
  }
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double v : sorted)
    ss += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(ss / static_cast<double>(n - 1));
  return s;
}

}  // namespace pss
