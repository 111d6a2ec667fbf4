#ifndef PSS_CORE_HPP
#define PSS_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pss/random.hpp"
#include "pss/sampling.hpp"

namespace pss
{

enum class VariableKind
{
  continuous,
  integer,
};

/// Box-bounded search space. Construction validates the invariants.
class SearchDomain
{
public:
  SearchDomain(std::vector<double> lower, std::vector<double> upper, std::vector<VariableKind> kinds);

  /// All-continuous domain.
  SearchDomain(std::vector<double> lower, std::vector<double> upper);

  /// n copies of [lower, upper].
  static SearchDomain uniform(std::size_t dims, double lower, double upper,
                              VariableKind kind = VariableKind::continuous);

  std::size_t dims() const noexcept { return lower_.size(); }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }
  const std::vector<VariableKind>& kinds() const noexcept { return kinds_; }

  double range(std::size_t j) const noexcept { return upper_[j] - lower_[j]; }

  /// Bounds check plus whole-number check on integer components.
  bool contains(std::span<const double> x) const noexcept;

private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<VariableKind> kinds_;
};

struct PssParams
{
  double alpha = 0.95;     ///< acceptance probability of the prominent region
  std::size_t beta = 30;   ///< population size
  std::size_t gamma = 100; ///< iteration budget

  /// Throws std::invalid_argument unless 0 <= alpha <= 1, beta >= 1, gamma >= 1.
  void validate() const;
};

struct Candidate
{
  std::vector<double> x;
  double fitness = 0.0;

  bool operator==(const Candidate&) const = default;
};

/// Tightened bounds around the incumbent, clipped to the domain.
struct ProminentRegion
{
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> eta;    ///< per-dimension half-bandwidth
  std::vector<double> center; ///< incumbent at the last update

  bool operator==(const ProminentRegion&) const = default;
};

struct HistoryEntry
{
  std::size_t iteration = 0;
  double best_fitness = 0.0;
  std::vector<double> best_x;

  bool operator==(const HistoryEntry&) const = default;
};

struct RunRecord
{
  std::uint64_t seed = 0;
  PssParams params;
  std::vector<HistoryEntry> history; ///< gamma + 1 entries; entry 0 is the initial population
  Candidate final_best;
  std::size_t evaluations = 0;
};

bool operator==(const PssParams& a, const PssParams& b) noexcept;
bool operator==(const RunRecord& a, const RunRecord& b) noexcept;

using Objective = std::function<double(std::span<const double>)>;
using ProgressCallback = std::function<void(std::size_t iteration, double best_fitness)>;

enum class Execution
{
  serial,
  parallel,
};

struct RunOptions
{
  /// Evaluate each generation with the OpenMP kernel. Only valid for pure,
  /// reentrant objectives; results are identical to serial evaluation.
  Execution evaluation = Execution::serial;

  /// Recompute the bandwidth and region every iteration, not only when the
  /// incumbent improves.
  bool retighten_on_stall = false;

  SamplingMethod sampling = SamplingMethod::monte_carlo;

  ProgressCallback progress;
};

/**
 * Snap a component to its variable kind. Continuous values pass through;
 * integer values are rounded to nearest and clamped into
 * [ceil(lower), floor(upper)]. Throws std::domain_error when an integer
 * component has no whole number inside its bounds.
 */
double quantize(double value, VariableKind kind, double lower, double upper);

/// eta_j = (1 - alpha)(1 - i/gamma)/2 * (upper_j - lower_j). Throws if iteration > gamma.
std::vector<double> compute_bandwidth(const PssParams& params, std::size_t iteration,
                                      const SearchDomain& domain);

/// Region [best - eta, best + eta] clipped to the domain. Throws if best_x is outside.
ProminentRegion update_prominent_region(std::span<const double> best_x, std::span<const double> eta,
                                        const SearchDomain& domain);

/**
 * One solution component. r <= alpha scales u into the prominent region,
 * otherwise into the full domain; integer components are quantized
 * against the domain bounds afterwards.
 */
double sample_feature(std::size_t j, const ProminentRegion& region, const SearchDomain& domain, double u,
                      double r, double alpha);

/// beta points scaled from one fresh beta x n coefficient matrix.
std::vector<std::vector<double>> initialize_population(const SearchDomain& domain, const PssParams& params,
                                                       RandomStream& stream);
std::vector<std::vector<double>> initialize_population(const SearchDomain& domain, const PssParams& params,
                                                       RandomStream& stream, Sampler& sampler);

struct Generation
{
  std::vector<std::vector<double>> points;
  std::size_t from_domain = 0; ///< components drawn from the full domain (r > alpha)
};

/// Build a generation component-wise from a coefficient matrix and a matching acceptance matrix.
Generation build_generation(const SearchDomain& domain, const ProminentRegion& region, double alpha,
                            const CoefficientMatrix& coefficients, const CoefficientMatrix& acceptance);

/**
 * Evaluate every point in index order. The parallel path runs the loop
 * under OpenMP; the serial path is the reference it is tested against.
 * Throws EvaluationError on NaN, reporting the lowest offending index.
 */
std::vector<double> evaluate_population(const Objective& objective,
                                        const std::vector<std::vector<double>>& points,
                                        Execution execution = Execution::serial);

/// Lowest index among the minimal fitness values.
std::size_t argmin_fitness(std::span<const double> fitness);

/**
 * Full optimisation run.
 *
 * Per iteration i = 1..gamma the stream yields one beta x n coefficient
 * matrix followed by one beta x n acceptance matrix, both row-major.
 */
RunRecord run(const Objective& objective, const SearchDomain& domain, const PssParams& params,
              std::uint64_t seed, const RunOptions& options = {});

}  // namespace pss

#endif  // PSS_CORE_HPP
