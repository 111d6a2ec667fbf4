#include "pss/core.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pss/errors.hpp"

namespace pss
{

namespace
{

bool has_whole_number(double lower, double upper) { return std::ceil(lower) <= std::floor(upper); }

std::string format_point(std::span<const double> x)
{
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t j = 0; j < x.size(); ++j)
    os << (j ? ", " : "") << x[j];
  os << ')';
  return os.str();
}

}  // namespace

SearchDomain::SearchDomain(std::vector<double> lower, std::vector<double> upper, std::vector<VariableKind> kinds)
  : lower_(std::move(lower)), upper_(std::move(upper)), kinds_(std::move(kinds))
{
  if (lower_.empty())
    throw std::invalid_argument("SearchDomain: at least one dimension is required");
  if (lower_.size() != upper_.size() || lower_.size() != kinds_.size())
    throw std::invalid_argument("SearchDomain: lower, upper and kinds must have the same length");
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]))
      throw std::invalid_argument("SearchDomain: bounds must be finite (dimension " + std::to_string(j) + ")");
    if (lower_[j] > upper_[j])
      throw std::invalid_argument("SearchDomain: lower > upper in dimension " + std::to_string(j));
    if (kinds_[j] == VariableKind::integer && !has_whole_number(lower_[j], upper_[j]))
      throw std::invalid_argument("SearchDomain: integer dimension " + std::to_string(j) +
                                  " contains no whole number");
  }
}

SearchDomain::SearchDomain(std::vector<double> lower, std::vector<double> upper)
  : SearchDomain(lower, upper, std::vector<VariableKind>(lower.size(), VariableKind::continuous))
{}

SearchDomain SearchDomain::uniform(std::size_t dims, double lower, double upper, VariableKind kind)
{
  return SearchDomain(std::vector<double>(dims, lower), std::vector<double>(dims, upper),
                      std::vector<VariableKind>(dims, kind));
}

bool SearchDomain::contains(std::span<const double> x) const noexcept
{
  if (x.size() != dims())
    return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] >= lower_[j] && x[j] <= upper_[j]))
      return false;
    if (kinds_[j] == VariableKind::integer && x[j] != std::round(x[j]))
      return false;
  }
  return true;
}

void PssParams::validate() const
{
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("PssParams: alpha must lie in [0, 1]");
  if (beta < 1)
    throw std::invalid_argument("PssParams: beta (population size) must be at least 1");
  if (gamma < 1)
    throw std::invalid_argument("PssParams: gamma (iteration budget) must be at least 1");
}

bool operator==(const PssParams& a, const PssParams& b) noexcept
{
  return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
}

bool operator==(const RunRecord& a, const RunRecord& b) noexcept
{
  return a.seed == b.seed && a.params == b.params && a.history == b.history && a.final_best == b.final_best &&
         a.evaluations == b.evaluations;
}

double quantize(double value, VariableKind kind, double lower, double upper)
{
  if (kind == VariableKind::continuous)
    return value;
  const double lo = std::ceil(lower);
  const double hi = std::floor(upper);
  if (lo > hi)
    throw std::domain_error("quantize: no whole number inside [" + std::to_string(lower) + ", " +
                            std::to_string(upper) + "]");
  return std::clamp(std::round(value), lo, hi);
}

std::vector<double> compute_bandwidth(const PssParams& params, std::size_t iteration, const SearchDomain& domain)
{
  if (iteration > params.gamma)
    throw std::invalid_argument("compute_bandwidth: iteration " + std::to_string(iteration) +
                                " exceeds the budget " + std::to_string(params.gamma));
  const double remaining = 1.0 - static_cast<double>(iteration) / static_cast<double>(params.gamma);
  const double scale = (1.0 - params.alpha) * remaining / 2.0;

  std::vector<double> eta(domain.dims());
  for (std::size_t j = 0; j < eta.size(); ++j)
    eta[j] = std::max(0.0, scale * domain.range(j));
  return eta;
}

ProminentRegion update_prominent_region(std::span<const double> best_x, std::span<const double> eta,
                                        const SearchDomain& domain)
{
  const std::size_t n = domain.dims();
  if (best_x.size() != n || eta.size() != n)
    throw std::invalid_argument("update_prominent_region: dimension mismatch");
  for (std::size_t j = 0; j < n; ++j)
    if (!(best_x[j] >= domain.lower()[j] && best_x[j] <= domain.upper()[j]))
      throw std::invalid_argument("update_prominent_region: incumbent lies outside the domain in dimension " +
                                  std::to_string(j));

  ProminentRegion region;
  region.lower.resize(n);
  region.upper.resize(n);
  region.eta.assign(eta.begin(), eta.end());
  region.center.assign(best_x.begin(), best_x.end());
  for (std::size_t j = 0; j < n; ++j) {
    region.lower[j] = std::max(domain.lower()[j], best_x[j] - eta[j]);
    region.upper[j] = std::min(domain.upper()[j], best_x[j] + eta[j]);
  }
  return region;
}

double sample_feature(std::size_t j, const ProminentRegion& region, const SearchDomain& domain, double u,
                      double r, double alpha)
{
  const double lo = domain.lower()[j];
  const double hi = domain.upper()[j];
  const double value =
    r <= alpha ? scale_to_interval(u, region.lower[j], region.upper[j]) : scale_to_interval(u, lo, hi);
  return quantize(value, domain.kinds()[j], lo, hi);
}

std::vector<std::vector<double>> initialize_population(const SearchDomain& domain, const PssParams& params,
                                                       RandomStream& stream)
{
  MonteCarloSampler sampler;
  return initialize_population(domain, params, stream, sampler);
}

std::vector<std::vector<double>> initialize_population(const SearchDomain& domain, const PssParams& params,
                                                       RandomStream& stream, Sampler& sampler)
{
  params.validate();
  const std::size_t n = domain.dims();
  const CoefficientMatrix u = sampler.sample(stream, params.beta, n);

  std::vector<std::vector<double>> population(params.beta, std::vector<double>(n));
  for (std::size_t k = 0; k < params.beta; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const double lo = domain.lower()[j];
      const double hi = domain.upper()[j];
      population[k][j] = quantize(scale_to_interval(u(k, j), lo, hi), domain.kinds()[j], lo, hi);
    }
  return population;
}

Generation build_generation(const SearchDomain& domain, const ProminentRegion& region, double alpha,
                            const CoefficientMatrix& coefficients, const CoefficientMatrix& acceptance)
{
  const std::size_t n = domain.dims();
  if (coefficients.cols() != n || acceptance.cols() != n || acceptance.rows() != coefficients.rows())
    throw std::invalid_argument("build_generation: matrix shape does not match the domain");

  Generation gen;
  gen.points.assign(coefficients.rows(), std::vector<double>(n));
  for (std::size_t k = 0; k < coefficients.rows(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const double r = acceptance(k, j);
      if (r > alpha)
        ++gen.from_domain;
      gen.points[k][j] = sample_feature(j, region, domain, coefficients(k, j), r, alpha);
    }
  return gen;
}

std::vector<double> evaluate_population(const Objective& objective, const std::vector<std::vector<double>>& points,
                                        Execution execution)
{
  const std::size_t count = points.size();
  std::vector<double> fitness(count);
  std::vector<std::exception_ptr> failures(count);

  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k) {
      try {
        fitness[k] = objective(points[k]);
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      try {
        fitness[k] = objective(points[k]);
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  }

  for (std::size_t k = 0; k < count; ++k) {
    if (failures[k])
      std::rethrow_exception(failures[k]);
    if (std::isnan(fitness[k]))
      throw EvaluationError("objective returned NaN at " + format_point(points[k]), points[k]);
  }
  return fitness;
}

std::size_t argmin_fitness(std::span<const double> fitness)
{
  if (fitness.empty())
    throw std::invalid_argument("argmin_fitness: empty input");
  std::size_t best = 0;
  for (std::size_t k = 1; k < fitness.size(); ++k)
    if (fitness[k] < fitness[best])
      best = k;
  return best;
}

RunRecord run(const Objective& objective, const SearchDomain& domain, const PssParams& params, std::uint64_t seed,
              const RunOptions& options)
{
  params.validate();
  if (!objective)
    throw std::invalid_argument("run: empty objective");

  RandomStream stream(seed);
  const auto sampler = make_sampler(options.sampling);
  const std::size_t n = domain.dims();

  RunRecord record;
  record.seed = seed;
  record.params = params;
  record.history.reserve(params.gamma + 1);

  auto population = initialize_population(domain, params, stream, *sampler);
  auto fitness = evaluate_population(objective, population, options.evaluation);
  record.evaluations = params.beta;

  std::size_t k_best = argmin_fitness(fitness);
  Candidate best{population[k_best], fitness[k_best]};
  record.history.push_back({0, best.fitness, best.x});
  if (options.progress)
    options.progress(0, best.fitness);

  // improved == the previous generation produced a new incumbent
  bool improved = true;
  ProminentRegion region;

  for (std::size_t i = 1; i <= params.gamma; ++i) {
    if (improved || options.retighten_on_stall)
      region = update_prominent_region(best.x, compute_bandwidth(params, i, domain), domain);

    const CoefficientMatrix u = sampler->sample(stream, params.beta, n);
    const CoefficientMatrix r = uniform_matrix(stream, params.beta, n);
    Generation gen = build_generation(domain, region, params.alpha, u, r);

    fitness = evaluate_population(objective, gen.points, options.evaluation);
    record.evaluations += params.beta;

    k_best = argmin_fitness(fitness);
    improved = fitness[k_best] < best.fitness;
    if (improved)
      best = Candidate{std::move(gen.points[k_best]), fitness[k_best]};

    record.history.push_back({i, best.fitness, best.x});
    if (options.progress)
      options.progress(i, best.fitness);
  }

  record.final_best = std::move(best);
  return record;
}

}  // namespace pss
