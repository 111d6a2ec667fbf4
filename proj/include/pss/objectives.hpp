#ifndef PSS_OBJECTIVES_HPP
#define PSS_OBJECTIVES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pss/core.hpp"

namespace pss
{

/**
 * A registered benchmark landscape.
 *
 * Functions either admit a single dimensionality (`fixed_dims`) or any
 * n >= `min_dims`. The default domain is the same interval on every axis,
 * except where `bounds_for` overrides it (Trid scales with n).
 */
struct ObjectiveSpec
{
  std::string id;
  std::string name;
  std::optional<std::size_t> fixed_dims;
  std::size_t min_dims = 1;
  double lower = 0.0;
  double upper = 0.0;
  std::function<std::pair<double, double>(std::size_t)> bounds_for;

  std::function<double(std::span<const double>)> function;

  /// Published optimum value for dimension n, when one exists.
  std::function<std::optional<double>(std::size_t)> optimum_value;
  /// A minimizer for dimension n, when one is known.
  std::function<std::optional<std::vector<double>>(std::size_t)> optimum_point;

  /// Half a unit in the last published digit of optimum_value (0 when exact).
  double published_precision = 0.0;
  /// Extra per-dimension slack from rounded constants inside the expression.
  double precision_per_dim = 0.0;

  bool admits(std::size_t n) const noexcept;
  SearchDomain default_domain(std::size_t n) const;
};

/// Every Table-style standard function, in registry order.
const std::vector<ObjectiveSpec>& standard_objectives();

/// Throws LookupError for an unknown id.
const ObjectiveSpec& find_objective(const std::string& id);

/// f_id(x). Throws std::invalid_argument when the function does not admit x.size().
double evaluate(const std::string& id, std::span<const double> x);

/// Published optimum. Throws LookupError for an unknown id or when none is published for n.
double true_optimum(const std::string& id, std::size_t n);

/// Acceptable |f(minimizer) - true_optimum| for consistency checks.
double optimum_tolerance(const ObjectiveSpec& spec, std::size_t n);

/// Inequality-constrained design problem, g_k(x) <= 0.
struct ConstrainedProblem
{
  std::string id;
  std::string name;
  SearchDomain domain;
  std::function<double(std::span<const double>)> objective;
  std::vector<std::function<double(std::span<const double>)>> constraints;
  double penalty_multiplier = 1e6;

  /// Best-known design from the literature, used as the error-value reference.
  double best_known_value = 0.0;
  std::vector<double> best_known_point;
};

struct ConstrainedValue
{
  double raw = 0.0;
  double violation = 0.0; ///< sum of max(0, g_k)
  double penalized = 0.0; ///< raw + multiplier * violation
};

ConstrainedValue evaluate_constrained(const ConstrainedProblem& problem, std::span<const double> x);

/// Penalized objective suitable for the run engine.
Objective penalized_objective(const ConstrainedProblem& problem);

ConstrainedProblem cantilever_beam();
/// Integer formulation: four tooth counts in [12, 60].
ConstrainedProblem gear_train();
ConstrainedProblem three_bar_truss();

const std::vector<ConstrainedProblem>& engineering_problems();

/// Throws LookupError for an unknown id.
const ConstrainedProblem& find_engineering_problem(const std::string& id);

/// Anything the batch runner can optimise: a standard function at some n or an engineering problem.
struct ProblemInstance
{
  std::string id;
  SearchDomain domain;
  Objective objective;
  std::optional<double> optimum;
  bool optimum_exact = false;
  const ConstrainedProblem* constrained = nullptr;
};

/**
 * Resolve an id for the runner. `dims` is required for any-n functions and
 * must match for fixed-dimension ones and engineering problems.
 * Throws LookupError (unknown id) or std::invalid_argument (bad dims).
 */
ProblemInstance make_problem(const std::string& id, std::optional<std::size_t> dims);

struct ProblemListing
{
  std::string id;
  std::string name;
  std::string dims;
  std::string bounds;
  std::string optimum;
};

/// Enumerates standard and engineering problems for `--list-problems`.
std::vector<ProblemListing> list_problems();

}  // namespace pss

#endif  // PSS_OBJECTIVES_HPP
