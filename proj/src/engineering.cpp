// Classical constrained design problems, static-penalty formulation.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pss/errors.hpp"
#include "pss/objectives.hpp"

namespace pss
{

namespace
{

// 0/0 at the corner of the truss domain; treat as infinitely violated
double finite_or_inf(double v) { return std::isnan(v) ? std::numeric_limits<double>::infinity() : v; }

}  // namespace

ConstrainedValue evaluate_constrained(const ConstrainedProblem& problem, std::span<const double> x)
{
  if (x.size() != problem.domain.dims())
    throw std::invalid_argument(problem.id + ": expected " + std::to_string(problem.domain.dims()) +
                                " variables, got " + std::to_string(x.size()));
  ConstrainedValue v;
  v.raw = problem.objective(x);
  for (const auto& g : problem.constraints)
    v.violation += std::max(0.0, finite_or_inf(g(x)));
  v.penalized = v.violation > 0.0 ? v.raw + problem.penalty_multiplier * v.violation : v.raw;
  return v;
}

Objective penalized_objective(const ConstrainedProblem& problem)
{
  return [problem](std::span<const double> x) { return evaluate_constrained(problem, x).penalized; };
}

ConstrainedProblem cantilever_beam()
{
  ConstrainedProblem p{"cantilever", "Cantilever beam", SearchDomain::uniform(5, 0.01, 100.0)};
  p.objective = [](std::span<const double> x) { return 0.0624 * (x[0] + x[1] + x[2] + x[3] + x[4]); };
  p.constraints.push_back([](std::span<const double> x) {
    auto inv_cube = [](double v) { return 1.0 / (v * v * v); };
    return 61.0 * inv_cube(x[0]) + 37.0 * inv_cube(x[1]) + 19.0 * inv_cube(x[2]) + 7.0 * inv_cube(x[3]) +
           inv_cube(x[4]) - 1.0;
  });
  p.best_known_value = 1.33995664399519;
  p.best_known_point = {6.01683010096092, 5.30655187659779, 4.49420948422588, 3.50272928517748, 2.15334341962752};
  return p;
}

ConstrainedProblem gear_train()
{
  ConstrainedProblem p{"gear_train", "Gear train", SearchDomain::uniform(4, 12.0, 60.0, VariableKind::integer)};
  // (1/6.931 - x2 x3 / (x1 x4))^2, unconstrained apart from the integer box
  p.objective = [](std::span<const double> x) {
    const double d = 1.0 / 6.931 - (x[1] * x[2]) / (x[0] * x[3]);
    return d * d;
  };
  p.best_known_value = 2.7009e-12;
  p.best_known_point = {43.0, 19.0, 16.0, 49.0};
  return p;
}

ConstrainedProblem three_bar_truss()
{
  constexpr double length = 100.0;
  constexpr double load = 2.0;
  constexpr double stress = 2.0;
  constexpr double sqrt2 = std::numbers::sqrt2;

  ConstrainedProblem p{"three_bar_truss", "Three-bar truss", SearchDomain::uniform(2, 0.0, 1.0)};
  p.objective = [](std::span<const double> x) { return (2.0 * sqrt2 * x[0] + x[1]) * length; };
  p.constraints.push_back([](std::span<const double> x) {
    return (sqrt2 * x[0] + x[1]) / (sqrt2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * load - stress;
  });
  p.constraints.push_back([](std::span<const double> x) {
    return x[1] / (sqrt2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * load - stress;
  });
  p.constraints.push_back([](std::span<const double> x) { return 1.0 / (sqrt2 * x[1] + x[0]) * load - stress; });
  p.best_known_value = 263.895843501333;
  p.best_known_point = {0.788683438026281, 0.408224806061712};
  return p;
}

const std::vector<ConstrainedProblem>& engineering_problems()
{
  static const std::vector<ConstrainedProblem> problems{cantilever_beam(), gear_train(), three_bar_truss()};
  return problems;
}

const ConstrainedProblem& find_engineering_problem(const std::string& id)
{
  for (const auto& p : engineering_problems())
    if (p.id == id)
      return p;
  throw LookupError("unknown problem '" + id + "'");
}

}  // namespace pss
