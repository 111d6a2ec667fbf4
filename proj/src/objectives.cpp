#include "pss/objectives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pss/errors.hpp"

namespace pss
{

namespace
{

using std::numbers::pi;

double sphere(std::span<const double> x)
{
  double s = 0.0;
  for (double v : x)
    s += v * v;
  return s;
}

double sum_squares(std::span<const double> x)
{
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += static_cast<double>(i + 1) * x[i] * x[i];
  return s;
}

double chung_reynolds(std::span<const double> x)
{
  const double s = sphere(x);
  return s * s;
}

double schwefel_2_21(std::span<const double> x)
{
  double m = 0.0;
  for (double v : x)
    m = std::max(m, std::abs(v));
  return m;
}

double schwefel_2_22(std::span<const double> x)
{
  double s = 0.0;
  double p = 1.0;
  for (double v : x) {
    s += std::abs(v);
    p *= std::abs(v);
  }
  return s + p;
}

// n-1 terms; the last variable only enters through its predecessor's term
double rosenbrock(std::span<const double> x)
{
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double trid(std::span<const double> x)
{
  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s1 += (x[i] - 1.0) * (x[i] - 1.0);
    if (i > 0)
      s2 += x[i] * x[i - 1];
  }
  return s1 - s2;
}

double zakharov(std::span<const double> x)
{
  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s1 += x[i] * x[i];
    s2 += 0.5 * static_cast<double>(i + 1) * x[i];
  }
  const double s2sq = s2 * s2;
  return s1 + s2sq + s2sq * s2sq;
}

double griewank(std::span<const double> x)
{
  double s = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i] / 4000.0;
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + s - p;
}

double ackley(std::span<const double> x)
{
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

constexpr double schwefel_constant = 418.9829;

double schwefel_sum(std::span<const double> x)
{
  double s = 0.0;
  for (double v : x)
    s += v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

double schwefel(std::span<const double> x)
{
  return schwefel_constant * static_cast<double>(x.size()) - schwefel_sum(x);
}

double schwefel_shifted(std::span<const double> x) { return -schwefel_sum(x); }

// Table form: no amplitude factor on the cosine terms.
double shubert(std::span<const double> x)
{
  double p = 1.0;
  for (double v : x) {
    double s = 0.0;
    for (int j = 1; j <= 5; ++j)
      s += std::cos((j + 1) * v + j);
    p *= s;
  }
  return p;
}

double six_hump_camel(std::span<const double> x)
{
  const double a = x[0];
  const double b = x[1];
  return (4.0 - 2.1 * a * a + a * a * a * a / 3.0) * a * a + a * b + (-4.0 + 4.0 * b * b) * b * b;
}

double goldstein_price(std::span<const double> x)
{
  const double a = x[0];
  const double b = x[1];
  const double t1 = a + b + 1.0;
  const double t2 = 2.0 * a - 3.0 * b;
  const double f1 = 1.0 + t1 * t1 * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
  const double f2 = 30.0 + t2 * t2 * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
  return f1 * f2;
}

// Shekel's foxholes: a 5x5 lattice of holes at {-32,-16,0,16,32}^2.
double dejong5(std::span<const double> x)
{
  constexpr std::array<double, 5> grid{-32.0, -16.0, 0.0, 16.0, 32.0};
  double s = 1.0 / 500.0;
  for (int j = 0; j < 25; ++j) {
    const double d1 = x[0] - grid[j % 5];
    const double d2 = x[1] - grid[j / 5];
    const double d1_3 = d1 * d1 * d1;
    const double d2_3 = d2 * d2 * d2;
    s += 1.0 / (j + 1 + d1_3 * d1_3 + d2_3 * d2_3);
  }
  return 1.0 / s;
}

double hartmann3(std::span<const double> x)
{
  constexpr std::array<double, 4> alpha{1.0, 1.2, 3.0, 3.2};
  constexpr double A[4][3] = {{3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}};
  constexpr double P[4][3] = {{0.3689, 0.1170, 0.2673},
                              {0.4699, 0.4387, 0.7470},
                              {0.1091, 0.8732, 0.5547},
                              {0.0381, 0.5743, 0.8828}};
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    double e = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double d = x[j] - P[i][j];
      e += A[i][j] * d * d;
    }
    s += alpha[i] * std::exp(-e);
  }
  return -s;
}

std::function<std::optional<double>(std::size_t)> constant_optimum(double value)
{
  return [value](std::size_t) -> std::optional<double> { return value; };
}

std::function<std::optional<std::vector<double>>(std::size_t)> repeated_point(double value)
{
  return [value](std::size_t n) -> std::optional<std::vector<double>> { return std::vector<double>(n, value); };
}

std::function<std::optional<std::vector<double>>(std::size_t)> fixed_point(std::vector<double> point)
{
  return [point](std::size_t) -> std::optional<std::vector<double>> { return point; };
}

std::vector<ObjectiveSpec> build_registry()
{
  // Schwefel's minimizer to ten digits; 420.9687 is the customary rounding.
  constexpr double schwefel_x = 420.96874691;

  std::vector<ObjectiveSpec> r;
  r.push_back({"sphere", "Sphere", {}, 1, -100, 100, {}, sphere, constant_optimum(0.0), repeated_point(0.0)});
  r.push_back(
    {"sum_squares", "Sum squares", {}, 1, -10, 10, {}, sum_squares, constant_optimum(0.0), repeated_point(0.0)});
  r.push_back({"chung_reynolds", "Chung Reynolds", {}, 1, -100, 100, {}, chung_reynolds, constant_optimum(0.0),
               repeated_point(0.0)});
  r.push_back({"schwefel_2_21", "Schwefel 2.21", {}, 1, -100, 100, {}, schwefel_2_21, constant_optimum(0.0),
               repeated_point(0.0)});
  r.push_back({"schwefel_2_22", "Schwefel 2.22", {}, 1, -10, 10, {}, schwefel_2_22, constant_optimum(0.0),
               repeated_point(0.0)});
  r.push_back(
    {"rosenbrock", "Rosenbrock", {}, 2, -30, 30, {}, rosenbrock, constant_optimum(0.0), repeated_point(1.0)});

  // Trid: domain [-n^2, n^2], minimum -n(n+4)(n-1)/6 at x_i = i(n+1-i)
  ObjectiveSpec t{"trid", "Trid", {}, 2, 0, 0, {}, trid};
  t.bounds_for = [](std::size_t n) {
    const double b = static_cast<double>(n * n);
    return std::pair{-b, b};
  };
  t.optimum_value = [](std::size_t n) -> std::optional<double> {
    const double d = static_cast<double>(n);
    return -d * (d + 4.0) * (d - 1.0) / 6.0;
  };
  t.optimum_point = [](std::size_t n) -> std::optional<std::vector<double>> {
    std::vector<double> p(n);
    for (std::size_t i = 1; i <= n; ++i)
      p[i - 1] = static_cast<double>(i * (n + 1 - i));
    return p;
  };
  r.push_back(std::move(t));

  r.push_back({"zakharov", "Zakharov", {}, 1, -5, 10, {}, zakharov, constant_optimum(0.0), repeated_point(0.0)});
  r.push_back(
    {"griewank", "Griewank", {}, 1, -600, 600, {}, griewank, constant_optimum(0.0), repeated_point(0.0)});
  r.push_back({"ackley", "Ackley", {}, 1, -32, 32, {}, ackley, constant_optimum(0.0), repeated_point(0.0)});

  ObjectiveSpec s{"schwefel", "Schwefel", {}, 1, -500, 500, {}, schwefel, constant_optimum(0.0),
                  repeated_point(schwefel_x)};
  s.precision_per_dim = 5e-5;
  r.push_back(std::move(s));

  ObjectiveSpec ss{"schwefel_shifted", "Schwefel (shifted, min -418.9829n)", {}, 1, -500, 500, {}, schwefel_shifted};
  ss.optimum_value = [](std::size_t n) -> std::optional<double> {
    return -schwefel_constant * static_cast<double>(n);
  };
  ss.optimum_point = repeated_point(schwefel_x);
  ss.precision_per_dim = 5e-5;
  r.push_back(std::move(ss));

  // no published optimum for the table form (see shubert())
  r.push_back({"shubert", "Shubert", {}, 1, -10, 10, {}, shubert, [](std::size_t) { return std::optional<double>{}; },
               [](std::size_t) { return std::optional<std::vector<double>>{}; }});

  ObjectiveSpec camel{"six_hump_camel", "Six-hump camel", 2, 2, -5, 5, {}, six_hump_camel, constant_optimum(-1.0316),
                      fixed_point({0.08984201368301331, -0.7126564032704135})};
  camel.published_precision = 5e-5;
  r.push_back(std::move(camel));

  r.push_back({"goldstein", "Goldstein-Price", 2, 2, -2, 2, {}, goldstein_price, constant_optimum(3.0),
               fixed_point({0.0, -1.0})});

  ObjectiveSpec dj{"dejong5", "De Jong 5 (Shekel's foxholes)", 2, 2, -65.536, 65.536, {}, dejong5,
                   constant_optimum(0.998004), fixed_point({-31.97833338, -31.97833401})};
  dj.published_precision = 5e-7;
  r.push_back(std::move(dj));

  ObjectiveSpec h{"hartmann3", "Hartmann 3", 3, 3, 0, 1, {}, hartmann3, constant_optimum(-3.8628),
                  fixed_point({0.11458888, 0.5556489, 0.85254698})};
  h.published_precision = 5e-5;
  r.push_back(std::move(h));

  return r;
}

std::string format_number(double v)
{
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

bool ObjectiveSpec::admits(std::size_t n) const noexcept
{
  if (fixed_dims)
    return n == *fixed_dims;
  return n >= min_dims;
}

SearchDomain ObjectiveSpec::default_domain(std::size_t n) const
{
  if (!admits(n))
    throw std::invalid_argument(id + ": dimension " + std::to_string(n) + " is not admitted");
  if (bounds_for) {
    const auto [lo, hi] = bounds_for(n);
    return SearchDomain::uniform(n, lo, hi);
  }
  return SearchDomain::uniform(n, lower, upper);
}

const std::vector<ObjectiveSpec>& standard_objectives()
{
  static const std::vector<ObjectiveSpec> registry = build_registry();
  return registry;
}

const ObjectiveSpec& find_objective(const std::string& id)
{
  for (const auto& spec : standard_objectives())
    if (spec.id == id)
      return spec;
  throw LookupError("unknown objective '" + id + "'");
}

double evaluate(const std::string& id, std::span<const double> x)
{
  const ObjectiveSpec& spec = find_objective(id);
  if (!spec.admits(x.size()))
    throw std::invalid_argument(id + ": dimension " + std::to_string(x.size()) + " is not admitted");
  return spec.function(x);
}

double true_optimum(const std::string& id, std::size_t n)
{
  const ObjectiveSpec& spec = find_objective(id);
  if (!spec.admits(n))
    throw LookupError(id + ": no optimum for dimension " + std::to_string(n));
  const auto value = spec.optimum_value ? spec.optimum_value(n) : std::nullopt;
  if (!value)
    throw LookupError(id + ": no published optimum");
  return *value;
}

double optimum_tolerance(const ObjectiveSpec& spec, std::size_t n)
{
  double tol = 1e-6;
  if (spec.optimum_value)
    if (auto v = spec.optimum_value(n))
      tol = std::max(tol, 1e-9 * std::abs(*v));
  return std::max(tol, spec.published_precision + spec.precision_per_dim * static_cast<double>(n));
}

ProblemInstance make_problem(const std::string& id, std::optional<std::size_t> dims)
{
  for (const auto& spec : standard_objectives()) {
    if (spec.id != id)
      continue;
    std::size_t n = 0;
    if (spec.fixed_dims) {
      if (dims && *dims != *spec.fixed_dims)
        throw std::invalid_argument(id + " is fixed at " + std::to_string(*spec.fixed_dims) + " dimensions");
      n = *spec.fixed_dims;
    } else {
      if (!dims)
        throw std::invalid_argument(id + " requires an explicit dimension");
      n = *dims;
    }
    if (!spec.admits(n))
      throw std::invalid_argument(id + ": dimension " + std::to_string(n) + " is not admitted");

    ProblemInstance p{id, spec.default_domain(n), spec.function, {}, false, nullptr};
    if (spec.optimum_value)
      p.optimum = spec.optimum_value(n);
    p.optimum_exact = p.optimum && spec.published_precision == 0.0 && spec.precision_per_dim == 0.0;
    return p;
  }

  const ConstrainedProblem& eng = find_engineering_problem(id);
  if (dims && *dims != eng.domain.dims())
    throw std::invalid_argument(id + " is fixed at " + std::to_string(eng.domain.dims()) + " dimensions");
  return ProblemInstance{id, eng.domain, penalized_objective(eng), eng.best_known_value, false, &eng};
}

std::vector<ProblemListing> list_problems()
{
  std::vector<ProblemListing> out;
  for (const auto& spec : standard_objectives()) {
    ProblemListing l;
    l.id = spec.id;
    l.name = spec.name;
    l.dims = spec.fixed_dims ? std::to_string(*spec.fixed_dims) : "n>=" + std::to_string(spec.min_dims);
    if (spec.bounds_for)
      l.bounds = "[-n^2, n^2]";
    else
      l.bounds = "[" + format_number(spec.lower) + ", " + format_number(spec.upper) + "]";
    if (spec.id == "schwefel_shifted")
      l.optimum = "-418.9829*n";
    else if (spec.id == "trid")
      l.optimum = "-n(n+4)(n-1)/6";
    else if (auto v = spec.optimum_value ? spec.optimum_value(spec.fixed_dims.value_or(spec.min_dims))
                                         : std::nullopt)
      l.optimum = format_number(*v);
    else
      l.optimum = "-";
    out.push_back(std::move(l));
  }
  for (const auto& eng : engineering_problems()) {
    // every registered engineering problem uses one interval for all variables
    std::string bounds = "[" + format_number(eng.domain.lower()[0]) + ", " + format_number(eng.domain.upper()[0]) + "]";
    if (eng.domain.kinds()[0] == VariableKind::integer)
      bounds += " integer";
    out.push_back({eng.id, eng.name, std::to_string(eng.domain.dims()), bounds,
                   format_number(eng.best_known_value) + " (best known)"});
  }
  return out;
}

}  // namespace pss
