#ifndef PSS_TESTS_PROPERTIES_HPP
#define PSS_TESTS_PROPERTIES_HPP

// Randomized invariant checks shared by the unit suite and the acceptance
// runner. Each returns an empty string on success, otherwise a description
// of the first counterexample.

#include <cmath>
#include <sstream>
#include <string>

#include "pss/core.hpp"
#include "pss/objectives.hpp"

namespace props
{

struct Trial
{
  pss::SearchDomain domain;
  pss::PssParams params;
  std::uint64_t seed;
};

// Random mixed continuous/integer box, alpha, beta, gamma.
inline Trial random_trial(pss::RandomStream& s)
{
  const std::size_t n = 1 + static_cast<std::size_t>(s.uniform() * 6);
  std::vector<double> lo(n), hi(n);
  std::vector<pss::VariableKind> kinds(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double centre = (s.uniform() - 0.5) * 2000;
    const double width = std::pow(10.0, s.uniform() * 6 - 3);
    const bool integer = s.uniform() < 0.3;
    lo[j] = centre - width;
    hi[j] = centre + width;
    if (integer) {
      lo[j] = std::floor(lo[j]);
      hi[j] = std::max(std::ceil(hi[j]), lo[j]);
    }
    if (s.uniform() < 0.05)
      hi[j] = lo[j];
    kinds[j] = integer ? pss::VariableKind::integer : pss::VariableKind::continuous;
  }
  pss::PssParams p;
  p.alpha = s.uniform() < 0.1 ? (s.uniform() < 0.5 ? 0.0 : 1.0) : s.uniform();
  p.beta = 1 + static_cast<std::size_t>(s.uniform() * 40);
  p.gamma = 1 + static_cast<std::size_t>(s.uniform() * 60);
  return {pss::SearchDomain(lo, hi, kinds), p, static_cast<std::uint64_t>(s.uniform() * 1e15)};
}

// A rugged objective whose shape depends on the trial.
inline pss::Objective bumpy(std::size_t shift)
{
  return [shift](std::span<const double> x) {
    double f = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
      f += std::abs(x[j] - double(shift % 97)) + 10 * std::sin(x[j] * 0.37 + double(j));
    return f;
  };
}

inline std::string describe(const Trial& t)
{
  std::ostringstream os;
  os << "n=" << t.domain.dims() << " alpha=" << t.params.alpha << " beta=" << t.params.beta
     << " gamma=" << t.params.gamma << " seed=" << t.seed;
  return os.str();
}

inline std::string region_clipping(pss::RandomStream& s, int trials)
{
  for (int k = 0; k < trials; ++k) {
    const Trial t = random_trial(s);
    const auto& d = t.domain;
    std::vector<double> x(d.dims());
    for (std::size_t j = 0; j < d.dims(); ++j)
      x[j] = d.lower()[j] + s.uniform() * d.range(j);
    const std::size_t i = static_cast<std::size_t>(s.uniform() * double(t.params.gamma + 1));
    const auto eta = pss::compute_bandwidth(t.params, i, d);
    const auto r = pss::update_prominent_region(x, eta, d);
    for (std::size_t j = 0; j < d.dims(); ++j)
      if (!(d.lower()[j] <= r.lower[j] && r.lower[j] <= r.upper[j] && r.upper[j] <= d.upper()[j] && eta[j] >= 0))
        return "clipping violated: " + describe(t);
  }
  return {};
}

inline std::string bandwidth_decay(pss::RandomStream& s, int trials)
{
  for (int k = 0; k < trials; ++k) {
    const Trial t = random_trial(s);
    const auto& d = t.domain;
    const auto first = pss::compute_bandwidth(t.params, 0, d);
    std::vector<double> prev = first;
    for (std::size_t i = 0; i <= t.params.gamma; ++i) {
      const auto eta = pss::compute_bandwidth(t.params, i, d);
      for (std::size_t j = 0; j < d.dims(); ++j) {
        const double linear = first[j] * (1.0 - double(i) / double(t.params.gamma));
        if (eta[j] > prev[j] || std::abs(eta[j] - linear) > 1e-12 * (1 + first[j]))
          return "bandwidth not linear and non-increasing: " + describe(t);
      }
      prev = eta;
    }
    for (double v : pss::compute_bandwidth(t.params, t.params.gamma, d))
      if (v != 0.0)
        return "bandwidth not zero at the last iteration: " + describe(t);
  }
  return {};
}

// Monotone history plus feasibility of every evaluated point.
inline std::string run_invariants(pss::RandomStream& s, int trials)
{
  for (int k = 0; k < trials; ++k) {
    const Trial t = random_trial(s);
    const auto f = bumpy(static_cast<std::size_t>(t.seed));
    std::size_t infeasible = 0;
    std::size_t evaluated = 0;
    const pss::Objective watched = [&](std::span<const double> x) {
      ++evaluated;
      if (!t.domain.contains(x))
        ++infeasible;
      return f(x);
    };
    const auto rec = pss::run(watched, t.domain, t.params, t.seed);
    if (infeasible > 0)
      return "infeasible candidate evaluated: " + describe(t);
    if (evaluated != rec.evaluations || rec.evaluations != t.params.beta * (t.params.gamma + 1))
      return "evaluation count mismatch: " + describe(t);
    if (rec.history.size() != t.params.gamma + 1)
      return "history length mismatch: " + describe(t);
    for (std::size_t i = 1; i < rec.history.size(); ++i)
      if (rec.history[i].best_fitness > rec.history[i - 1].best_fitness)
        return "best-so-far increased: " + describe(t);
    if (!t.domain.contains(rec.final_best.x))
      return "final incumbent infeasible: " + describe(t);
  }
  return {};
}

inline std::string determinism(pss::RandomStream& s, int trials)
{
  for (int k = 0; k < trials; ++k) {
    const Trial t = random_trial(s);
    const auto f = bumpy(static_cast<std::size_t>(t.seed));
    pss::RunOptions par;
    par.evaluation = pss::Execution::parallel;
    const auto a = pss::run(f, t.domain, t.params, t.seed);
    if (!(a == pss::run(f, t.domain, t.params, t.seed)) || !(a == pss::run(f, t.domain, t.params, t.seed, par)))
      return "run not reproducible: " + describe(t);
  }
  return {};
}

// Components drawn from the full domain in one generation ~ Binomial(beta*n, 1-alpha).
inline std::string acceptance_fraction(pss::RandomStream& s, int trials)
{
  for (int k = 0; k < trials; ++k) {
    const std::size_t n = 3 + static_cast<std::size_t>(s.uniform() * 20);
    const std::size_t beta = 900 / n + 1 + static_cast<std::size_t>(s.uniform() * 50);
    const double alpha = 0.05 + 0.9 * s.uniform();
    const auto d = pss::SearchDomain::uniform(n, -1, 1);
    const auto region = pss::update_prominent_region(std::vector<double>(n, 0.0), std::vector<double>(n, 0.1), d);
    const auto u = pss::uniform_matrix(s, beta, n);
    const auto r = pss::uniform_matrix(s, beta, n);
    const auto gen = pss::build_generation(d, region, alpha, u, r);

    const double m = double(beta * n);
    const double frac = double(gen.from_domain) / m;
    const double sigma = std::sqrt(alpha * (1 - alpha) / m);
    if (std::abs(frac - (1 - alpha)) > 4 * sigma) {
      std::ostringstream os;
      os << "acceptance fraction " << frac << " vs " << 1 - alpha << " (beta*n=" << m << ")";
      return os.str();
    }
    // cross-check the counter against the points themselves
    std::size_t outside = 0;
    for (const auto& x : gen.points)
      for (double v : x)
        outside += (v < -0.1 || v > 0.1);
    if (outside > gen.from_domain)
      return "points outside the region exceed the full-domain count";
  }
  return {};
}

}  // namespace props

#endif
