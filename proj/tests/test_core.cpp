#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oracle.hpp"
#include "pss/core.hpp"
#include "pss/errors.hpp"
#include "pss/objectives.hpp"

using namespace pss;

namespace
{

double sphere(std::span<const double> x)
{
  double s = 0.0;
  for (double v : x)
    s += v * v;
  return s;
}

ProminentRegion region_1d(double lo, double hi)
{
  return ProminentRegion{{lo}, {hi}, {(hi - lo) / 2}, {(lo + hi) / 2}};
}

}  // namespace

TEST_SUITE("core")
{
  TEST_CASE("domain validation")
  {
    CHECK_THROWS_AS(SearchDomain({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SearchDomain({0, 0}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(SearchDomain({2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(SearchDomain({0}, {INFINITY}), std::invalid_argument);
    CHECK_THROWS_AS(SearchDomain({0.2}, {0.8}, {VariableKind::integer}), std::invalid_argument);
    CHECK_NOTHROW(SearchDomain({3}, {3}));
  }

  TEST_CASE("params validation")
  {
    CHECK_NOTHROW(PssParams{}.validate());
    CHECK_THROWS_AS((PssParams{1.5, 30, 10}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PssParams{-0.1, 30, 10}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PssParams{0.9, 0, 10}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PssParams{0.9, 30, 0}.validate()), std::invalid_argument);
  }

  TEST_CASE("initial population")
  {
    SUBCASE("degenerate domain gives the zero vector")
    {
      RandomStream s(1);
      const auto pop = initialize_population(SearchDomain::uniform(4, 0, 0), PssParams{0.95, 7, 5}, s);
      CHECK(pop.size() == 7);
      for (const auto& x : pop)
        CHECK(x == std::vector<double>(4, 0.0));
      CHECK(s.position() == 28);
    }
    SUBCASE("thirty points inside the Schwefel box")
    {
      RandomStream s(2);
      const auto d = SearchDomain::uniform(2, -500, 500);
      const auto pop = initialize_population(d, PssParams{0.95, 30, 20}, s);
      CHECK(pop.size() == 30);
      for (const auto& x : pop)
        CHECK(d.contains(x));
    }
    SUBCASE("same seed, same population")
    {
      RandomStream a(9), b(9);
      const auto d = SearchDomain::uniform(3, -1, 1);
      CHECK(initialize_population(d, PssParams{}, a) == initialize_population(d, PssParams{}, b));
    }
  }

  TEST_CASE("bandwidth")
  {
    const auto d = SearchDomain::uniform(2, -500, 500);
    const auto eta = compute_bandwidth(PssParams{0.95, 30, 20}, 10, d);
    CHECK(eta[0] == doctest::Approx(0.05 * 0.5 / 2 * 1000));
    CHECK(eta[0] == doctest::Approx(12.5));
    CHECK(compute_bandwidth(PssParams{0.95, 30, 20}, 20, d) == std::vector<double>{0, 0});
    CHECK(compute_bandwidth(PssParams{1.0, 30, 20}, 3, d) == std::vector<double>{0, 0});
    CHECK_THROWS_AS(compute_bandwidth(PssParams{0.95, 30, 20}, 21, d), std::invalid_argument);
  }

  TEST_CASE("prominent region")
  {
    const auto d = SearchDomain::uniform(1, -500, 500);
    const std::vector<double> eta{12.5};

    const auto r = update_prominent_region(std::vector<double>{420.9687}, eta, d);
    CHECK(r.lower[0] == doctest::Approx(408.4687));
    CHECK(r.upper[0] == doctest::Approx(433.4687));
    CHECK(r.center[0] == 420.9687);

    const auto clipped = update_prominent_region(std::vector<double>{495}, eta, d);
    CHECK(clipped.upper[0] == 500);
    CHECK(clipped.lower[0] == 482.5);

    const auto point = update_prominent_region(std::vector<double>{7}, std::vector<double>{0}, d);
    CHECK(point.lower[0] == 7);
    CHECK(point.upper[0] == 7);

    CHECK_THROWS_AS(update_prominent_region(std::vector<double>{501}, eta, d), std::invalid_argument);
    CHECK_THROWS_AS(update_prominent_region(std::vector<double>{1, 2}, eta, d), std::invalid_argument);
  }

  TEST_CASE("sample_feature")
  {
    const auto d = SearchDomain::uniform(1, -500, 500);
    const auto region = update_prominent_region(std::vector<double>{420.9687}, std::vector<double>{12.5}, d);

    CHECK(sample_feature(0, region, d, 0.5, 0.0, 0.95) == doctest::Approx(420.9687));
    CHECK(sample_feature(0, region, d, 0.5, 0.99, 0.95) == 0.0);
    CHECK(sample_feature(0, region, d, 0.5, 0.999, 1.0) == doctest::Approx(420.9687));
    // r == alpha still picks the prominent region
    CHECK(sample_feature(0, region, d, 0.0, 0.95, 0.95) == doctest::Approx(408.4687));

    const SearchDomain di({12}, {60}, {VariableKind::integer});
    CHECK(sample_feature(0, region_1d(15.0, 17.0), di, 0.7, 0.0, 0.9) == 16.0);
  }

  TEST_CASE("quantize")
  {
    CHECK(quantize(16.4, VariableKind::integer, 12, 60) == 16);
    CHECK(quantize(3.7, VariableKind::continuous, 0, 10) == 3.7);
    CHECK(quantize(11.9, VariableKind::integer, 12, 60) == 12);
    CHECK(quantize(60.4, VariableKind::integer, 11.5, 60.2) == 60);
    CHECK(quantize(11.6, VariableKind::integer, 11.5, 60.2) == 12);
    CHECK_THROWS_AS(quantize(0.5, VariableKind::integer, 0.2, 0.8), std::domain_error);
  }

  TEST_CASE("evaluate_population")
  {
    const std::vector<std::vector<double>> pts{{1, 2}, {0, 0}, {3, 0}};
    const auto serial = evaluate_population(sphere, pts, Execution::serial);
    CHECK(serial == std::vector<double>{5, 0, 9});
    CHECK(evaluate_population(sphere, pts, Execution::parallel) == serial);

    const Objective nan_at_3 = [](std::span<const double> x) { return x[0] == 3 ? std::nan("") : 1.0; };
    for (auto ex : {Execution::serial, Execution::parallel}) {
      try {
        evaluate_population(nan_at_3, pts, ex);
        FAIL("expected EvaluationError");
      } catch (const EvaluationError& e) {
        CHECK(e.point() == std::vector<double>{3, 0});
      }
    }

    const Objective inf = [](std::span<const double>) { return std::numeric_limits<double>::infinity(); };
    CHECK(std::isinf(evaluate_population(inf, pts)[0]));
  }

  TEST_CASE("argmin keeps the lowest index on ties")
  {
    CHECK(argmin_fitness(std::vector<double>{3, 1, 1, 2}) == 1);
    CHECK(argmin_fitness(std::vector<double>{INFINITY, INFINITY}) == 0);
    CHECK_THROWS_AS(argmin_fitness(std::vector<double>{}), std::invalid_argument);
  }

  TEST_CASE("run: record shape and determinism")
  {
    const auto d = SearchDomain::uniform(3, -5, 5);
    const PssParams p{0.9, 12, 40};
    const RunRecord a = run(sphere, d, p, 77);
    const RunRecord b = run(sphere, d, p, 77);
    CHECK(a == b);
    CHECK(a.history.size() == 41);
    CHECK(a.evaluations == 12 * 41);
    CHECK(a.history.back().best_fitness == a.final_best.fitness);
    CHECK(a.history.back().best_x == a.final_best.x);
    for (std::size_t i = 0; i < a.history.size(); ++i)
      CHECK(a.history[i].iteration == i);
    CHECK_FALSE(run(sphere, d, p, 78) == a);
  }

  TEST_CASE("run matches the straight-line oracle bit for bit")
  {
    const auto f_sphere = [](const std::vector<double>& x) { return sphere(x); };
    const auto f_schwefel = [](const std::vector<double>& x) { return evaluate("schwefel", x); };
    const auto f_gear = [](const std::vector<double>& x) {
      const double t = 1.0 / 6.931 - x[1] * x[2] / (x[0] * x[3]);
      return t * t;
    };

    struct Case
    {
      std::function<double(const std::vector<double>&)> f;
      oracle::Box box;
      PssParams p;
      bool retighten;
    };
    const Case cases[] = {
      {f_sphere, {{-5, -1, 0}, {5, 3, 0}, {false, false, false}}, {0.9, 10, 25}, false},
      {f_schwefel, {{-500, -500}, {500, 500}, {false, false}}, {0.95, 30, 20}, false},
      {f_schwefel, {{-500, -500}, {500, 500}, {false, false}}, {0.7, 30, 20}, true},
      {f_gear, {{12, 12, 12, 12}, {60, 60, 60, 60}, {true, true, true, true}}, {0.95, 30, 60}, false},
    };

    for (const auto& c : cases) {
      std::vector<VariableKind> kinds;
      for (bool i : c.box.integer)
        kinds.push_back(i ? VariableKind::integer : VariableKind::continuous);
      const SearchDomain d(c.box.lo, c.box.hi, kinds);
      RunOptions opt;
      opt.retighten_on_stall = c.retighten;
      for (std::uint64_t seed : {0ull, 5ull, 1234567ull}) {
        const auto rec = run([&](std::span<const double> x) { return c.f({x.begin(), x.end()}); }, d, c.p, seed,
                             opt);
        const auto ref = oracle::run(c.f, c.box, c.p.alpha, c.p.beta, c.p.gamma, seed, c.retighten);
        REQUIRE(rec.history.size() == ref.best_per_iteration.size());
        for (std::size_t i = 0; i < ref.best_per_iteration.size(); ++i)
          CHECK(rec.history[i].best_fitness == ref.best_per_iteration[i]);
        CHECK(rec.final_best.x == ref.final_x);
        CHECK(rec.final_best.fitness == ref.final_f);
      }
    }
  }

  TEST_CASE("run: parallel evaluation matches serial")
  {
    const auto d = SearchDomain::uniform(5, -10, 10);
    RunOptions par;
    par.evaluation = Execution::parallel;
    CHECK(run(sphere, d, PssParams{0.95, 30, 30}, 3) == run(sphere, d, PssParams{0.95, 30, 30}, 3, par));
  }

  TEST_CASE("run: NaN aborts with the offending point")
  {
    const auto d = SearchDomain::uniform(2, -1, 1);
    int calls = 0;
    const Objective f = [&](std::span<const double> x) {
      return ++calls == 45 ? std::nan("") : x[0];
    };
    try {
      run(f, d, PssParams{0.9, 10, 10}, 1);
      FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
      CHECK(e.point().size() == 2);
      CHECK(d.contains(e.point()));
    }
  }

  TEST_CASE("run: infinite fitness is a legal value")
  {
    const auto d = SearchDomain::uniform(1, -1, 1);
    const Objective f = [](std::span<const double> x) {
      return x[0] < 0.5 ? std::numeric_limits<double>::infinity() : x[0];
    };
    const auto rec = run(f, d, PssParams{0.9, 10, 20}, 4);
    CHECK(rec.final_best.fitness >= 0.5);
    CHECK(rec.final_best.fitness < 1.0);
  }

  TEST_CASE("run: progress callback sees every iteration")
  {
    std::vector<std::size_t> seen;
    RunOptions opt;
    opt.progress = [&](std::size_t i, double) { seen.push_back(i); };
    run(sphere, SearchDomain::uniform(2, -1, 1), PssParams{0.9, 5, 8}, 0, opt);
    CHECK(seen == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  }

  TEST_CASE("run: bad arguments")
  {
    const auto d = SearchDomain::uniform(1, -1, 1);
    CHECK_THROWS_AS(run(Objective{}, d, PssParams{}, 0), std::invalid_argument);
    CHECK_THROWS_AS(run(sphere, d, PssParams{0.9, 0, 3}, 0), std::invalid_argument);
    RunOptions lhs;
    lhs.sampling = SamplingMethod::latin_hypercube;
    CHECK_THROWS_AS(run(sphere, d, PssParams{}, 0, lhs), std::logic_error);
  }
}
