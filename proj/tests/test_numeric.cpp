#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hvapprox/closed_form.hpp"
#include "hvapprox/errors.hpp"
#include "hvapprox/hypervolume.hpp"
#include "hvapprox/numeric.hpp"
#include "test_util.hpp"

using namespace hvapprox;
using hvtest::Rng;

TEST_CASE("fixed-endpoint maximization recovers equal spacing") {
  const Front front = Front::linear(-1, 3);
  const MaximizeResult res =
      maximize_hypervolume(front, 5, {-10, -10}, true);
  const PointSet expected = linear_hyp_dist(-1, 3, 5);
  for (int i = 0; i < 5; ++i)
    CHECK(hvtest::close_abs(res.points[i], expected[i], 1e-6));
  CHECK(res.stationarity <= 1e-5);
}

TEST_CASE("free maximization recovers the geometric distribution") {
  const Front front = Front::reciprocal(2);
  const MaximizeResult res = maximize_hypervolume(front, 4, {0, 0}, false);
  for (int i = 0; i < 4; ++i)
    CHECK(hvtest::close_abs(res.points[i], std::pow(2.0, i / 3.0), 1e-6));
}

TEST_CASE("symmetric quarter-circle at mu=12") {
  const Front front = Front::power(2, 1, 2, 2, 1);
  const MaximizeResult hyp =
      maximize_hypervolume(front, 12, {0, 0}, true);
  CHECK(hvtest::close_abs(ratio(front, hyp.points).delta, 1.025, 0.002));

  const OptimalApproximation app = optimal_approximation(front, 12, true);
  CHECK(hvtest::close_abs(app.delta, 1.021, 0.002));
  CHECK(check_certificate(front, app.points, app.certificate));
}

TEST_CASE("equation system reproduces the linear free optimum") {
  const OptimalApproximation res =
      optimal_approximation(Front::linear(-1, 3), 10, false);
  CHECK(hvtest::close_abs(res.delta, 31.0 / 30, 1e-9));
  for (int i = 1; i <= 10; ++i)
    CHECK(hvtest::close_abs(res.points[i - 1], 3.0 * (10 + i) / 31, 1e-8));
}

TEST_CASE("equation system reproduces the reciprocal free optimum") {
  const OptimalApproximation res =
      optimal_approximation(Front::reciprocal(2), 10, false);
  CHECK(hvtest::close_abs(res.delta, std::pow(2.0, 1.0 / 20), 1e-9));
}

TEST_CASE("single free point on the linear front") {
  const OptimalApproximation res =
      optimal_approximation(Front::linear(-1, 3), 1, false);
  CHECK(hvtest::close_abs(res.delta, 4.0 / 3, 1e-9));
  CHECK(hvtest::close_abs(res.points[0], 1.5, 1e-8));
}

TEST_CASE("solver outputs always carry passing certificates") {
  Rng rng(401);
  for (int trial = 0; trial < 40; ++trial) {
    const Front front = hvtest::random_front(rng);
    const bool fixed = trial % 2 == 0;
    const int mu = rng.uniform_int(fixed ? 2 : 1, 8);
    const OptimalApproximation res =
        optimal_approximation(front, mu, fixed);
    CHECK(check_certificate(front, res.points, res.certificate));
    CHECK(res.delta > 1.0);
  }
}

TEST_CASE("maximizer outputs have vanishing projected gradients") {
  Rng rng(402);
  SolverOptions opts;
  opts.multistart_count = 4;
  for (int trial = 0; trial < 15; ++trial) {
    const Front front = hvtest::random_front(rng);
    const bool fixed = trial % 2 == 0;
    const int mu = rng.uniform_int(fixed ? 3 : 2, 7);
    const ReferencePoint ref{front.x_min() - rng.uniform(0.1, 1.0),
                             front.y_min() - rng.uniform(0.1, 1.0)};
    const MaximizeResult res =
        maximize_hypervolume(front, mu, ref, fixed, opts);
    CHECK(res.stationarity <= 1e-5);
  }
}

TEST_CASE("identical seeds give bitwise identical results") {
  const Front front = Front::power(1.5, 1, 2, 9, 1);
  SolverOptions opts;
  opts.seed = 1234;
  const MaximizeResult a = maximize_hypervolume(front, 6, {0, 0}, false, opts);
  const MaximizeResult b = maximize_hypervolume(front, 6, {0, 0}, false, opts);
  CHECK(a.points.xs() == b.points.xs());
  CHECK(a.objective == b.objective);
  CHECK(a.start_index == b.start_index);

  const OptimalApproximation c = optimal_approximation(front, 6, false, opts);
  const OptimalApproximation d = optimal_approximation(front, 6, false, opts);
  CHECK(c.points.xs() == d.points.xs());
  CHECK(c.delta == d.delta);
}

TEST_CASE("objective history is nondecreasing") {
  Rng rng(403);
  for (int trial = 0; trial < 10; ++trial) {
    const Front front = hvtest::random_front(rng);
    const MaximizeResult res =
        maximize_hypervolume(front, 5, {0, 0}, false);
    for (std::size_t i = 1; i < res.objective_history.size(); ++i)
      CHECK(res.objective_history[i] >=
            res.objective_history[i - 1] - 1e-15);
  }
}

TEST_CASE("tiny iteration budgets raise a convergence error with the iterate") {
  const Front front = Front::power(2, 1, 2, 2, 1);
  SolverOptions opts;
  opts.max_iters = 2;
  try {
    maximize_hypervolume(front, 12, {0, 0}, true, opts);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best.size() == 12);
  }
}

TEST_CASE("invalid arguments are rejected") {
  const Front front = Front::linear(-1, 3);
  CHECK_THROWS_AS(maximize_hypervolume(front, 2, {0, 0}, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(maximize_hypervolume(front, 1, {0, 0}, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimal_approximation(front, 1, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimal_approximation(front, 0, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(maximize_hypervolume(front, 3, {2.0, 0.0}, false),
                  DegenerateReferenceError);
  CHECK_THROWS_AS(maximize_hypervolume(front, 3, {0.0, 1.0}, true),
                  DegenerateReferenceError);
}

TEST_CASE("brute force matches closed forms within grid resolution") {
  // hypervolume objective, mu=3, reciprocal front
  {
    const BruteForceResult res =
        brute_force_best(Front::reciprocal(2), 3, {0, 0}, Objective::hyp, 501);
    const double cell = 1.0 / 500;
    CHECK(hvtest::close_abs(res.points[0], 1.0, cell));
    CHECK(hvtest::close_abs(res.points[1], std::sqrt(2.0), 2 * cell));
    CHECK(hvtest::close_abs(res.points[2], 2.0, cell));
  }
  // approximation objective, mu=2, linear front vs the exact free optimum
  {
    const OptApprox exact = linear_opt_app_dist(-1, 3, 2);
    const BruteForceResult res =
        brute_force_best(Front::linear(-1, 3), 2, {0, 0}, Objective::app, 1001);
    const double cell = 1.0 / 1000;
    CHECK(hvtest::close_abs(res.points[0], exact.points[0], 2 * cell));
    CHECK(hvtest::close_abs(res.points[1], exact.points[1], 2 * cell));
    CHECK(res.objective >= exact.delta - 1e-12);
  }
  // single point, hypervolume: maximize x*f(x) = x(3-x) peaks at 1.5
  {
    const BruteForceResult res =
        brute_force_best(Front::linear(-1, 3), 1, {0, 0}, Objective::hyp, 1001);
    CHECK(hvtest::close_abs(res.points[0], 1.5, 1.0 / 1000));
    CHECK(hvtest::close_abs(res.objective, 1.5 * 1.5, 1e-2));
  }
}

TEST_CASE("brute force honors the clipping reference") {
  const Front front = Front::linear(-1, 3);
  // r2 = 1.5 hides the right half of the front
  const BruteForceResult res =
      brute_force_best(front, 2, {0.0, 1.5}, Objective::hyp, 801);
  const double exact = hyp2d(front, res.points, {0.0, 1.5});
  CHECK(res.objective == doctest::Approx(exact));
  // no point can beat placing mass left of f^{-1}(1.5) = 1.5
  CHECK(res.points[1] <= 1.5 + 2.0 / 800);
}

TEST_CASE("brute force budget and validation errors") {
  const Front front = Front::linear(-1, 3);
  CHECK_THROWS_AS(brute_force_best(front, 4, {0, 0}, Objective::hyp, 2000),
                  BudgetError);
  CHECK_THROWS_AS(brute_force_best(front, 5, {0, 0}, Objective::hyp, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_best(front, 2, {0, 0}, Objective::hyp, 2001),
                  std::invalid_argument);
}

TEST_CASE("numeric solvers track the oracle on one front per family") {
  Rng rng(404);
  SolverOptions opts;
  opts.multistart_count = 4;
  const int grid_n = 501;
  for (const Front& front :
       {hvtest::random_linear(rng), hvtest::random_reciprocal(rng),
        hvtest::random_power(rng)}) {
    const double cell =
        (front.x_max() - front.x_min()) / (grid_n - 1);
    const ReferencePoint ref{0, 0};

    const BruteForceResult bf_hyp =
        brute_force_best(front, 2, ref, Objective::hyp, grid_n);
    const MaximizeResult nm = maximize_hypervolume(front, 2, ref, false, opts);
    REQUIRE(nm.points.size() == 2);
    for (int i = 0; i < 2; ++i)
      CHECK(hvtest::close_abs(nm.points[i], bf_hyp.points[i], 2 * cell));

    const BruteForceResult bf_app =
        brute_force_best(front, 2, ref, Objective::app, grid_n);
    const OptimalApproximation oa = optimal_approximation(front, 2, false);
    for (int i = 0; i < 2; ++i)
      CHECK(hvtest::close_abs(oa.points[i], bf_app.points[i], 2 * cell));
  }
}
