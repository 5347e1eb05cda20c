#ifndef HVAPPROX_NUMERIC_HPP
#define HVAPPROX_NUMERIC_HPP

#include <vector>

#include "hvapprox/approximation.hpp"
#include "hvapprox/front.hpp"
#include "hvapprox/point_set.hpp"

namespace hvapprox {

struct SolverOptions {
  int max_iters = 10000;       ///< coordinate line searches per start
  double x_tol = 1e-10;        ///< 1-D search tolerance (scaled by span)
  double f_tol = 1e-12;        ///< objective-improvement stopping threshold
  int multistart_count = 8;    ///< equally spaced, geometric, seeded-random
  unsigned long long seed = 0; ///< multistart RNG seed; results deterministic
  bool verbose = false;        ///< emit structured diagnostics on stderr
};

enum class Objective { hyp, app };

struct MaximizeResult {
  PointSet points;
  double objective = 0.0;
  double stationarity = 0.0;  ///< projected-gradient sup norm (FD, step 1e-7)
  int iterations = 0;         ///< line searches used by the winning start
  int start_index = 0;        ///< which multistart produced the result
  std::vector<double> objective_history;  ///< per cycle, nondecreasing
};

/**
 * Maximize hyp2d over mu ascending front points by cyclic coordinate ascent
 * with exact 1-D line searches (coarse scan + golden section), multistarted.
 * fixed_endpoints pins x_1 = x_min and x_mu = x_max (mu >= 3); otherwise all
 * mu coordinates are free (mu >= 2) and the reference point determines how
 * far the end points retract. Deterministic for a given seed. Throws
 * ConvergenceError if no start converges within max_iters.
 */
MaximizeResult maximize_hypervolume(const Front& front, int mu,
                                    ReferencePoint ref, bool fixed_endpoints,
                                    const SolverOptions& opts = {});

struct OptimalApproximation {
  PointSet points;
  Certificate certificate;
  double delta = 1.0;
  int iterations = 0;
};

/**
 * Solve the equalized-ratio system for the optimal approximation
 * distribution, as a one-dimensional bisection over delta with forward
 * propagation: starting from z_0 = x_min, alternately
 * x_{i+1} = f^{-1}(f(z_i)/delta) and z_{i+1} = delta * x_{i+1}. The terminal
 * overshoot past x_max is strictly increasing in delta, so bisection applies.
 * Free mode needs mu >= 1, fixed mode mu >= 2. The returned certificate
 * passes check_certificate.
 */
OptimalApproximation optimal_approximation(const Front& front, int mu,
                                           bool fixed_endpoints,
                                           const SolverOptions& opts = {});

struct BruteForceResult {
  PointSet points;
  double objective = 0.0;  ///< hypervolume, or approximation ratio
};

/**
 * Independent oracle: exhaustive search over ascending mu-tuples drawn from a
 * uniform grid of grid_n domain points (mu <= 4, grid_n <= 2000). The result
 * is within one grid cell of the true optimum in each coordinate. Throws
 * BudgetError when the tuple count exceeds the enumeration budget.
 */
BruteForceResult brute_force_best(const Front& front, int mu,
                                  ReferencePoint ref, Objective objective,
                                  int grid_n);

}  // namespace hvapprox

#endif  // HVAPPROX_NUMERIC_HPP
