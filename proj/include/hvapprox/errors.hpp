#ifndef HVAPPROX_ERRORS_HPP
#define HVAPPROX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hvapprox {

/// Numerical failure in an iterative solver (non-convergence, broken bracket).
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Solver stopped at max_iters; carries the best iterate found so far.
class ConvergenceError : public SolverError {
 public:
  ConvergenceError(const std::string& what, std::vector<double> best_iterate,
                   double residual)
      : SolverError(what),
        best(std::move(best_iterate)),
        residual(residual) {}

  std::vector<double> best;
  double residual;
};

/// Exhaustive-search budget exceeded (too many grid tuples).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Reference point leaves no usable portion of the front.
class DegenerateReferenceError : public std::invalid_argument {
 public:
  explicit DegenerateReferenceError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// No reference-point regime matches the given front/ref combination.
class RegimeError : public std::invalid_argument {
 public:
  explicit RegimeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Certificate structure is malformed (interleaving violated, wrong length).
class CertificateError : public std::invalid_argument {
 public:
  explicit CertificateError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace hvapprox

#endif  // HVAPPROX_ERRORS_HPP
