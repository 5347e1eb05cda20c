#ifndef HVAPPROX_SWEEP_HPP
#define HVAPPROX_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hvapprox/front.hpp"
#include "hvapprox/numeric.hpp"
#include "hvapprox/point_set.hpp"

namespace hvapprox {

enum class SweepAxis { mu, scaling, p, ref_grid };
enum class ObjectiveSet { hyp, app, both };
enum class EndpointMode { fixed, free };

struct RangeSpec {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;
  bool log_scale = false;

  std::vector<double> values() const;
};

/**
 * A parameter sweep over one axis:
 *  - mu:       population size varies; front fixed
 *  - scaling:  the power-family right corner x_mu varies; p fixed
 *  - p:        the power-family shape parameter varies; corners fixed
 *  - ref_grid: a (r1, r2) grid; reports the approximation factor of the
 *              reference-point-optimal hypervolume distribution per cell
 *
 * Cells run in a worker pool (capped by the HVAPPROX_THREADS environment
 * variable); rows are emitted in deterministic cell order regardless of
 * completion order, and cell failures are recorded in the status column.
 */
struct SweepSpec {
  explicit SweepSpec(Front base_front) : front(std::move(base_front)) {}

  SweepAxis axis = SweepAxis::mu;
  Front front;
  int mu = 3;
  RangeSpec range;               ///< axis range for mu / scaling / p
  RangeSpec r1_range, r2_range;  ///< axis ranges for ref_grid
  ObjectiveSet objectives = ObjectiveSet::both;
  EndpointMode endpoints = EndpointMode::fixed;
  /// Reference point for free-endpoint hypervolume objectives on the
  /// mu/scaling/p axes (unused for fixed endpoints and for ref_grid).
  std::optional<ReferencePoint> ref;
  SolverOptions solver;
};

struct SweepTable {
  std::vector<std::string> columns;           ///< value columns + "status"
  std::vector<std::vector<double>> values;    ///< NaN marks a failed cell
  std::vector<std::string> status;            ///< "ok" or an error tag
};

SweepTable run_sweep(const SweepSpec& spec);

std::string to_csv(const SweepTable& table);
std::string to_json(const SweepTable& table);

}  // namespace hvapprox

#endif  // HVAPPROX_SWEEP_HPP
