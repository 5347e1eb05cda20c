#ifndef HVAPPROX_HYPERVOLUME_HPP
#define HVAPPROX_HYPERVOLUME_HPP

#include <span>
#include <vector>

#include "hvapprox/front.hpp"
#include "hvapprox/point_set.hpp"

namespace hvapprox {

struct HypResult {
  double value = 0.0;
  std::size_t contributing = 0;  ///< points retained after ref-point clipping
  std::size_t dropped = 0;       ///< points with no positive contribution
  bool no_contributing_points() const { return contributing == 0; }
};

/**
 * Exact two-dimensional hypervolume of the point set relative to the
 * reference point: the Lebesgue measure of the union of boxes
 * [r1, x_i] x [r2, f(x_i)].
 *
 * Computed as a single staircase pass over the ascending coordinates,
 * sum of (x_i - x_{i-1}) * (f(x_i) - r2) with x_0 := r1. Points with
 * x <= r1 or f(x) <= r2 contribute nothing and are dropped (reported via
 * HypResult::dropped); with no contributing points the value is 0.
 */
HypResult hyp2d_info(const Front& front, const PointSet& points,
                     ReferencePoint ref);

double hyp2d(const Front& front, const PointSet& points, ReferencePoint ref);

/// Per-point exclusive hypervolume, aligned with points.xs(). Removing point
/// i from the set decreases hyp2d by exactly contributions(...)[i]; dropped
/// points get 0.
std::vector<double> contributions(const Front& front, const PointSet& points,
                                  ReferencePoint ref);

namespace detail {
/// Staircase pass over coordinates that are already sorted ascending
/// (ties allowed). Used by the optimizers on raw buffers.
double hyp_sorted(const Front& front, std::span<const double> xs,
                  ReferencePoint ref);
}  // namespace detail

}  // namespace hvapprox

#endif  // HVAPPROX_HYPERVOLUME_HPP
